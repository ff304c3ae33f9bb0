import itertools
from functools import lru_cache

import pytest

from graphpoly import equiv as E
from graphpoly import graphs as G
from graphpoly import zoo
from graphpoly.polys import MultiPoly

X, Y = MultiPoly.var("X"), MultiPoly.var("Y")


@lru_cache(maxsize=None)
def cat(spec):
    return E.parse_catalog_spec(spec)


def test_catalog_spec_grammar():
    assert len(cat("n<=4")) == 1 + 1 + 2 + 4 + 11
    assert len(cat("n=4")) == 11
    assert len(cat("n=3,connected")) == 2
    with pytest.raises(ValueError):
        E.parse_catalog_spec("m<=3")
    with pytest.raises(ValueError):
        E.parse_catalog_spec("n<=3,planar")


def test_self_comparison_is_equivalent():
    for name in ("chromatic", "independence", "char_poly_adjacency"):
        P = zoo.get_poly(name)
        assert E.dp_compare(P, P, cat("n<=5")).relation == "equivalent"


def test_chromatic_below_tutte_needs_similarity():
    chi, T, U = (zoo.get_poly(n) for n in ("chromatic", "tutte", "universal_tutte"))
    v = E.dp_compare(chi, T, cat("n<=5"))
    # the Tutte polynomial ignores isolated vertices: K_0 and K_1 collide
    assert v.relation == "incomparable"
    assert any({w.g6_a, w.g6_b} == {"?", "@"} for w in v.witnesses)
    assert E.sdp_compare(chi, T, cat("n<=5")).relation == "left-at-most-right"
    assert E.dp_compare(chi, U, cat("n<=5")).relation == "left-at-most-right"
    assert E.dp_compare(chi, T, cat("n<=5,connected")).relation == "left-at-most-right"


def test_build_F_total_map():
    chi, U = zoo.get_poly("chromatic"), zoo.get_poly("universal_tutte")
    F = E.build_F(chi, U, cat("n<=5"))
    assert F.ok and F.refutation is None
    for g in cat("n<=5"):
        from graphpoly.polys import canonical_text

        assert F.table[canonical_text(U(g))] == canonical_text(chi(g))
    assert E.build_F(chi, zoo.get_poly("tutte"), cat("n<=5"), scope="sdp").ok


def test_build_F_refutation_for_spectra():
    F = E.build_F(zoo.get_poly("laplacian_char"), zoo.get_poly("char_poly_adjacency"), cat("n<=6"))
    assert not F.ok
    a, b = (G.parse_graph6(x) for x in F.refutation)
    assert zoo.char_poly_adjacency(a) == zoo.char_poly_adjacency(b)
    assert zoo.laplacian_char(a) != zoo.laplacian_char(b)


def test_spectral_sdp_incomparable():
    P, Q = zoo.get_poly("char_poly_adjacency"), zoo.get_poly("laplacian_char")
    v = E.sdp_compare(P, Q, cat("n<=6"))
    assert v.relation == "incomparable"
    assert {w.distinguished_by for w in v.witnesses} == {"left", "right"}
    assert all(w.similar for w in v.witnesses)


PAIRS = [
    ("chromatic", "tutte"), ("independence", "clique_poly"), ("matching_gen", "matching_defect"),
    ("char_poly_adjacency", "laplacian_char"), ("domination", "independence"), ("potts", "chromatic"),
]


@pytest.mark.parametrize("left,right", PAIRS)
def test_dp_refines_sdp_and_witnesses_verify(left, right):
    P, Q = zoo.get_poly(left), zoo.get_poly(right)
    c = cat("n<=5")
    dp, sdp = E.dp_compare(P, Q, c), E.sdp_compare(P, Q, c)
    order = {"equivalent": {"left", "right"}, "left-at-most-right": {"left"},
             "right-at-most-left": {"right"}, "incomparable": set()}
    assert order[dp.relation] <= order[sdp.relation]
    for v, scope in ((dp, "dp"), (sdp, "sdp")):
        for w in v.witnesses:
            assert E.verify_witness(w, P, Q, scope)


def test_property_equivalence_forest_vs_triangle_free():
    v = E.property_dp_equivalent(zoo.get_property("forest"), zoo.get_property("triangle-free"), cat("n<=5"))
    assert not v.dp_equivalent
    assert any(G.is_isomorphic(G.parse_graph6(w), G.cycle(4)) for w in v.witnesses)


def test_P_uniqueness():
    assert E.is_P_unique(G.complete(3), zoo.get_poly("chromatic"), cat("n<=4"))
    F = E.build_F(zoo.get_poly("laplacian_char"), zoo.get_poly("char_poly_adjacency"), cat("n<=6"))
    g = G.parse_graph6(F.refutation[0])
    assert not E.is_P_unique(g, zoo.get_poly("char_poly_adjacency"), cat("n<=6"))


def test_prefactor_relation_and_rejection():
    mu, gm = zoo.get_poly("matching_defect"), zoo.get_poly("matching_gen")
    ok = E.verify_prefactor_relation(mu, gm, lambda t: X ** t.n, {"X": lambda t: -(X ** -2)}, cat("n<=5"))
    assert ok.ok and ok.checked > 0
    bad = E.verify_prefactor_relation(mu, gm, lambda t: X ** t.n, {"X": lambda t: X ** -2}, cat("n<=5"))
    assert not bad.ok and bad.graph is not None


def test_basis_presentations_share_partition():
    from graphpoly.polys import basis_convert

    base = zoo.get_poly("chromatic")
    blocks = []
    for b in ("power", "falling", "rising", "binomial"):
        P = zoo.poly_from_function(b, lambda g, b=b: basis_convert(base(g), "power", b, "reinterpret"))
        blocks.append(E.partition_by(P, cat("n<=5")).blocks)
    assert all(x == blocks[0] for x in blocks)


@pytest.mark.parametrize("framework,target,representable", [
    ("gen_ind", "independence", True),
    ("gen_span", "matching_gen", True),
    ("gen_ind", "domination", False),
    ("gen_span", "domination", False),
    ("harary", "domination", False),
    ("harary", "mcp", False),
    ("gen_ind", "mcp", False),
    ("gen_ind", "char_poly_adjacency", False),
    ("harary", "laplacian_det_form", False),
])
def test_representability_search(framework, target, representable):
    r = E.search_representation(framework, zoo.get_poly(target), 3)
    assert r.representable == representable
    if representable:
        members = [G.parse_graph6(x) for x in r.solutions[0]]
        C = E.table_property(members, closed=framework == "gen_span")
        P = zoo.framework_poly(framework, C)
        for g in G.enumerate_catalog(3, upto=True)[1:]:
            assert P(g) == zoo.get_poly(target)(g)
