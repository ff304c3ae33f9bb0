import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphpoly import graphs as G
from graphpoly import zoo
from graphpoly.guards import GUARDS, GuardExceeded
from graphpoly.polys import MultiPoly, basis_poly, substitute

from conftest import graph_of, graphs, poly_from_list, tutte_from_triples

X, Y = MultiPoly.var("X"), MultiPoly.var("Y")
K1, K2, K3, E2 = G.complete(1), G.complete(2), G.complete(3), G.empty(2)


def _upto5(frozen):
    return [r for r in frozen["graphs"] if r["n"] <= 5]


def test_chromatic_matches_colouring_oracle(frozen):
    for rec in _upto5(frozen):
        assert zoo.chromatic(graph_of(rec)) == poly_from_list(rec["chromatic"]), rec["g6"]


def test_tutte_matches_subset_expansion(frozen):
    for rec in _upto5(frozen):
        assert zoo.tutte(graph_of(rec)) == tutte_from_triples(rec["tutte"]), rec["g6"]


def test_counting_polys_match_oracle(frozen):
    for rec in _upto5(frozen):
        g = graph_of(rec)
        assert zoo.independence(g) == poly_from_list(rec["independence"])
        assert zoo.domination(g) == poly_from_list(rec["dominating"])
        assert list(zoo.matching_counts(g)) == rec["matching_counts"] + [0] * (
            len(zoo.matching_counts(g)) - len(rec["matching_counts"]))


def test_characteristic_polys_match_leibniz(frozen):
    for rec in frozen["graphs"]:
        g = graph_of(rec)
        assert zoo.char_poly_adjacency(g) == poly_from_list(rec["char_adjacency"])
        assert zoo.laplacian_char(g) == poly_from_list(rec["char_laplacian"])


def test_mcp_matches_brute_force(frozen):
    seen = 0
    for rec in _upto5(frozen):
        if "mcp_colourings" in rec:
            p = zoo.mcp_poly(graph_of(rec))
            assert [p.eval_rational({"X": k}) for k in range(4)] == rec["mcp_colourings"]
            seen += 1
    assert seen > 30


def test_small_values():
    assert zoo.potts(K2) == X ** 2 + X * Y
    assert zoo.chromatic(K3) == X ** 3 - 3 * X ** 2 + 2 * X
    assert zoo.tutte(G.cycle(3)) == X ** 2 + X + Y
    assert zoo.matching_gen(G.path(3)) == 1 + 2 * X
    assert zoo.matching_defect(K2) == X ** 2 - 1
    assert substitute(zoo.matching_bivar(K2), "Y", X) == X ** 2 + X
    assert zoo.independence(G.path(3)) == 1 + 3 * X + X ** 2
    assert zoo.laplacian_char(K2) == X ** 2 - 2 * X
    assert zoo.domination(K2) == 2 * X + X ** 2
    assert zoo.domination(E2) == X ** 2
    assert zoo.chromatic_complement(K2) == X ** 2
    assert zoo.potts(E2) == X ** 2


def test_spanning_tree_poly_triangle():
    e = {(u, v): MultiPoly.var(zoo.edge_var(u, v)) for u, v in K3.edge_list}
    assert zoo.spanning_tree_poly(K3) == e[0, 1] * e[1, 2] + e[0, 1] * e[0, 2] + e[0, 2] * e[1, 2]


def test_spanning_tree_poly_counts(frozen):
    for rec in _upto5(frozen):
        g = graph_of(rec)
        if rec["k"] != 1:
            with pytest.raises(ValueError):
                zoo.spanning_tree_poly(g)
            continue
        p = zoo.spanning_tree_poly(g)
        value = p.eval_rational({v: 1 for v in p.vars}) if p.vars else p.constant_value()
        assert value == rec["spanning_trees"]


def test_self_complementary_c5():
    assert zoo.chromatic_complement(G.cycle(5)) == zoo.chromatic(G.cycle(5))


def test_harary_edgeless_is_chromatic():
    C = zoo.get_property("edgeless")
    for g in G.enumerate_catalog(5, upto=True):
        assert zoo.harary(C, g) == zoo.chromatic(g)


def test_harary_connected_on_cliques(frozen):
    conn = zoo.get_property("connected")
    for row in frozen["harary_complete_connected"]:
        Ki = G.complete(row["i"])
        assert zoo.harary(conn, Ki).eval_rational({"X": 2}) == row["connected_two_colourings"]
        b = zoo.harary_counts(conn, Ki)
        both = b[2] * 2 if len(b) > 2 else 0
        assert both == row["using_both_colours"]


def test_framework_values():
    one, pair = zoo.get_property("singleton"), zoo.get_property("pair-set")
    for g in G.enumerate_catalog(5, upto=True):
        assert zoo.gen_ind(one, g) == X * g.n
        assert zoo.gen_ind(pair, g) == X ** 2 * (g.n * (g.n - 1) // 2)


@pytest.mark.parametrize("i", [3, 4, 5, 6])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_cycle_property_values(i, k):
    P = zoo.cycle_property(i)
    assert zoo.gen_ind(P, G.cycle_copies(i, k)) == k * X ** i
    with GUARDS.raised(HARARY_MAX_N=18):
        assert zoo.harary(P, G.cycle_copies(i, k)) == basis_poly("falling", k)


def test_gen_span_requires_closure():
    with pytest.raises(ValueError):
        zoo.gen_span(zoo.get_property("connected"), K2)


def test_guard_refuses_large_input():
    with pytest.raises(GuardExceeded) as exc:
        zoo.tutte(G.complete(8))
    assert "TUTTE_MAX_M" in str(exc.value)
    with GUARDS.raised(TUTTE_MAX_M=28):
        assert GUARDS["TUTTE_MAX_M"] == 28
    assert GUARDS["TUTTE_MAX_M"] == 20


FIXED_ARITY = [n for n, d in zoo.REGISTRY.items() if not d.edge_indexed]


@pytest.mark.parametrize("name", FIXED_ARITY)
@given(g=graphs(max_n=5), data=st.data())
def test_isomorphism_invariance(name, g, data):
    if name == "mcp" and g.m > 7:
        return
    perm = data.draw(st.permutations(list(range(g.n))))
    P = zoo.get_poly(name)
    assert P(g) == P(g.relabel(perm))


@given(graphs(max_n=6))
def test_chromatic_is_potts_at_minus_one(g):
    assert zoo.chromatic(g) == substitute(zoo.potts(g), "Y", -1)


@given(graphs(max_n=6))
def test_complement_identity_random(g):
    for name in ("edgeless", "connected", "forest"):
        C = zoo.get_property(name)
        assert zoo.gen_ind(C, g) + zoo.gen_ind(C.negate(), g) == (1 + X) ** g.n
