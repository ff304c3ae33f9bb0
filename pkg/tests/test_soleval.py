import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphpoly import graphs as G
from graphpoly import soleval as S
from graphpoly import zoo
from graphpoly.polys import MultiPoly

from conftest import graphs

X = MultiPoly.var("X")
P3 = G.path(3)

PRIMARY_FIXTURES = [
    "order", "components", "x_to_k", "clique_count", "max_clique_count", "clique_number",
    "clique_poly", "independence", "potts", "char_poly_perm",
]


def test_atoms_and_quantifiers():
    assert S.eval_formula(G.complete(2), "E(0,1)")
    assert not S.eval_formula(G.empty(2), "E(0,1)")
    assert S.eval_formula(G.empty(3), "exists R:1. all v. R(v)")
    assert S.eval_formula(G.cycle(4), "all u. exists v. E(u,v)")
    assert not S.eval_formula(P3, "all u. all v. u = v | E(u,v)")


def test_free_symbols_bound_by_structure():
    s = S.Structure(P3, {"x": 0, "y": 1, "A": S.Relation(1, [(0,), (2,)])})
    assert S.eval_formula(s, "E(x,y) & A(x) & ~A(y)")
    with pytest.raises(S.SolBindingError):
        S.eval_formula(P3, "E(x,y)")
    with pytest.raises(S.SolBindingError):
        S.eval_formula(S.Structure(P3, {"A": 0}), "A(0)")


def test_inline_independence_term():
    t = "bigsum{A:1 | all u. all v. (A(u) & A(v) & E(u,v)) -> false} prod{v | A(v)} X"
    assert S.eval_term(P3, t) == 1 + 3 * X + X ** 2


def test_components_and_x_to_k():
    two_triangles = G.cycle_copies(3, 2)
    assert S.eval_term(two_triangles, S.load_fixture("components")) == MultiPoly.const(2)
    assert S.eval_term(G.empty(2), S.load_fixture("x_to_k")) == X ** 2


def test_clique_poly_on_triangle():
    assert S.eval_term(G.complete(3), S.load_fixture("clique_poly")) == (1 + X) ** 3


@pytest.mark.parametrize("name", PRIMARY_FIXTURES)
def test_fixture_agrees_with_reference(name):
    ref, nmax = S.fixture_reference(name)
    t = S.load_fixture(name)
    for g in G.enumerate_catalog(min(nmax, 4 if name != "char_poly_perm" else 3), upto=True):
        assert S.eval_term(g, t) == ref(g), (name, G.format_edges(g))


def test_shipped_fixture_set():
    names = set(S.fixture_names())
    assert set(PRIMARY_FIXTURES) <= names
    assert sum(1 for n in PRIMARY_FIXTURES if S.fixture_reference(n)) == 10


@pytest.mark.parametrize("pair", S.EQUIVALENT_PAIRS)
def test_equivalent_fixtures(pair):
    a, b = (S.load_fixture(n) for n in pair)
    for g in G.enumerate_catalog(4, upto=True):
        assert S.eval_term(g, a) == S.eval_term(g, b)


def test_order_invariance():
    assert S.check_order_invariance(S.load_fixture("x_to_k"), G.path(4))[0]
    ok, perm = S.check_order_invariance(S.load_fixture("order_dependent"), P3)
    assert not ok and sorted(perm) == [0, 1, 2]
    # the first vertex alone is a label-free singleton
    assert S.check_order_invariance("prod{v | v < 1} X", P3)[0]


@pytest.mark.parametrize("text,line,col", [
    ("X + (", 1, 6),
    ("sum{v | R(v)} X", 1, 9),
    ("sum{v | E(v)} X", 1, 9),
    ("prod{v | E(v,w)} X", 1, 14),
])
def test_errors_have_positions(text, line, col):
    with pytest.raises(S.SolError) as exc:
        S.parse_term(text)
    assert (exc.value.line, exc.value.col) == (line, col)
    assert f"line {line}, column {col}" in str(exc.value)


def test_arity_mismatch_message():
    with pytest.raises(S.SolBindingError, match="arity"):
        S.parse_term("sum{v | E(v)} X")


@pytest.mark.parametrize("name", sorted(S.fixture_names()))
def test_printer_fixpoint_on_fixtures(name):
    t = S.load_fixture(name)
    text = S.format_term(t)
    assert S.parse_term(text) == t
    assert S.format_term(S.parse_term(text)) == text


def test_closure_under_ring_operations():
    a, b = S.load_fixture("independence"), S.load_fixture("clique_poly")
    for g in G.enumerate_catalog(4, upto=True):
        ia, ib = S.eval_term(g, a), S.eval_term(g, b)
        both = S.parse_term(f"({S.format_term(a)}) * ({S.format_term(b)}) + ({S.format_term(a)})")
        assert S.eval_term(g, both) == ia * ib + ia


def test_substitution_term():
    t = S.parse_term("(sum{v | true} X)[X := X + 1]")
    assert S.eval_term(P3, t) == 3 * (X + 1)


def test_piecewise_combine():
    P = zoo.get_poly("independence")
    Q = zoo.get_poly("clique_poly")
    K = zoo.get_property("connected")
    R = S.piecewise_combine(P, Q, K)
    assert R(P3) == zoo.clique_poly(P3)
    assert R(G.empty(2)) == zoo.independence(G.empty(2))
    with pytest.raises(ValueError):
        S.piecewise_combine(P, zoo.get_poly("potts"), K)


# random formulas over two bound vertex names, printed and reparsed

_atoms = st.sampled_from(["E(u,v)", "E(v,u)", "u = v", "u < v", "v < u", "true", "false", "u != v"])


def _formulas():
    return st.recursive(
        _atoms,
        lambda inner: st.one_of(
            st.builds(lambda a: f"~({a})", inner),
            st.builds(lambda a, b: f"({a}) & ({b})", inner, inner),
            st.builds(lambda a, b: f"({a}) | ({b})", inner, inner),
            st.builds(lambda a, b: f"({a}) -> ({b})", inner, inner),
            st.builds(lambda a, b: f"({a}) <-> ({b})", inner, inner),
        ),
        max_leaves=6,
    )


@given(_formulas(), st.sampled_from(["all", "exists"]), st.sampled_from(["all", "exists"]), graphs(max_n=4))
def test_random_formula_roundtrip(body, q1, q2, g):
    f = S.parse_formula(f"{q1} u. {q2} v. {body}")
    text = S.format_formula(f)
    g2 = S.parse_formula(text)
    assert g2 == f
    assert S.format_formula(g2) == text
    assert S.eval_formula(g, f) == S.eval_formula(g, g2)


@given(_formulas(), graphs(max_n=4))
def test_small_sum_counts_pairs(body, g):
    t = S.parse_term(f"sum{{u, v | {body}}} 1")
    f = S.parse_formula(body)
    expect = sum(
        S.eval_formula(S.Structure(g, {"u": a, "v": b}), f) for a in range(g.n) for b in range(g.n)
    )
    assert S.eval_term(g, t) == MultiPoly.const(expect)
