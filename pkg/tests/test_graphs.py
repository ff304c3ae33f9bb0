import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphpoly import graphs as G
from graphpoly.graphs import Graph, GraphFormatError

from conftest import graph_of, graphs


def test_graph6_small_examples():
    k2 = G.parse_graph6("A_")
    assert (k2.n, list(k2.edge_list)) == (2, [(0, 1)])
    e2 = G.parse_graph6("A?")
    assert (e2.n, e2.m) == (2, 0)
    assert G.encode_graph6(G.empty(0)) == "?"


def test_graph6_matches_networkx(frozen):
    for rec in frozen["graphs"]:
        g = graph_of(rec)
        assert G.encode_graph6(g) == rec["g6"]
        assert G.parse_graph6(rec["g6"]) == g


@given(graphs(max_n=9))
def test_graph6_roundtrip(g):
    assert G.parse_graph6(G.encode_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "!!", "A", "Bw_", "~?"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphFormatError):
        G.parse_graph6(bad)


def test_edge_list_parse_and_format():
    g = G.parse_edges("n=3;0-1,1-2,0-2")
    assert g == G.complete(3)
    assert G.parse_edges(G.format_edges(g)) == g
    with pytest.raises(GraphFormatError):
        G.parse_edges("n=2;0-5")
    with pytest.raises(GraphFormatError):
        G.parse_edges("n=2;1-1")


def test_family_facts():
    f = G.analyze(G.complete(3))
    assert (f.triple.n, f.triple.m, f.triple.k) == (3, 3, 1)
    assert f.spanning_tree_count == 3 and f.clique
    c4 = G.analyze(G.cycle(4))
    assert c4.triangle_free and c4.bipartite and c4.spanning_tree_count == 4
    with pytest.raises(ValueError):
        G.cycle(2)
    with pytest.raises(ValueError):
        G.cycle_star(3)


@pytest.mark.parametrize("i,k", [(4, 1), (4, 2), (5, 3), (6, 2)])
def test_cycle_families_are_similar(i, k):
    a, b = G.similarity(G.cycle_copies(i, k)), G.similarity(G.cycle_copies_hat(i, k))
    assert a == b
    assert (a.n, a.m, a.k) == (i * k, i * k, k)


def test_g42_similarity():
    s = G.similarity(G.cycle_copies_hat(4, 2))
    assert (s.n, s.m, s.k) == (8, 8, 2)


def test_catalog_counts_match_oracle(frozen):
    counts = frozen["class_counts"]
    for n in range(0, 7):
        assert len(G.enumerate_catalog(n)) == counts[n]
    assert len(G.enumerate_catalog(6, upto=True)) == sum(counts[:7])


def test_catalog_connected_small():
    got = G.enumerate_catalog(3, G.is_connected)
    assert sorted(g.m for g in got) == [2, 3]


def test_forest_catalog_counts(frozen):
    forests = G.enumerate_catalog(8, G.is_forest, upto=True, hereditary=True)
    per_n = [0] * 9
    for g in forests:
        per_n[g.n] += 1
    assert per_n == frozen["forest_counts"]


def test_catalog_has_no_isomorphic_pairs():
    cat = G.enumerate_catalog(5, upto=True)
    for a, b in itertools.combinations(cat, 2):
        if (a.n, a.m) == (b.n, b.m):
            assert not G.is_isomorphic(a, b)


def test_catalog_is_closed_under_isomorphism(frozen):
    canon = {(g.n, G.canonical_code(g)) for g in G.enumerate_catalog(5, upto=True)}
    for rec in frozen["graphs"]:
        if rec["n"] <= 5:
            g = graph_of(rec)
            assert (g.n, G.canonical_code(g)) in canon


@given(graphs(max_n=7), st.randoms())
def test_canonical_form_is_label_free(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert G.canonical_form(g) == G.canonical_form(h)
    assert G.is_isomorphic(g, h)


@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_agrees_with_networkx(a, b):
    def nxg(g):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edge_list)
        return h

    assert G.is_isomorphic(a, b) == nx.is_isomorphic(nxg(a), nxg(b))


@given(graphs(max_n=8))
def test_complement_edge_count(g):
    c = G.complement(g)
    assert c.n == g.n and c.m == g.n * (g.n - 1) // 2 - g.m


@pytest.mark.parametrize("n", range(1, 7))
def test_cayley(n):
    assert G.spanning_tree_count(G.complete(n)) == (n ** (n - 2) if n >= 2 else 1)


def test_spanning_tree_count_matches_oracle(frozen):
    for rec in frozen["graphs"]:
        if rec["k"] == 1:
            assert G.spanning_tree_count(graph_of(rec)) == rec["spanning_trees"]


@given(graphs(max_n=7))
def test_structural_predicates_match_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list)
    assert G.is_forest(g) == (g.n == 0 or nx.is_forest(h))
    assert G.is_bipartite(g) == nx.is_bipartite(h)
    assert G.is_triangle_free(g) == (sum(nx.triangles(h).values()) == 0)
    assert g.k == nx.number_connected_components(h)
