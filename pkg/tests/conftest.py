import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from graphpoly.graphs import Graph
from graphpoly.polys import MultiPoly

settings.register_profile(
    "default", deadline=None, max_examples=60, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

DATA = Path(__file__).parent / "data" / "oracle_values.json"


@pytest.fixture(scope="session")
def frozen():
    return json.loads(DATA.read_text())


def poly_from_list(coeffs, var="X"):
    return MultiPoly.from_coeffs(coeffs, var)


def tutte_from_triples(triples):
    return sum((MultiPoly.monomial({"X": i, "Y": j}, c) for i, j, c in triples), MultiPoly())


def graph_of(rec):
    return Graph.from_edges(rec["n"], [tuple(e) for e in rec["edges"]])


@st.composite
def graphs(draw, max_n=6, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


small_ints = st.integers(-5, 5)


@st.composite
def polys(draw, vars=("X", "Y"), max_deg=3, max_terms=4):
    terms = draw(st.lists(
        st.tuples(st.tuples(*[st.integers(0, max_deg) for _ in vars]), small_ints),
        max_size=max_terms,
    ))
    acc = {}
    for e, c in terms:
        acc[e] = acc.get(e, 0) + c
    return MultiPoly(vars, acc)


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
