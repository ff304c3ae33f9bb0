from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from graphpoly import graphs as G
from graphpoly.polys import (
    BASES,
    MultiPoly,
    PolyError,
    basis_convert,
    basis_poly,
    canonical_text,
    divide_exact,
    find_linear_recurrence,
    interpolate_univariate,
    parse_poly,
    substitute,
)

from conftest import polys

X, Y = MultiPoly.var("X"), MultiPoly.var("Y")
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == MultiPoly()


@given(polys(), polys(vars=("X",), max_deg=2), rationals)
def test_substitution_composes(p, q, r):
    lhs = substitute(p, "X", q).eval_rational({"X": r, "Y": r + 1})
    rhs = p.eval_rational({"X": q.eval_rational({"X": r}), "Y": r + 1})
    assert lhs == rhs


def test_substitute_potts_to_chromatic():
    assert substitute(X ** 2 + X * Y, "Y", -1) == X ** 2 - X
    assert (X ** 2 + X * Y).eval_rational({"X": 2, "Y": -1}) == 2


@given(polys())
def test_canonical_text_roundtrip(p):
    assert parse_poly(canonical_text(p)) == p


def test_canonical_text_examples():
    assert canonical_text(X ** 3 - 3 * X ** 2 + 2 * X) == "X^3 - 3*X^2 + 2*X"
    assert canonical_text(MultiPoly()) == "0"


@given(st.lists(st.integers(-9, 9), max_size=9),
       st.sampled_from(BASES), st.sampled_from(BASES))
def test_basis_conversion_inverse(coeffs, a, b):
    p = MultiPoly.from_coeffs(coeffs)
    there = basis_convert(p, a, b)
    assert basis_convert(there, b, a) == p


def test_reinterpret_into_binomial():
    got = basis_convert(X + X ** 2, "power", "binomial", mode="reinterpret")
    assert got == (X ** 2 + X) / 2


def test_falling_factorial():
    assert basis_poly("falling", 3) == X * (X - 1) * (X - 2)
    assert basis_poly("rising", 2) == X * (X + 1)


def test_interpolation_example():
    assert interpolate_univariate([(0, 0), (1, 0), (2, 2), (3, 6)]) == X ** 2 - X
    with pytest.raises(PolyError):
        interpolate_univariate([(1, 0), (1, 2)])


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_interpolation_recovers(coeffs):
    p = MultiPoly.from_coeffs(coeffs)
    pts = [(x, p.eval_rational({"X": x})) for x in range(len(coeffs))]
    assert interpolate_univariate(pts) == p


@given(polys(max_deg=2), polys(max_deg=2))
def test_exact_division(a, b):
    assume(not b.is_zero)
    assert divide_exact(a * b, b) == a


def test_division_refuses_remainder():
    with pytest.raises(PolyError):
        divide_exact(X ** 2 + 1, X + 1)
    # monomials are units in the Laurent ring
    assert divide_exact(X ** 2 + 1, X) == X + X ** -1


def _path_matchings(n_max):
    from graphpoly import zoo

    return [zoo.matching_gen(G.path(n)) for n in range(1, n_max + 1)]


def test_path_matching_recurrence():
    seq = _path_matchings(10)
    p, a = find_linear_recurrence(seq[:7], 3)
    assert p == 2 and a == [X, MultiPoly.const(1)]
    for i in range(7, 10):
        assert seq[i] == a[0] * seq[i - 2] + a[1] * seq[i - 1]


def test_recurrence_needs_enough_terms():
    with pytest.raises(PolyError):
        find_linear_recurrence([X, X], 2)


@given(st.lists(polys(vars=("X",), max_deg=1), min_size=2, max_size=2),
       st.lists(polys(vars=("X",), max_deg=1), min_size=2, max_size=2))
def test_recurrence_reverifies_on_held_out(coeffs, init):
    assume(not coeffs[0].is_zero)
    seq = list(init)
    for i in range(12):
        seq.append(coeffs[0] * seq[-2] + coeffs[1] * seq[-1])
    found = find_linear_recurrence(seq[:9], 4)
    assert found is not None and found[0] <= 2
    p, a = found
    for i in range(9, len(seq)):
        assert seq[i] == sum((a[j] * seq[i - p + j] for j in range(p)), MultiPoly())


def test_json_roundtrip():
    p = X ** 2 * Fraction(1, 3) - Y
    assert MultiPoly.from_json(p.to_json()) == p


def test_laurent_exponents():
    p = X ** -2
    assert p.has_negative_exponents()
    assert (p * X ** 2) == MultiPoly.const(1)
