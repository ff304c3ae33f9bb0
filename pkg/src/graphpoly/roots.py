"""Exact root location tests and the stability rewrites."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Any, Sequence

from . import guards
from .graphs import Graph, encode_graph6
from .polys import MultiPoly, PolyError, divide_exact
from .zoo import GraphPolyDef, edge_var


# -- univariate helpers on coefficient lists (low degree first) -------------

def _coeffs(p: MultiPoly) -> list[Fraction]:
    if p.is_zero:
        raise PolyError("zero polynomial")
    return [Fraction(c) for c in p.univariate_coeffs()]


def _trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
        _trim(a)
    return a


def _quot(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
        _trim(a)
    if a:
        raise PolyError("inexact division")
    return q


def _deriv(a: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(a)][1:]


def _gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _rem(a, b)
    return [c / a[-1] for c in a]


def _horner(a: list[Fraction], x: Fraction) -> Fraction:
    v = Fraction(0)
    for c in reversed(a):
        v = v * x + c
    return v


def squarefree_part(p: MultiPoly) -> MultiPoly:
    a = _coeffs(p)
    if len(a) <= 1:
        return MultiPoly.from_coeffs(a, p.sole_var())
    return MultiPoly.from_coeffs(_quot(a, _gcd(a, _deriv(a))), p.sole_var())


def _sturm_chain(a: list[Fraction]) -> list[list[Fraction]]:
    chain = [a, _deriv(a)]
    while chain[-1]:
        r = _rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _variations(signs: list[int]) -> int:
    s = [x for x in signs if x]
    return sum(1 for u, v in zip(s, s[1:]) if u != v)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _signs_at(chain, x: Fraction | None, neg_inf: bool = False) -> list[int]:
    if x is None:
        out = []
        for c in chain:
            s = _sign(c[-1])
            if neg_inf and (len(c) - 1) % 2:
                s = -s
            out.append(s)
        return out
    return [_sign(_horner(c, x)) for c in chain]


def sturm_count(p: MultiPoly, lo: Any = None, hi: Any = None) -> int:
    """Number of distinct real roots in (lo, hi]; None means infinite."""
    a = _coeffs(squarefree_part(p))
    if len(a) == 1:
        return 0
    chain = _sturm_chain(a)
    vlo = _variations(_signs_at(chain, None if lo is None else Fraction(lo), neg_inf=True))
    vhi = _variations(_signs_at(chain, None if hi is None else Fraction(hi)))
    return vlo - vhi


def is_real_rooted(p: MultiPoly) -> bool:
    s = squarefree_part(p)
    return sturm_count(s) == s.degree()


def root_multiplicity_at(p: MultiPoly, a: Any) -> int:
    c = _coeffs(p)
    a = Fraction(a)
    k = 0
    while len(c) > 1 and _horner(c, a) == 0:
        # synthetic division by (X - a)
        q = [Fraction(0)] * (len(c) - 1)
        q[-1] = c[-1]
        for i in range(len(c) - 2, 0, -1):
            q[i - 1] = c[i] + a * q[i]
        c = q
        k += 1
    return k


def cauchy_bound(p: MultiPoly) -> Fraction:
    a = _coeffs(p)
    lead = a[-1]
    if len(a) == 1:
        return Fraction(1)
    return 1 + max(abs(c / lead) for c in a[:-1])


def schur_cohn_in_disk(p: MultiPoly, R: Any = 1) -> bool:
    """True iff every root lies in the open disk |z| < R."""
    R = Fraction(R)
    if R <= 0:
        raise ValueError("radius must be positive")
    a = _coeffs(p)
    if len(a) < 2:
        raise PolyError("Schur-Cohn test needs degree >= 1")
    a = [c * R ** i for i, c in enumerate(a)]
    while len(a) > 1:
        lead, const = a[-1], a[0]
        if abs(const) >= abs(lead):
            return False
        rev = list(reversed(a))
        red = [lead * x - const * y for x, y in zip(a, rev)]
        # constant term vanishes; divide by z
        a = _trim(red[1:])
    return True


# -- exact complex rationals -------------------------------------------------

@dataclass(frozen=True)
class GaussQ:
    re: Fraction
    im: Fraction = Fraction(0)

    def _lift(self, o: Any) -> "GaussQ":
        return o if isinstance(o, GaussQ) else GaussQ(Fraction(o))

    def __add__(self, o):
        o = self._lift(o)
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._lift(o)
        return GaussQ(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        o = self._lift(o)
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "GaussQ":
        d = self.re * self.re + self.im * self.im
        return GaussQ(self.re / d, -self.im / d)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        out, base = GaussQ(Fraction(1)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.re == o and self.im == 0
        return isinstance(o, GaussQ) and self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __abs__(self) -> float:
        return float(self.re * self.re + self.im * self.im) ** 0.5

    def __str__(self) -> str:
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


@dataclass
class SampleReport:
    region: str
    samples: int
    seed: int
    falsified: bool
    point: dict | None = None
    min_abs: float | None = None

    @property
    def verdict(self) -> str:
        if self.falsified:
            return "falsified"
        return f"not falsified at {self.samples} samples"


def _grid(region: str) -> list[GaussQ]:
    pts = []
    if region == "upper":
        for b in (Fraction(1, 2), Fraction(1), Fraction(2)):
            for a in range(-2, 3):
                pts.append(GaussQ(Fraction(a), b))
    else:
        for a in (Fraction(1, 2), Fraction(1), Fraction(2)):
            for b in range(-2, 3):
                pts.append(GaussQ(a, Fraction(b)))
    return pts


def sample_halfplane_nonvanishing(
    p: MultiPoly | Sequence[MultiPoly], region: str = "upper", samples: int = 200, seed: int = 0
) -> SampleReport:
    """Falsification search for zeros with all coordinates in the open
    upper (Im > 0) or right (Re > 0) half-plane.  A sequence of polynomials
    is read as their product.  A fixed grid with all coordinates equal is
    tried before the seeded random points."""
    if region not in ("upper", "right"):
        raise ValueError("region must be 'upper' or 'right'")
    factors = [p] if isinstance(p, MultiPoly) else list(p)
    names = sorted({v for f in factors for v in f.vars})
    rng = random.Random(seed)

    def rand_point() -> GaussQ:
        pos = Fraction(rng.randint(1, 24), rng.randint(1, 6))
        other = Fraction(rng.randint(-24, 24), rng.randint(1, 6))
        return GaussQ(other, pos) if region == "upper" else GaussQ(pos, other)

    points = [{v: z for v in names} for z in _grid(region)]
    points += [{v: rand_point() for v in names} for _ in range(samples)]
    best = None
    for pt in points:
        prod = GaussQ(Fraction(1))
        for f in factors:
            val = f.evaluate({v: pt[v] for v in f.vars})
            prod = prod * val
        if prod == 0:
            return SampleReport(region, len(points), seed, True, {v: str(z) for v, z in pt.items()}, 0.0)
        size = abs(prod)
        best = size if best is None else min(best, size)
    return SampleReport(region, len(points), seed, False, None, best)


# -- stability rewrites ---------------------------------------------------------

@dataclass
class StableRewrite:
    kind: str
    coeffs: list[int]
    M: int
    m: int
    d: int
    a0: int
    source_vars: tuple[str, ...]
    x_vars: tuple[str, ...]
    y_vars: tuple[str, ...]
    factors: list[MultiPoly] = field(repr=False)

    def expand(self) -> MultiPoly:
        out = MultiPoly.const(1)
        for f in self.factors:
            out = out * f
        return out

    def unrank(self, r: int) -> tuple[int, ...]:
        e = []
        for _ in range(self.m):
            e.append(r % self.d)
            r //= self.d
        return tuple(reversed(e))

    def source_poly(self, coeffs: Sequence[int] | None = None) -> MultiPoly:
        coeffs = self.coeffs if coeffs is None else coeffs
        return MultiPoly(self.source_vars, {self.unrank(i): c for i, c in enumerate(coeffs)})


def _rank_coeffs(p: MultiPoly, names: tuple[str, ...], d: int) -> list[int]:
    aligned = p._aligned(names)
    M = d ** len(names)
    coeffs = [0] * M
    for e, c in aligned.items():
        if any(x < 0 or x >= d for x in e):
            raise PolyError("exponent outside the degree bound")
        if not isinstance(c, int):
            raise PolyError("stability rewrites need integer coefficients")
        r = 0
        for x in e:
            r = r * d + x
        coeffs[r] = c
    return coeffs


def _source(P: GraphPolyDef, g: Graph) -> tuple[MultiPoly, tuple[str, ...], int]:
    p = P(g)
    names = tuple(P.arity) if P.arity else p.vars
    extra = [v for v in p.vars if v not in names]
    if extra:
        raise PolyError(f"polynomial uses undeclared variables {extra}")
    if p.has_negative_exponents():
        raise PolyError("stability rewrites need non-negative exponents")
    if P.degree_bound is not None:
        d = P.degree_bound(g)
    else:
        d = 1 + max((max(e, default=0) for e in p._aligned(names)), default=0)
    return p, names, max(d, 1)


def _x_names(m: int) -> tuple[str, ...]:
    return ("X",) if m == 1 else tuple(f"X_{i + 1}" for i in range(m))


def _build(kind: str, coeffs: list[int], names, d, x_vars) -> StableRewrite:
    M = len(coeffs)
    guards.check("STABLE_MAX_M", M, "stability rewrite factor count")
    S = MultiPoly()
    for v in x_vars:
        S = S + MultiPoly.var(v)
    if kind == "stable":
        y_vars = ("Y",)
        factors = [MultiPoly.monomial({"Y": i + 1}, c) + S for i, c in enumerate(coeffs)]
    else:
        if any(c < 0 for c in coeffs):
            raise PolyError("Hurwitz rewrite needs non-negative coefficients (use the pre-substitution form)")
        y_vars = tuple(f"Y_{i + 1}" for i in range(M))
        factors = [MultiPoly.var(y_vars[i]) * c + S for i, c in enumerate(coeffs)]
    a0 = 2 * max((abs(c) for c in coeffs), default=0) + 2
    return StableRewrite(kind, coeffs, M, len(names), d, a0, tuple(names), tuple(x_vars), y_vars, factors)


def make_stable(P: GraphPolyDef, g: Graph) -> tuple[StableRewrite, MultiPoly]:
    """Q_s = prod_i (d_i Y^i + sum_l X_l) over the ranked coefficients."""
    p, names, d = _source(P, g)
    guards.check("STABLE_MAX_M", d ** len(names), "stability rewrite factor count")
    rw = _build("stable", _rank_coeffs(p, names, d), names, d, _x_names(len(names)))
    return rw, rw.expand()


def make_hurwitz(P: GraphPolyDef, g: Graph) -> tuple[StableRewrite, MultiPoly]:
    """Q_h = prod_i (d_i Y_i + sum_l X_l); homogeneous of degree M."""
    p, names, d = _source(P, g)
    guards.check("STABLE_MAX_M", d ** len(names), "stability rewrite factor count")
    rw = _build("hurwitz", _rank_coeffs(p, names, d), names, d, _x_names(len(names)))
    return rw, rw.expand()


def recovery_hook(q: MultiPoly, rw: StableRewrite) -> MultiPoly:
    """Coefficient of x_1^(M-1) with the other X variables at exponent 0."""
    hook = q.coeff_poly(rw.x_vars[0], rw.M - 1)
    for v in rw.x_vars[1:]:
        hook = hook.coeff_poly(v, 0)
    return hook


def balanced_digits(N: int, base: int, count: int) -> list[int]:
    digits = []
    for _ in range(count):
        r = N % base
        if 2 * r > base:
            r -= base
        if 2 * abs(r) >= base:
            raise ValueError(f"digit {r} outside the balanced range for base {base}")
        digits.append(r)
        N = (N - r) // base
    if N != 0:
        raise ValueError("value does not fit in the given number of balanced digits")
    return digits


def recover_from_stable(q: MultiPoly, rw: StableRewrite) -> list[int]:
    """Coefficients d_1..d_M from the recovery hook evaluated at Y = a0."""
    hook = recovery_hook(q, rw)
    if rw.kind == "hurwitz":
        return [int(hook.coeff({y: 1})) for y in rw.y_vars]
    N = hook.eval_rational({"Y": rw.a0})
    if N.denominator != 1 or N.numerator % rw.a0:
        raise ValueError("recovery hook is not divisible by a0")
    return balanced_digits(N.numerator // rw.a0, rw.a0, rw.M)


def recover_source(q: MultiPoly, rw: StableRewrite) -> MultiPoly:
    return rw.source_poly(recover_from_stable(q, rw))


@dataclass
class SokalResult:
    stable: StableRewrite
    hurwitz: StableRewrite
    T_s: MultiPoly
    T_h: MultiPoly


def sokalize(S: GraphPolyDef, g: Graph) -> SokalResult:
    """Stable and Hurwitz rewrites of an edge-indexed multiaffine polynomial
    over the 2^m exponent vectors, using the edge variables themselves."""
    guards.check("SOKAL_MAX_EDGES", g.m, "sokalization")
    p = S(g)
    names = tuple(edge_var(u, v) for u, v in g.edge_list)
    extra = [v for v in p.vars if v not in names]
    if extra:
        raise PolyError(f"unexpected variables {extra}")
    if any(x not in (0, 1) for e in p._aligned(names) for x in e):
        raise PolyError("input is not multiaffine")
    coeffs = _rank_coeffs(p, names, 2)
    if any(c < 0 for c in coeffs):
        raise PolyError("sokalization needs non-negative coefficients")
    rs = _build("stable", coeffs, names, 2, names)
    rh = _build("hurwitz", coeffs, names, 2, names)
    return SokalResult(rs, rh, rs.expand(), rh.expand())


# -- dense roots --------------------------------------------------------------------

def cantor_unpair(z: int) -> tuple[int, int]:
    w = (isqrt(8 * z + 1) - 1) // 2
    t = w * (w + 1) // 2
    y = z - t
    return w - y, y


def zigzag(x: int) -> int:
    """0, 1, -1, 2, -2, ..."""
    return (x + 1) // 2 if x % 2 else -(x // 2)


def unpair_triple(n: int) -> tuple[int, int, int]:
    """Surjection N -> Z x N x N+, with 0 -> (0, 0, 1)."""
    x, r = cantor_unpair(n)
    y, z = cantor_unpair(r)
    return zigzag(x), y, z + 1


def dense_factor(n: int, var: str = "X") -> MultiPoly:
    """q^2 X^2 - 2aq X + (a^2 + b^2); roots (a +- b i)/q."""
    a, b, q = unpair_triple(n)
    return MultiPoly.from_coeffs([a * a + b * b, -2 * a * q, q * q], var)


def dense_roots_transform(P: GraphPolyDef, g: Graph) -> MultiPoly:
    p = P(g)
    return dense_factor(g.n, p.sole_var()) * p


def undo_dense(q: MultiPoly, g: Graph) -> MultiPoly:
    return divide_exact(q, dense_factor(g.n, q.sole_var() if q.vars else "X"))


# -- reports -------------------------------------------------------------------------

@dataclass
class StabilityReport:
    poly: str
    graph: str
    tests: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"poly": self.poly, "graph": self.graph, "tests": self.tests}


def stability_report(name: str, g: Graph, p: MultiPoly, samples: int = 200, seed: int = 0) -> StabilityReport:
    rep = StabilityReport(name, encode_graph6(g))
    if len(p.vars) <= 1 and not p.is_zero and not p.has_negative_exponents():
        if p.degree() >= 1:
            rr = is_real_rooted(p)
            rep.tests.append({"name": "real-rooted", "method": "exact", "verdict": rr,
                              "detail": f"{sturm_count(p)} distinct real roots"})
            R = cauchy_bound(p)
            rep.tests.append({"name": f"in-disk({R})", "method": "exact",
                              "verdict": schur_cohn_in_disk(p, R + 1),
                              "detail": "Schur-Cohn on the Cauchy radius + 1"})
    for region in ("upper", "right"):
        s = sample_halfplane_nonvanishing(p, region, samples, seed)
        rep.tests.append({"name": f"halfplane-{region}", "method": "sampling", "verdict": s.verdict,
                          "detail": f"min |value| {s.min_abs}" if not s.falsified else f"zero at {s.point}"})
    return rep
