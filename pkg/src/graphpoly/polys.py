"""Exact sparse multivariate Laurent polynomials over the rationals."""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Any, Iterable, Mapping, Sequence, Union

Coeff = Union[int, Fraction]


class PolyError(ValueError):
    pass


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _coerce(c: Any) -> Coeff:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"unsupported coefficient {c!r}")


_CHUNK = re.compile(r"(\d+)")


def var_key(name: str) -> tuple:
    """Natural sort key: X_2 before X_10."""
    return tuple((1, int(t)) if t.isdigit() else (0, t) for t in _CHUNK.split(name) if t)


class MultiPoly:
    """Immutable polynomial; ``terms`` maps exponent tuples (aligned with
    ``vars``) to nonzero int/Fraction coefficients.  Variables that do not
    occur are dropped and the rest are kept in natural order, so equality
    and hashing are structural."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str] = (), terms: Mapping[tuple, Any] | None = None):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise PolyError(f"duplicate variable names in {vars}")
        clean: dict[tuple, Coeff] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != len(vars):
                raise PolyError("exponent length does not match variables")
            c = _coerce(c)
            if c:
                clean[e] = _norm(clean.get(e, 0) + c)
                if not clean[e]:
                    del clean[e]
        used = [i for i in range(len(vars)) if any(e[i] for e in clean)]
        order = sorted(used, key=lambda i: var_key(vars[i]))
        if order != list(range(len(vars))):
            clean = {tuple(e[i] for i in order): c for e, c in clean.items()}
            vars = tuple(vars[i] for i in order)
        self.vars: tuple[str, ...] = vars
        self.terms: dict[tuple, Coeff] = clean
        self._hash = None

    # -- constructors --
    @classmethod
    def const(cls, c: Any) -> "MultiPoly":
        return cls((), {(): c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: Any = 1) -> "MultiPoly":
        names = tuple(exps)
        return cls(names, {tuple(exps[v] for v in names): coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Any], var: str = "X") -> "MultiPoly":
        """Univariate polynomial sum coeffs[i] * var^i."""
        return cls((var,), {(i,): c for i, c in enumerate(coeffs)})

    @classmethod
    def lift(cls, x: Any) -> "MultiPoly":
        return x if isinstance(x, MultiPoly) else cls.const(x)

    # -- alignment --
    def _aligned(self, names: tuple[str, ...]) -> dict[tuple, Coeff]:
        if names == self.vars:
            return self.terms
        idx = [self.vars.index(v) if v in self.vars else -1 for v in names]
        return {tuple(e[i] if i >= 0 else 0 for i in idx): c for e, c in self.terms.items()}

    @staticmethod
    def _union(a: "MultiPoly", b: "MultiPoly") -> tuple[str, ...]:
        if a.vars == b.vars:
            return a.vars
        return tuple(sorted(set(a.vars) | set(b.vars), key=var_key))

    # -- ring operations --
    def __add__(self, other: Any) -> "MultiPoly":
        other = MultiPoly.lift(other) if not isinstance(other, MultiPoly) else other
        names = self._union(self, other)
        out = dict(self._aligned(names))
        for e, c in other._aligned(names).items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(names, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> "MultiPoly":
        return self + (-MultiPoly.lift(other))

    def __rsub__(self, other: Any) -> "MultiPoly":
        return MultiPoly.lift(other) - self

    def __mul__(self, other: Any) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = _coerce(other)
            return MultiPoly(self.vars, {e: v * c for e, v in self.terms.items()})
        names = self._union(self, other)
        a = self._aligned(names)
        b = other._aligned(names)
        out: dict[tuple, Coeff] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return MultiPoly(names, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            if len(self.terms) != 1:
                raise PolyError("negative power of a non-monomial")
            (e, c), = self.terms.items()
            return MultiPoly(self.vars, {tuple(x * k for x in e): Fraction(1) / Fraction(c) ** -k})
        out = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: Any) -> "MultiPoly":
        return self * c

    def __truediv__(self, c: Any) -> "MultiPoly":
        if isinstance(c, MultiPoly):
            return divide_exact(self, c)
        return self * (Fraction(1) / Fraction(c))

    # -- comparison --
    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.const(other)
            except TypeError:
                return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"MultiPoly({canonical_text(self)!r})"

    def __str__(self) -> str:
        return canonical_text(self)

    # -- inspection --
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Coeff:
        if self.vars:
            raise PolyError("not a constant")
        return self.terms.get((), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def has_negative_exponents(self) -> bool:
        return any(x < 0 for e in self.terms for x in e)

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (or total degree); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def min_degree(self, var: str) -> int:
        if var not in self.vars or not self.terms:
            return 0
        i = self.vars.index(var)
        return min(e[i] for e in self.terms)

    def coeff(self, exps: Mapping[str, int]) -> Coeff:
        if any(v not in self.vars and x for v, x in exps.items()):
            return 0
        e = tuple(exps.get(v, 0) for v in self.vars)
        return self.terms.get(e, 0)

    def coeff_poly(self, var: str, k: int) -> "MultiPoly":
        """Coefficient of var^k as a polynomial in the other variables."""
        if var not in self.vars:
            return self if k == 0 else MultiPoly()
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        return MultiPoly(rest, {e[:i] + e[i + 1:]: c for e, c in self.terms.items() if e[i] == k})

    def univariate_coeffs(self, var: str | None = None) -> list[Coeff]:
        """Coefficient list [c_0, c_1, ...] of a univariate polynomial."""
        if not self.terms:
            return []
        if not self.vars:
            return [self.terms[()]]
        if len(self.vars) != 1 or (var is not None and self.vars[0] != var):
            raise PolyError(f"expected a univariate polynomial, got vars {self.vars}")
        if self.has_negative_exponents():
            raise PolyError("Laurent polynomial has no coefficient list")
        out: list[Coeff] = [0] * (self.degree() + 1)
        for (i,), c in self.terms.items():
            out[i] = c
        return out

    def sole_var(self, default: str = "X") -> str:
        if len(self.vars) > 1:
            raise PolyError(f"expected a univariate polynomial, got vars {self.vars}")
        return self.vars[0] if self.vars else default

    # -- substitution and evaluation --
    def substitute(self, var: str, replacement: Any) -> "MultiPoly":
        return substitute_many(self, {var: replacement})

    def evaluate(self, point: Mapping[str, Any]) -> Any:
        """Evaluate with arbitrary ring/field values (Fraction, complex rationals...)."""
        missing = [v for v in self.vars if v not in point]
        if missing:
            raise PolyError(f"no value for {missing}")
        vals = [point[v] for v in self.vars]
        total: Any = 0
        for e, c in self.terms.items():
            t: Any = c
            for x, k in zip(vals, e):
                if k > 0:
                    t = t * x ** k
                elif k < 0:
                    if x == 0:
                        raise PolyError("zero assigned to a variable with negative exponent")
                    t = t * (Fraction(1) / x if not hasattr(x, "inverse") else x.inverse()) ** (-k)
            total = total + t
        return total

    def eval_rational(self, point: Mapping[str, Any]) -> Fraction:
        missing = [v for v in self.vars if v not in point]
        if missing:
            raise PolyError(f"no value for {missing}")
        return Fraction(self.evaluate({v: Fraction(point[v]) for v in self.vars}))

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        return MultiPoly(tuple(mapping.get(v, v) for v in self.vars), self.terms)

    # -- serialization --
    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(e), "num": str(Fraction(c).numerator), "den": str(Fraction(c).denominator)}
                for e, c in _sorted_terms(self)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        return cls(
            tuple(data["vars"]),
            {tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]},
        )


Poly = MultiPoly
X = MultiPoly.var("X")
ONE = MultiPoly.const(1)
ZERO = MultiPoly()


def arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def substitute(p: MultiPoly, var: str, replacement: Any) -> MultiPoly:
    return substitute_many(p, {var: replacement})


def substitute_many(p: MultiPoly, repl: Mapping[str, Any]) -> MultiPoly:
    """Simultaneous substitution of polynomials for variables."""
    repl = {v: MultiPoly.lift(r) for v, r in repl.items() if v in p.vars}
    if not repl:
        return p
    for v, r in repl.items():
        if p.min_degree(v) < 0 and len(r.terms) != 1:
            raise PolyError(f"cannot substitute a non-monomial for {v}: it has negative exponents")
    idx = {v: p.vars.index(v) for v in repl}
    keep = [i for i, v in enumerate(p.vars) if v not in repl]
    powers: dict[tuple[str, int], MultiPoly] = {}

    def power(v: str, k: int) -> MultiPoly:
        key = (v, k)
        if key not in powers:
            powers[key] = repl[v] ** k
        return powers[key]

    out = MultiPoly()
    groups: dict[tuple, dict[tuple, Coeff]] = {}
    for e, c in p.terms.items():
        sub_e = tuple(e[idx[v]] for v in repl)
        groups.setdefault(sub_e, {})[tuple(e[i] for i in keep)] = c
    rest_vars = tuple(p.vars[i] for i in keep)
    names = list(repl)
    for sub_e, rest in groups.items():
        factor = MultiPoly(rest_vars, rest)
        for v, k in zip(names, sub_e):
            if k:
                factor = factor * power(v, k)
        out = out + factor
    return out


def eval_rational(p: MultiPoly, point: Mapping[str, Any]) -> Fraction:
    return p.eval_rational(point)


# -- text form ---------------------------------------------------------------

def _sorted_terms(p: MultiPoly) -> list[tuple[tuple, Coeff]]:
    return sorted(p.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)


def _fmt_coeff(c: Coeff) -> str:
    f = Fraction(c)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def canonical_text(p: MultiPoly) -> str:
    """Graded-lex descending terms, e.g. ``X^3 - 3*X^2 + 2*X``."""
    if not p.terms:
        return "0"
    parts = []
    for i, (e, c) in enumerate(_sorted_terms(p)):
        mono = "*".join(
            v if k == 1 else f"{v}^{k}" for v, k in zip(p.vars, e) if k
        )
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z][A-Za-z0-9_]*(?:\{[^}]*\})?)|(?P<op>[-+*^()]))"
)


def parse_poly(text: str) -> MultiPoly:
    """Parse the canonical text form (and general +,-,*,^,() expressions)."""
    toks = []
    pos = 0
    s = text.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise PolyError(f"unexpected character at column {pos + 1} in {text!r}")
        kind = m.lastgroup
        toks.append((kind, m.group(kind)))
        pos = m.end()
    toks.append(("end", ""))
    i = 0

    def peek():
        return toks[i]

    def take(val=None):
        nonlocal i
        t = toks[i]
        if val is not None and t[1] != val:
            raise PolyError(f"expected {val!r} in {text!r}")
        i += 1
        return t

    def expr():
        sign = 1
        if peek()[1] in "+-" and peek()[0] == "op":
            sign = -1 if take()[1] == "-" else 1
        out = term() * sign
        while peek()[0] == "op" and peek()[1] in "+-":
            op = take()[1]
            t = term()
            out = out + t if op == "+" else out - t
        return out

    def term():
        out = factor()
        while peek() == ("op", "*"):
            take()
            out = out * factor()
        return out

    def factor():
        kind, val = take()
        if kind == "num":
            base = MultiPoly.const(Fraction(val))
        elif kind == "name":
            base = MultiPoly.var(val)
        elif val == "(":
            base = expr()
            take(")")
        elif val == "-":
            return -factor()
        else:
            raise PolyError(f"unexpected {val!r} in {text!r}")
        if peek() == ("op", "^"):
            take()
            neg = False
            if peek() == ("op", "-"):
                take()
                neg = True
            k, v = take()
            if k != "num" or "/" in v:
                raise PolyError(f"bad exponent in {text!r}")
            base = base ** (-int(v) if neg else int(v))
        return base

    out = expr()
    if peek()[0] != "end":
        raise PolyError(f"trailing input in {text!r}")
    return out


# -- exact division ----------------------------------------------------------

def _shift_nonneg(p: MultiPoly, names: tuple[str, ...]) -> tuple[dict[tuple, Coeff], tuple]:
    t = p._aligned(names)
    if not t:
        return t, tuple(0 for _ in names)
    low = tuple(min(e[i] for e in t) for i in range(len(names)))
    return {tuple(x - l for x, l in zip(e, low)): c for e, c in t.items()}, low


def divide_exact(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Quotient a/b when b divides a in the Laurent ring; PolyError otherwise."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero:
        return MultiPoly()
    names = MultiPoly._union(a, b)
    ra, la = _shift_nonneg(a, names)
    tb, lb = _shift_nonneg(b, names)
    lead_e = max(tb)
    lead_c = tb[lead_e]
    r = dict(ra)
    q: dict[tuple, Coeff] = {}
    while r:
        e = max(r)
        d = tuple(x - y for x, y in zip(e, lead_e))
        if any(x < 0 for x in d):
            raise PolyError("not divisible")
        c = _norm(Fraction(r[e]) / Fraction(lead_c))
        q[d] = c
        for eb, cb in tb.items():
            k = tuple(x + y for x, y in zip(eb, d))
            v = _norm(r.get(k, 0) - c * cb)
            if v:
                r[k] = v
            else:
                r.pop(k, None)
    shift = tuple(x - y for x, y in zip(la, lb))
    return MultiPoly(names, {tuple(x + s for x, s in zip(e, shift)): c for e, c in q.items()})


# -- bases -------------------------------------------------------------------

BASES = ("power", "falling", "rising", "binomial")
_BASIS_ALIASES = {
    "falling-factorial": "falling",
    "rising-factorial": "rising",
}


def _basis_name(b: str) -> str:
    b = _BASIS_ALIASES.get(b, b)
    if b not in BASES:
        raise ValueError(f"unknown basis {b!r}")
    return b


def basis_poly(basis: str, i: int, var: str = "X") -> MultiPoly:
    """The i-th basis element: X^i, X(X-1)..(X-i+1), X(X+1)..(X+i-1), C(X,i)."""
    basis = _basis_name(basis)
    x = MultiPoly.var(var)
    if basis == "power":
        return x ** i
    out = MultiPoly.const(1)
    for j in range(i):
        out = out * (x - j if basis in ("falling", "binomial") else x + j)
    if basis == "binomial":
        out = out * Fraction(1, factorial(i))
    return out


def expand_in_basis(coords: Sequence[Any], basis: str, var: str = "X") -> MultiPoly:
    """The power-basis polynomial sum coords[i] * b_i(var)."""
    out = MultiPoly()
    for i, c in enumerate(coords):
        if c:
            out = out + basis_poly(basis, i, var) * c
    return out


def coords_in_basis(p: MultiPoly, basis: str) -> list[Coeff]:
    """Coordinates of a univariate polynomial p in the given basis."""
    var = p.sole_var()
    rem = p
    n = p.degree()
    coords: list[Coeff] = [0] * (n + 1)
    for d in range(n, -1, -1):
        c = rem.coeff({var: d})
        if c:
            b = basis_poly(basis, d, var)
            lead = b.coeff({var: d})
            coords[d] = _norm(Fraction(c) / Fraction(lead))
            rem = rem - b * coords[d]
    if not rem.is_zero:
        raise PolyError("basis expansion did not terminate")
    return coords


def basis_convert(p: MultiPoly, from_basis: str, to_basis: str, mode: str = "convert") -> MultiPoly:
    """Change basis of a univariate polynomial.

    The coefficient list of ``p`` is read as coordinates in ``from_basis``.
    ``convert`` returns the coordinates of the same function in
    ``to_basis`` (packed as coefficients of var^i).  ``reinterpret`` keeps
    the coordinates, reads them in ``to_basis``, and returns the resulting
    polynomial in the power basis.
    """
    if len(p.vars) > 1 or p.has_negative_exponents():
        raise PolyError("basis conversion needs a univariate polynomial without negative exponents")
    var = p.sole_var()
    coords = p.univariate_coeffs()
    if mode == "reinterpret":
        return expand_in_basis(coords, to_basis, var)
    if mode != "convert":
        raise ValueError(f"unknown mode {mode!r}")
    value = expand_in_basis(coords, from_basis, var)
    return MultiPoly.from_coeffs(coords_in_basis(value, to_basis) if not value.is_zero else [], var)


# -- interpolation -----------------------------------------------------------

def interpolate_univariate(values: Iterable[tuple[Any, Any]], var: str = "X") -> MultiPoly:
    """Newton interpolation through the given (point, value) pairs."""
    pts = [(Fraction(x), Fraction(y)) for x, y in values]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise PolyError("duplicate interpolation points")
    n = len(pts)
    dd = [y for _, y in pts]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    x = MultiPoly.var(var)
    out = MultiPoly()
    for i in range(n - 1, -1, -1):
        out = out * (x - xs[i]) + dd[i]
    return out


# -- rational functions and recurrences --------------------------------------

class RatFunc:
    """num/den with exact reduction when den divides num."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        den = MultiPoly.const(1) if den is None else den
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = MultiPoly.const(1)
        elif not den.is_constant():
            try:
                num, den = divide_exact(num, den), MultiPoly.const(1)
            except PolyError:
                pass
        if den.is_constant() and den.constant_value() != 1:
            num, den = num * (Fraction(1) / Fraction(den.constant_value())), MultiPoly.const(1)
        self.num = num
        self.den = den

    def __add__(self, o: "RatFunc") -> "RatFunc":
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, o: "RatFunc") -> "RatFunc":
        return self + (-o)

    def __mul__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.num, self.den * o.den)

    def __truediv__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.den, self.den * o.num)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def as_poly(self) -> MultiPoly | None:
        try:
            return divide_exact(self.num, self.den)
        except PolyError:
            return None


def _solve_rational(rows: list[list[RatFunc]], nvars: int) -> list[RatFunc] | None:
    """Gauss-Jordan over the rational-function field; free unknowns set to 0."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(nvars):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if not rows[i][nvars].is_zero:
            return None
    sol = [RatFunc(MultiPoly()) for _ in range(nvars)]
    for i, c in enumerate(pivots):
        sol[c] = rows[i][nvars]
    return sol


def find_linear_recurrence(
    seq: Sequence[MultiPoly], max_depth: int
) -> tuple[int, list[MultiPoly]] | None:
    """Smallest p <= max_depth with seq[i+p] = sum_j a_j * seq[i+j] for all
    valid i, with polynomial a_j.  Returns (p, [a_0, ..., a_{p-1}])."""
    if len(seq) < 2 * max_depth + 1:
        raise PolyError(f"need at least {2 * max_depth + 1} terms, got {len(seq)}")
    seq = [MultiPoly.lift(s) for s in seq]
    for p in range(1, max_depth + 1):
        rows = [
            [RatFunc(seq[i + j]) for j in range(p)] + [RatFunc(seq[i + p])]
            for i in range(len(seq) - p)
        ]
        sol = _solve_rational(rows, p)
        if sol is None:
            continue
        coeffs = [s.as_poly() for s in sol]
        if any(c is None for c in coeffs):
            continue
        if all(
            seq[i + p] == sum((coeffs[j] * seq[i + j] for j in range(p)), MultiPoly())
            for i in range(len(seq) - p)
        ):
            return p, coeffs
    return None


# -- facts -------------------------------------------------------------------

def is_monic(p: MultiPoly) -> bool:
    """Leading coefficient (graded-lex) equals 1."""
    return bool(p.terms) and _sorted_terms(p)[0][1] == 1


def degrees(p: MultiPoly) -> dict[str, int]:
    return {v: p.degree(v) for v in p.vars}


def coefficient_of(p: MultiPoly, monomial: MultiPoly | Mapping[str, int]) -> Coeff:
    if isinstance(monomial, MultiPoly):
        if len(monomial.terms) != 1:
            raise PolyError("coefficient_of expects a monomial")
        (e, _), = monomial.terms.items()
        monomial = dict(zip(monomial.vars, e))
    return p.coeff(monomial)


def is_unimodal(seq: Sequence[Any]) -> bool:
    """Weakly increasing up to some index, weakly decreasing afterwards."""
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i + 1 >= len(seq)


def is_unimodal_coefficients(p: MultiPoly) -> bool:
    return is_unimodal(p.univariate_coeffs())
