"""SOL formulas and SOLEVAL polynomial terms: parser, printer, evaluator.

Concrete syntax (full grammar in docs/soleval.md)::

    def clique(C) := all u. all v. (C(u) & C(v) & u != v) -> E(u,v);
    bigsum{C:1 | clique(C)} prod{v | C(v)} X

Relations are stored as bitmasks over the n^k tuple indices, so a unary
relation is just a vertex-subset mask.  Quantifier results are memoised on
the values of their free symbols, and a relation quantifier whose body
contains a conjunct ``all x.. R(x..) -> psi`` only enumerates relations
inside the tuples satisfying psi.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from math import factorial
from typing import Any, Callable, Iterable, Mapping

from . import guards
from .graphs import Graph
from .polys import MultiPoly, substitute_many


class SolError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        where = f" at line {line}, column {col}" if line else ""
        super().__init__(f"{msg}{where}")


class SolSyntaxError(SolError):
    pass


class SolBindingError(SolError):
    pass


# -- AST --------------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False, kw_only=True)


@dataclass(frozen=True)
class Var(Node):
    name: str


@dataclass(frozen=True)
class VConst(Node):
    value: int


@dataclass(frozen=True)
class FConst(Node):
    value: bool


@dataclass(frozen=True)
class Atom(Node):
    rel: str
    args: tuple


@dataclass(frozen=True)
class Eq(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Lt(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Not(Node):
    f: Node


@dataclass(frozen=True)
class And(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Or(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Implies(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Iff(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Quant(Node):
    kind: str  # "all" | "exists"
    var: str
    body: Node


@dataclass(frozen=True)
class RelQuant(Node):
    kind: str
    rel: str
    arity: int
    body: Node


@dataclass(frozen=True)
class Num(Node):
    value: Fraction


@dataclass(frozen=True)
class Ind(Node):
    name: str


@dataclass(frozen=True)
class Add(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Sub(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Mul(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Neg(Node):
    a: Node


@dataclass(frozen=True)
class Pow(Node):
    a: Node
    k: int


@dataclass(frozen=True)
class Subst(Node):
    body: Node
    pairs: tuple  # ((name, term), ...)


@dataclass(frozen=True)
class Small(Node):
    kind: str  # "sum" | "prod"
    vars: tuple
    cond: Node
    body: Node


@dataclass(frozen=True)
class Big(Node):
    rels: tuple  # ((name, arity), ...)
    cond: Node
    body: Node


FORMULA_NODES = (FConst, Atom, Eq, Lt, Not, And, Or, Implies, Iff, Quant, RelQuant)


# -- lexer ------------------------------------------------------------------

KEYWORDS = {"all", "exists", "sum", "prod", "bigsum", "true", "false", "def", "or", "and", "not"}
_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op><->|->|:=|!=|<=|[()\[\]{},.:|&~!=<+\-*/^;])"
)


@dataclass(frozen=True)
class Tok:
    kind: str  # num | name | kw | op | end
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Tok]:
    toks = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise SolSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind == "name" and val in KEYWORDS:
                kind = "kw"
            if kind not in ("ws", "comment"):
                toks.append(Tok(kind, val, line, col))
            col += len(val)
        pos = m.end()
    toks.append(Tok("end", "", line, col))
    return toks


# -- parser -----------------------------------------------------------------

@dataclass
class Macro:
    params: tuple
    body: Node


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        self.macros: dict[str, Macro] = {}
        self.fresh = 0

    # token helpers
    def peek(self, k: int = 0) -> Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, text: str) -> bool:
        t = self.peek()
        return t.kind in ("op", "kw") and t.text == text

    def take(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Tok:
        t = self.peek()
        if not (t.kind in ("op", "kw") and t.text == text):
            self.fail(f"expected {text!r}", t)
        return self.take()

    def fail(self, msg: str, t: Tok | None = None):
        t = t or self.peek()
        got = "end of input" if t.kind == "end" else repr(t.text)
        raise SolSyntaxError(f"syntax error: {msg}, got {got}", t.line, t.col)

    def name(self) -> Tok:
        t = self.peek()
        if t.kind != "name":
            self.fail("expected a name", t)
        return self.take()

    # program
    def program(self) -> Node:
        while self.at("def"):
            self.definition()
        t = self.term()
        if self.peek().kind != "end":
            self.fail("unexpected trailing input")
        return t

    def definition(self) -> None:
        self.expect("def")
        nm = self.name()
        self.expect("(")
        params = []
        if not self.at(")"):
            params.append(self.name().text)
            while self.at(","):
                self.take()
                params.append(self.name().text)
        self.expect(")")
        self.expect(":=")
        body = self.formula()
        self.expect(";")
        self.macros[nm.text] = Macro(tuple(params), body)

    # terms
    def term(self) -> Node:
        left = self.multerm()
        while self.at("+") or self.at("-"):
            op = self.take()
            right = self.multerm()
            left = (Add if op.text == "+" else Sub)(left, right, span=(op.line, op.col))
        return left

    def multerm(self) -> Node:
        left = self.unary()
        while self.at("*") or self.at("/"):
            op = self.take()
            if op.text == "*":
                left = Mul(left, self.unary(), span=(op.line, op.col))
            else:
                t = self.peek()
                if t.kind != "num":
                    self.fail("division only by a numeric literal", t)
                self.take()
                if int(t.text) == 0:
                    raise SolSyntaxError("division by zero", t.line, t.col)
                left = Mul(left, Num(Fraction(1, int(t.text))), span=(op.line, op.col))
        return left

    def unary(self) -> Node:
        if self.at("-"):
            op = self.take()
            return Neg(self.unary(), span=(op.line, op.col))
        return self.power()

    def power(self) -> Node:
        base = self.postfix()
        if self.at("^"):
            op = self.take()
            neg = False
            if self.at("-"):
                self.take()
                neg = True
            t = self.peek()
            if t.kind != "num":
                self.fail("expected an integer exponent", t)
            self.take()
            base = Pow(base, -int(t.text) if neg else int(t.text), span=(op.line, op.col))
        return base

    def postfix(self) -> Node:
        node = self.primary()
        while self.at("["):
            op = self.take()
            pairs = [self.subst_pair()]
            while self.at(","):
                self.take()
                pairs.append(self.subst_pair())
            self.expect("]")
            node = Subst(node, tuple(pairs), span=(op.line, op.col))
        return node

    def subst_pair(self) -> tuple:
        nm = self.name().text
        self.expect(":=")
        return (nm, self.term())

    def primary(self) -> Node:
        t = self.peek()
        sp = (t.line, t.col)
        if t.kind == "num":
            self.take()
            return Num(Fraction(int(t.text)), span=sp)
        if t.kind == "name":
            self.take()
            return Ind(t.text, span=sp)
        if self.at("("):
            self.take()
            inner = self.term()
            self.expect(")")
            return inner
        if self.at("sum") or self.at("prod"):
            kind = self.take().text
            self.expect("{")
            vs = [self.name().text]
            while self.at(","):
                self.take()
                vs.append(self.name().text)
            self.expect("|")
            cond = self.formula()
            self.expect("}")
            body = self.unary()
            return Small(kind, tuple(vs), cond, body, span=sp)
        if self.at("bigsum"):
            self.take()
            self.expect("{")
            rels = [self.rel_binder()]
            while self.at(","):
                self.take()
                rels.append(self.rel_binder())
            self.expect("|")
            cond = self.formula()
            self.expect("}")
            body = self.unary()
            return Big(tuple(rels), cond, body, span=sp)
        self.fail("expected a term")

    def rel_binder(self) -> tuple:
        nm = self.name().text
        self.expect(":")
        t = self.peek()
        if t.kind != "num":
            self.fail("expected an arity", t)
        self.take()
        return (nm, int(t.text))

    # formulas
    def formula(self) -> Node:
        left = self.implication()
        if self.at("<->"):
            op = self.take()
            left = Iff(left, self.implication(), span=(op.line, op.col))
        return left

    def implication(self) -> Node:
        left = self.disjunction()
        if self.at("->"):
            op = self.take()
            return Implies(left, self.implication(), span=(op.line, op.col))
        return left

    def disjunction(self) -> Node:
        left = self.conjunction()
        while self.at("|") or self.at("or"):
            op = self.take()
            left = Or(left, self.conjunction(), span=(op.line, op.col))
        return left

    def conjunction(self) -> Node:
        left = self.negation()
        while self.at("&") or self.at("and"):
            op = self.take()
            left = And(left, self.negation(), span=(op.line, op.col))
        return left

    def negation(self) -> Node:
        if self.at("~") or self.at("!") or self.at("not"):
            op = self.take()
            return Not(self.negation(), span=(op.line, op.col))
        if self.at("all") or self.at("exists"):
            return self.quantifier()
        return self.atom()

    def quantifier(self) -> Node:
        kw = self.take()
        binders = [self.binder()]
        while self.at(","):
            self.take()
            binders.append(self.binder())
        self.expect(".")
        body = self.formula()
        for nm, arity, sp in reversed(binders):
            if arity is None:
                body = Quant(kw.text, nm, body, span=sp)
            else:
                body = RelQuant(kw.text, nm, arity, body, span=sp)
        return body

    def binder(self) -> tuple:
        t = self.name()
        if self.at(":"):
            self.take()
            a = self.peek()
            if a.kind != "num":
                self.fail("expected an arity", a)
            self.take()
            return (t.text, int(a.text), (t.line, t.col))
        return (t.text, None, (t.line, t.col))

    def vterm(self) -> Node:
        t = self.peek()
        if t.kind == "num":
            self.take()
            return VConst(int(t.text), span=(t.line, t.col))
        if t.kind == "name":
            self.take()
            return Var(t.text, span=(t.line, t.col))
        self.fail("expected a variable or vertex constant", t)

    def atom(self) -> Node:
        t = self.peek()
        sp = (t.line, t.col)
        if self.at("true") or self.at("false"):
            self.take()
            return FConst(t.text == "true", span=sp)
        if self.at("("):
            self.take()
            f = self.formula()
            self.expect(")")
            return f
        if t.kind == "name" and self.peek(1).kind == "op" and self.peek(1).text == "(":
            self.take()
            self.take()
            args = []
            if not self.at(")"):
                args.append(self.vterm())
                while self.at(","):
                    self.take()
                    args.append(self.vterm())
            self.expect(")")
            if t.text in self.macros:
                return self.expand(t, args)
            return Atom(t.text, tuple(args), span=sp)
        if t.kind in ("name", "num"):
            a = self.vterm()
            op = self.peek()
            if op.kind == "op" and op.text in ("=", "!=", "<", "<="):
                self.take()
                b = self.vterm()
                osp = (op.line, op.col)
                if op.text == "=":
                    return Eq(a, b, span=osp)
                if op.text == "!=":
                    return Not(Eq(a, b, span=osp), span=osp)
                if op.text == "<":
                    return Lt(a, b, span=osp)
                return Or(Lt(a, b, span=osp), Eq(a, b, span=osp), span=osp)
            self.fail("expected a comparison", op)
        self.fail("expected a formula", t)

    # macros
    def expand(self, call: Tok, args: list) -> Node:
        mac = self.macros[call.text]
        if len(args) != len(mac.params):
            raise SolBindingError(
                f"{call.text} expects {len(mac.params)} argument(s), got {len(args)}", call.line, call.col
            )
        mapping = {}
        for p, a in zip(mac.params, args):
            mapping[p] = a
        return self._rename(mac.body, mapping, (call.line, call.col))

    def _fresh(self, base: str) -> str:
        self.fresh += 1
        return f"{base}_{self.fresh}"

    def _rename(self, f: Node, mp: dict, sp) -> Node:
        r = lambda x: self._rename(x, mp, sp)
        if isinstance(f, Var):
            tgt = mp.get(f.name)
            if tgt is None:
                return Var(f.name, span=sp)
            if isinstance(tgt, VConst):
                return VConst(tgt.value, span=sp)
            return Var(tgt.name, span=sp)
        if isinstance(f, VConst):
            return VConst(f.value, span=sp)
        if isinstance(f, FConst):
            return FConst(f.value, span=sp)
        if isinstance(f, Atom):
            rel = f.rel
            if rel in mp:
                tgt = mp[rel]
                if not isinstance(tgt, Var):
                    raise SolBindingError(f"relation parameter {rel} bound to a constant", *sp)
                rel = tgt.name
            return Atom(rel, tuple(r(a) for a in f.args), span=sp)
        if isinstance(f, (Eq, Lt, And, Or, Implies, Iff)):
            return type(f)(r(f.a), r(f.b), span=sp)
        if isinstance(f, Not):
            return Not(r(f.f), span=sp)
        if isinstance(f, Quant):
            new = self._fresh(f.var)
            inner = dict(mp)
            inner[f.var] = Var(new)
            return Quant(f.kind, new, self._rename(f.body, inner, sp), span=sp)
        if isinstance(f, RelQuant):
            new = self._fresh(f.rel)
            inner = dict(mp)
            inner[f.rel] = Var(new)
            return RelQuant(f.kind, new, f.arity, self._rename(f.body, inner, sp), span=sp)
        raise TypeError(f"unexpected node {f!r}")


# -- binding checks ------------------------------------------------------------

def _check_formula(f: Node, inds: frozenset, rels: dict, free: dict | None) -> None:
    """Scope check.  ``free`` collects free symbols when not None, else
    free symbols are errors."""
    if isinstance(f, Var):
        if f.name not in inds:
            if free is None:
                raise SolBindingError(f"unbound variable {f.name!r}", *f.span)
            if free.get(f.name, "ind") != "ind":
                raise SolBindingError(f"{f.name!r} used as variable and relation", *f.span)
            free[f.name] = "ind"
        return
    if isinstance(f, (VConst, FConst)):
        return
    if isinstance(f, Atom):
        for a in f.args:
            _check_formula(a, inds, rels, free)
        if f.rel in rels:
            arity = rels[f.rel]
        elif f.rel == "E":
            arity = 2
        elif free is not None:
            arity = free.setdefault(f.rel, len(f.args))
            if arity == "ind":
                raise SolBindingError(f"{f.rel!r} used as variable and relation", *f.span)
        else:
            raise SolBindingError(f"unbound relation {f.rel!r}", *f.span)
        if arity != len(f.args):
            raise SolBindingError(
                f"arity mismatch for {f.rel}: declared {arity}, used with {len(f.args)}", *f.span
            )
        return
    if isinstance(f, (Eq, Lt, And, Or, Implies, Iff)):
        _check_formula(f.a, inds, rels, free)
        _check_formula(f.b, inds, rels, free)
        return
    if isinstance(f, Not):
        _check_formula(f.f, inds, rels, free)
        return
    if isinstance(f, Quant):
        r2 = {k: v for k, v in rels.items() if k != f.var}
        _check_formula(f.body, inds | {f.var}, r2, free)
        return
    if isinstance(f, RelQuant):
        _check_formula(f.body, inds - {f.rel}, {**rels, f.rel: f.arity}, free)
        return
    raise TypeError(f"not a formula node: {f!r}")


def _check_term(t: Node, inds: frozenset, rels: dict) -> None:
    if isinstance(t, (Num, Ind)):
        return
    if isinstance(t, (Add, Sub, Mul)):
        _check_term(t.a, inds, rels)
        _check_term(t.b, inds, rels)
    elif isinstance(t, (Neg, Pow)):
        _check_term(t.a, inds, rels)
    elif isinstance(t, Subst):
        _check_term(t.body, inds, rels)
        for _, r in t.pairs:
            _check_term(r, inds, rels)
    elif isinstance(t, Small):
        inner = inds | set(t.vars)
        r2 = {k: v for k, v in rels.items() if k not in t.vars}
        _check_formula(t.cond, inner, r2, None)
        _check_term(t.body, inner, r2)
    elif isinstance(t, Big):
        names = {n for n, _ in t.rels}
        r2 = {**rels, **dict(t.rels)}
        inner = inds - names
        _check_formula(t.cond, inner, r2, None)
        _check_term(t.body, inner, r2)
    else:
        raise TypeError(f"not a term node: {t!r}")


def parse_term(text: str) -> Node:
    """Parse a SOLEVAL program (definitions followed by one closed term)."""
    p = _Parser(text)
    t = p.program()
    _check_term(t, frozenset(), {})
    return t


def parse_formula(text: str, params: Mapping[str, int | None] | None = None) -> Node:
    """Parse a formula.  Free symbols are allowed and checked for
    consistent use; with ``params`` (name -> arity, None for individuals)
    any other free symbol is an error."""
    p = _Parser(text)
    while p.at("def"):
        p.definition()
    f = p.formula()
    if p.peek().kind != "end":
        p.fail("unexpected trailing input")
    if params is None:
        _check_formula(f, frozenset(), {}, {})
    else:
        inds = frozenset(k for k, v in params.items() if v is None)
        rels = {k: v for k, v in params.items() if v is not None}
        _check_formula(f, inds, rels, None)
    return f


def free_symbols(f: Node) -> dict[str, Any]:
    """Free individual variables ('ind') and relation symbols (arity)."""
    out: dict = {}
    _check_formula(f, frozenset(), {}, out)
    return out


# -- printer ---------------------------------------------------------------------

def _vt(v: Node) -> str:
    return v.name if isinstance(v, Var) else str(v.value)


def format_formula(f: Node) -> str:
    if isinstance(f, FConst):
        return "true" if f.value else "false"
    if isinstance(f, Atom):
        return f"{f.rel}({', '.join(_vt(a) for a in f.args)})"
    if isinstance(f, Eq):
        return f"{_vt(f.a)} = {_vt(f.b)}"
    if isinstance(f, Lt):
        return f"{_vt(f.a)} < {_vt(f.b)}"
    if isinstance(f, Not):
        return f"~{format_formula(f.f)}" if isinstance(f.f, (Atom, FConst, Not)) else f"~({format_formula(f.f)})"
    ops = {And: "&", Or: "|", Implies: "->", Iff: "<->"}
    if type(f) in ops:
        return f"({format_formula(f.a)} {ops[type(f)]} {format_formula(f.b)})"
    if isinstance(f, Quant):
        return f"({f.kind} {f.var}. {format_formula(f.body)})"
    if isinstance(f, RelQuant):
        return f"({f.kind} {f.rel}:{f.arity}. {format_formula(f.body)})"
    raise TypeError(f"not a formula node: {f!r}")


def format_term(t: Node) -> str:
    if isinstance(t, Num):
        v = t.value
        return str(v.numerator) if v.denominator == 1 else f"({v.numerator} * 1/{v.denominator})"
    if isinstance(t, Ind):
        return t.name
    ops = {Add: "+", Sub: "-", Mul: "*"}
    if type(t) in ops:
        return f"({format_term(t.a)} {ops[type(t)]} {format_term(t.b)})"
    if isinstance(t, Neg):
        return f"(-{format_term(t.a)})"
    if isinstance(t, Pow):
        return f"({format_term(t.a)})^{t.k}" if t.k >= 0 else f"({format_term(t.a)})^-{-t.k}"
    if isinstance(t, Subst):
        inner = ", ".join(f"{n} := {format_term(r)}" for n, r in t.pairs)
        return f"({format_term(t.body)})[{inner}]"
    if isinstance(t, Small):
        return f"{t.kind}{{{', '.join(t.vars)} | {format_formula(t.cond)}}} ({format_term(t.body)})"
    if isinstance(t, Big):
        rels = ", ".join(f"{n}:{a}" for n, a in t.rels)
        return f"bigsum{{{rels} | {format_formula(t.cond)}}} ({format_term(t.body)})"
    raise TypeError(f"not a term node: {t!r}")


# -- evaluation ----------------------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    arity: int
    tuples: frozenset


@dataclass
class Structure:
    graph: Graph
    env: dict = field(default_factory=dict)


_MISSING = object()


def _free_names(f: Node, cache: dict) -> frozenset:
    """Free individual and relation names (the edge relation excluded)."""
    key = id(f)
    if key in cache:
        return cache[key][1]
    if isinstance(f, Var):
        out = frozenset({f.name})
    elif isinstance(f, (VConst, FConst, Num, Ind)):
        out = frozenset()
    elif isinstance(f, Atom):
        out = frozenset().union(*(_free_names(a, cache) for a in f.args))
        if f.rel != "E":
            out = out | {f.rel}
    elif isinstance(f, (Eq, Lt, And, Or, Implies, Iff, Add, Sub, Mul)):
        out = _free_names(f.a, cache) | _free_names(f.b, cache)
    elif isinstance(f, Not):
        out = _free_names(f.f, cache)
    elif isinstance(f, (Neg, Pow)):
        out = _free_names(f.a, cache)
    elif isinstance(f, Quant):
        out = _free_names(f.body, cache) - {f.var}
    elif isinstance(f, RelQuant):
        out = _free_names(f.body, cache) - {f.rel}
    elif isinstance(f, Subst):
        out = _free_names(f.body, cache).union(*(_free_names(r, cache) for _, r in f.pairs))
    elif isinstance(f, Small):
        out = (_free_names(f.cond, cache) | _free_names(f.body, cache)) - set(f.vars)
    elif isinstance(f, Big):
        out = (_free_names(f.cond, cache) | _free_names(f.body, cache)) - {n for n, _ in f.rels}
    else:
        raise TypeError(f"unexpected node {f!r}")
    cache[key] = (f, out)  # keep f alive so id() stays unique
    return out


def _conjuncts(f: Node) -> list[Node]:
    if isinstance(f, And):
        return _conjuncts(f.a) + _conjuncts(f.b)
    return [f]


def _support_guard(conjs: list[Node], rel: str, arity: int, banned: set, fcache) -> tuple | None:
    """Find a conjunct ``all x1..xk. R(x1..xk) -> psi`` with psi free of
    the banned relation names.  Returns (vars, psi)."""
    for c in conjs:
        vs = []
        f = c
        while isinstance(f, Quant) and f.kind == "all":
            vs.append(f.var)
            f = f.body
        if not isinstance(f, Implies) or not isinstance(f.a, Atom) or f.a.rel != rel:
            continue
        args = f.a.args
        if len(args) != arity or len(vs) != arity:
            continue
        if [a.name if isinstance(a, Var) else None for a in args] != vs or len(set(vs)) != arity:
            continue
        if _free_names(f.b, fcache) & banned:
            continue
        return tuple(vs), f.b
    return None


class Evaluator:
    """Compiles formulas and terms against one graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.fcache: dict = {}

    # formulas
    def _vget(self, v: Node) -> Callable[[dict], int]:
        if isinstance(v, VConst):
            val = v.value
            return lambda env: val
        name = v.name
        return lambda env: env[name]

    def formula(self, f: Node) -> Callable[[dict], bool]:
        n, adj = self.n, self.adj
        if isinstance(f, FConst):
            val = f.value
            return lambda env: val
        if isinstance(f, Atom):
            getters = [self._vget(a) for a in f.args]
            if f.rel == "E" and len(getters) == 2:
                ga, gb = getters

                def edge(env):
                    a, b = ga(env), gb(env)
                    return 0 <= a < n and 0 <= b < n and bool(adj[a] >> b & 1)
                return edge
            rel = f.rel
            if len(getters) == 1:
                (ga,) = getters

                def mono(env):
                    a = ga(env)
                    return 0 <= a < n and bool(env[rel] >> a & 1)
                return mono

            def atom(env):
                idx = 0
                for gt in getters:
                    x = gt(env)
                    if not 0 <= x < n:
                        return False
                    idx = idx * n + x
                return bool(env[rel] >> idx & 1)
            return atom
        if isinstance(f, Eq):
            ga, gb = self._vget(f.a), self._vget(f.b)
            return lambda env: ga(env) == gb(env)
        if isinstance(f, Lt):
            ga, gb = self._vget(f.a), self._vget(f.b)
            return lambda env: ga(env) < gb(env)
        if isinstance(f, Not):
            inner = self.formula(f.f)
            return lambda env: not inner(env)
        if isinstance(f, (And, Or, Implies, Iff)):
            a, b = self.formula(f.a), self.formula(f.b)
            if isinstance(f, And):
                return lambda env: a(env) and b(env)
            if isinstance(f, Or):
                return lambda env: a(env) or b(env)
            if isinstance(f, Implies):
                return lambda env: (not a(env)) or b(env)
            return lambda env: a(env) == b(env)
        if isinstance(f, Quant):
            return self._memo(f, self._quant(f))
        if isinstance(f, RelQuant):
            return self._memo(f, self._relquant(f))
        raise TypeError(f"not a formula node: {f!r}")

    def _memo(self, f: Node, run: Callable[[dict], bool]) -> Callable[[dict], bool]:
        names = tuple(sorted(_free_names(f, self.fcache)))
        table: dict = {}

        def memo(env):
            key = tuple(env[x] for x in names)
            r = table.get(key)
            if r is None:
                r = table[key] = run(env)
            return r
        return memo

    def _quant(self, f: Quant) -> Callable[[dict], bool]:
        body = self.formula(f.body)
        v = f.var
        rng = range(self.n)
        want = f.kind == "all"

        def run(env):
            saved = env.get(v, _MISSING)
            try:
                for x in rng:
                    env[v] = x
                    if bool(body(env)) != want:
                        return not want
                return want
            finally:
                if saved is _MISSING:
                    env.pop(v, None)
                else:
                    env[v] = saved
        return run

    def _candidates(self, rel: str, arity: int, guard) -> Callable[[dict], int]:
        """Mask of the tuple indices a relation may contain."""
        n = self.n
        cells = n ** arity
        if guard is None:
            guards.check("SOL_REL_MAX_BITS", cells, f"relation {rel}:{arity} over {n} vertices")
            full = (1 << cells) - 1
            return lambda env: full
        vs, psi = guard
        check = self.formula(psi)
        tuples = list(itertools.product(range(n), repeat=arity))

        def allowed(env):
            saved = {v: env.get(v, _MISSING) for v in vs}
            mask = 0
            try:
                for idx, t in enumerate(tuples):
                    for v, x in zip(vs, t):
                        env[v] = x
                    if check(env):
                        mask |= 1 << idx
            finally:
                for v, s in saved.items():
                    if s is _MISSING:
                        env.pop(v, None)
                    else:
                        env[v] = s
            guards.check("SOL_REL_MAX_BITS", bin(mask).count("1"), f"relation {rel}:{arity} candidates")
            return mask
        return allowed

    def _relquant(self, f: RelQuant) -> Callable[[dict], bool]:
        body = self.formula(f.body)
        if f.kind == "exists":
            conjs = _conjuncts(f.body)
        else:
            conjs = _conjuncts(f.body.a) if isinstance(f.body, Implies) else []
        guard = _support_guard(conjs, f.rel, f.arity, {f.rel}, self.fcache)
        cand = self._candidates(f.rel, f.arity, guard)
        rel = f.rel
        want = f.kind == "all"

        def run(env):
            allowed = cand(env)
            saved = env.get(rel, _MISSING)
            try:
                sub = allowed
                while True:
                    env[rel] = sub
                    if bool(body(env)) != want:
                        return not want
                    if not sub:
                        return want
                    sub = (sub - 1) & allowed
            finally:
                if saved is _MISSING:
                    env.pop(rel, None)
                else:
                    env[rel] = saved
        return run

    # terms
    def term(self, t: Node) -> Callable[[dict], MultiPoly]:
        if isinstance(t, Num):
            c = MultiPoly.const(t.value)
            return lambda env: c
        if isinstance(t, Ind):
            c = MultiPoly.var(t.name)
            return lambda env: c
        if isinstance(t, (Add, Sub, Mul)):
            a, b = self.term(t.a), self.term(t.b)
            if isinstance(t, Add):
                return lambda env: a(env) + b(env)
            if isinstance(t, Sub):
                return lambda env: a(env) - b(env)
            return lambda env: a(env) * b(env)
        if isinstance(t, Neg):
            a = self.term(t.a)
            return lambda env: -a(env)
        if isinstance(t, Pow):
            a, k = self.term(t.a), t.k
            return lambda env: a(env) ** k
        if isinstance(t, Subst):
            body = self.term(t.body)
            reps = [(nm, self.term(r)) for nm, r in t.pairs]
            return lambda env: substitute_many(body(env), {nm: r(env) for nm, r in reps})
        if isinstance(t, Small):
            return self._small(t)
        if isinstance(t, Big):
            return self._big(t)
        raise TypeError(f"not a term node: {t!r}")

    def _small(self, t: Small) -> Callable[[dict], MultiPoly]:
        cond = self.formula(t.cond)
        body = self.term(t.body)
        vs = t.vars
        tuples = list(itertools.product(range(self.n), repeat=len(vs)))
        independent = not (_free_names(t.body, self.fcache) & set(vs))
        is_sum = t.kind == "sum"

        def run(env):
            saved = {v: env.get(v, _MISSING) for v in vs}
            try:
                if independent:
                    count = 0
                    for tup in tuples:
                        for v, x in zip(vs, tup):
                            env[v] = x
                        if cond(env):
                            count += 1
                    for v, s in saved.items():
                        if s is _MISSING:
                            env.pop(v, None)
                        else:
                            env[v] = s
                    val = body(env)
                    return val * count if is_sum else val ** count
                acc = MultiPoly() if is_sum else MultiPoly.const(1)
                for tup in tuples:
                    for v, x in zip(vs, tup):
                        env[v] = x
                    if cond(env):
                        acc = acc + body(env) if is_sum else acc * body(env)
                return acc
            finally:
                for v, s in saved.items():
                    if s is _MISSING:
                        env.pop(v, None)
                    else:
                        env[v] = s
        return run

    def _big(self, t: Big) -> Callable[[dict], MultiPoly]:
        cond = self.formula(t.cond)
        body = self.term(t.body)
        conjs = _conjuncts(t.cond)
        names = [nm for nm, _ in t.rels]
        cands = []
        for i, (nm, ar) in enumerate(t.rels):
            guard = _support_guard(conjs, nm, ar, set(names[i:]), self.fcache)
            cands.append(self._candidates(nm, ar, guard))

        def run(env):
            saved = {nm: env.get(nm, _MISSING) for nm in names}
            acc: dict[MultiPoly, int] = {}

            def rec(i):
                if i == len(names):
                    if cond(env):
                        val = body(env)
                        acc[val] = acc.get(val, 0) + 1
                    return
                allowed = cands[i](env)
                sub = allowed
                while True:
                    env[names[i]] = sub
                    rec(i + 1)
                    if not sub:
                        break
                    sub = (sub - 1) & allowed

            try:
                rec(0)
            finally:
                for nm, s in saved.items():
                    if s is _MISSING:
                        env.pop(nm, None)
                    else:
                        env[nm] = s
            out = MultiPoly()
            for val, c in acc.items():
                out = out + val * c
            return out
        return run


def _env_values(g: Graph, env: Mapping[str, Any]) -> dict:
    out = {}
    for k, v in env.items():
        if isinstance(v, Relation):
            mask = 0
            for tup in v.tuples:
                if len(tup) != v.arity or not all(0 <= x < g.n for x in tup):
                    raise ValueError(f"relation {k} has a bad tuple {tup}")
                idx = 0
                for x in tup:
                    idx = idx * g.n + x
                mask |= 1 << idx
            out[k] = mask
        else:
            if not 0 <= int(v) < g.n:
                raise ValueError(f"vertex {v} out of range")
            out[k] = int(v)
    return out


def eval_formula(s: Structure | Graph, f: Node | str) -> bool:
    if isinstance(s, Graph):
        s = Structure(s)
    if isinstance(f, str):
        f = parse_formula(f)
    free = free_symbols(f)
    missing = [k for k in free if k not in s.env]
    if missing:
        raise SolBindingError(f"unbound symbol(s) {missing}")
    for k, v in free.items():
        val = s.env[k]
        if v == "ind" and isinstance(val, Relation):
            raise SolBindingError(f"{k} must be a vertex")
        if v != "ind" and (not isinstance(val, Relation) or val.arity != v):
            raise SolBindingError(f"{k} must be a relation of arity {v}")
    ev = Evaluator(s.graph)
    return bool(ev.formula(f)(_env_values(s.graph, s.env)))


def eval_term(s: Structure | Graph, t: Node | str) -> MultiPoly:
    if isinstance(s, Graph):
        s = Structure(s)
    if isinstance(t, str):
        t = parse_term(t)
    ev = Evaluator(s.graph)
    return ev.term(t)(_env_values(s.graph, s.env))


def check_order_invariance(t: Node | str, g: Graph, trials: int = 24, seed: int = 0) -> tuple[bool, list[int] | None]:
    """Compare t(g) with t on relabelled copies of g.  Uses every
    permutation when n! <= trials, else the identity plus seeded random
    permutations.  Returns (invariant, counterexample permutation)."""
    guards.check("ORDER_CHECK_MAX_N", g.n, "order invariance check")
    if isinstance(t, str):
        t = parse_term(t)
    base = eval_term(g, t)
    if factorial(g.n) <= trials:
        perms = [list(p) for p in itertools.permutations(range(g.n))]
    else:
        rng = random.Random(seed)
        perms = []
        for _ in range(trials):
            p = list(range(g.n))
            rng.shuffle(p)
            perms.append(p)
    for p in perms:
        if eval_term(g.relabel(p), t) != base:
            return False, p
    return True, None


def piecewise_combine(P, Q, K):
    """G -> Q(G) if K(G) else P(G)."""
    from .zoo import GraphPolyDef

    if tuple(P.arity) != tuple(Q.arity):
        raise ValueError(f"indeterminate mismatch: {P.arity} vs {Q.arity}")
    return GraphPolyDef(
        f"piecewise({P.name},{Q.name},{K.name})",
        tuple(P.arity),
        lambda g: Q(g) if K(g) else P(g),
        tuple(dict.fromkeys(P.guard + Q.guard)),
    )


# -- fixtures ------------------------------------------------------------------------

def fixture_text(name: str) -> str:
    return resources.files("graphpoly").joinpath("fixtures", f"{name}.sol").read_text(encoding="utf-8")


def load_fixture(name: str) -> Node:
    return parse_term(fixture_text(name))


def fixture_names() -> list[str]:
    root = resources.files("graphpoly").joinpath("fixtures")
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".sol"))


def _references() -> dict[str, tuple[Callable[[Graph], MultiPoly], int]]:
    from . import zoo

    X = MultiPoly.var("X")
    c = MultiPoly.const
    return {
        "order": (lambda g: c(g.n), 5),
        "components": (lambda g: c(g.k), 5),
        "components_alt": (lambda g: c(g.k), 5),
        "x_to_k": (lambda g: X ** g.k, 5),
        "x_to_k_alt": (lambda g: X ** g.k, 5),
        "clique_count": (lambda g: c(len(zoo._cliques(g))), 5),
        "max_clique_count": (lambda g: c(zoo.maximal_clique_count(g)), 5),
        "clique_number": (lambda g: c(zoo.clique_number(g)), 5),
        "clique_poly": (zoo.clique_poly, 5),
        "clique_poly_alt": (zoo.clique_poly, 5),
        "independence": (zoo.independence, 5),
        "independence_alt": (zoo.independence, 5),
        "potts": (zoo.potts, 5),
        "char_poly_perm": (zoo.char_poly_adjacency, 4),
    }


def fixture_reference(name: str) -> tuple[Callable[[Graph], MultiPoly], int] | None:
    """Reference implementation and vertex bound for a shipped fixture, or
    None for fixtures without one (the order-dependent demonstration)."""
    return _references().get(name)


# fixtures that must agree everywhere they are evaluated
EQUIVALENT_PAIRS = (
    ("independence", "independence_alt"),
    ("clique_poly", "clique_poly_alt"),
    ("components", "components_alt"),
    ("x_to_k", "x_to_k_alt"),
)
