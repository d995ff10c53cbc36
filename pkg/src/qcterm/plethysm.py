"""Plethystic alphabets and their evaluation through power sums.

An alphabet is a small expression tree. Only its power sums need to be
canonical:

    p_r[m]          = m^r                   (a single letter)
    p_r[A + B]      = p_r[A] + p_r[B]
    p_r[A - B]      = p_r[A] - p_r[B]
    p_r[eps A]      = (-1)^r p_r[A]
    p_r[m A]        = m^r p_r[A]
    p_r[A / (1-u)]  = p_r[A] / (1 - u^r)

Coefficients such as (1 - q^c)/(1 - q) are built from these nodes. They
are never treated as plain scalars, because p_r reads them as
(1 - q^{rc})/(1 - q^r).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce

from .laurent import LaurentPoly, Monomial
from .qfield import QRat
from .symfunc import SymFunc, _to_p

__all__ = [
    "AlphabetExpr",
    "Letter",
    "Plus",
    "Minus",
    "Epsilon",
    "ScaleByLetter",
    "GeomDiv",
    "EMPTY",
    "letter",
    "letters",
    "alphabet_sum",
    "qratio_alphabet",
    "power_sum",
    "eval_sym",
    "verify_h_rules",
    "from_json",
]


class AlphabetExpr:
    """Base class for alphabet nodes."""

    def __add__(self, other: "AlphabetExpr") -> "AlphabetExpr":
        return Plus(self, other)

    def __sub__(self, other: "AlphabetExpr") -> "AlphabetExpr":
        return Minus(self, other)

    def max_var(self) -> int:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class Letter(AlphabetExpr):
    m: Monomial

    def max_var(self):
        return self.m.max_var()

    def to_json(self):
        return {"kind": "letter", "m": self.m.to_json()}


@dataclass(frozen=True)
class Plus(AlphabetExpr):
    a: AlphabetExpr
    b: AlphabetExpr

    def max_var(self):
        return max(self.a.max_var(), self.b.max_var())

    def to_json(self):
        return {"kind": "plus", "a": self.a.to_json(), "b": self.b.to_json()}


@dataclass(frozen=True)
class Minus(AlphabetExpr):
    a: AlphabetExpr
    b: AlphabetExpr

    def max_var(self):
        return max(self.a.max_var(), self.b.max_var())

    def to_json(self):
        return {"kind": "minus", "a": self.a.to_json(), "b": self.b.to_json()}


@dataclass(frozen=True)
class Epsilon(AlphabetExpr):
    a: AlphabetExpr

    def max_var(self):
        return self.a.max_var()

    def to_json(self):
        return {"kind": "epsilon", "a": self.a.to_json()}


@dataclass(frozen=True)
class ScaleByLetter(AlphabetExpr):
    m: Monomial
    a: AlphabetExpr

    def max_var(self):
        return max(self.m.max_var(), self.a.max_var())

    def to_json(self):
        return {"kind": "scale", "m": self.m.to_json(), "a": self.a.to_json()}


@dataclass(frozen=True)
class GeomDiv(AlphabetExpr):
    """A / (1 - u) for a scalar monomial u != 1."""

    a: AlphabetExpr
    u: Monomial

    def __post_init__(self):
        if self.u.is_one():
            raise ValueError("geometric divisor must differ from 1")
        if not self.u.is_scalar():
            raise ValueError("geometric divisor must not involve the x-variables")

    def max_var(self):
        return self.a.max_var()

    def to_json(self):
        return {"kind": "geomdiv", "a": self.a.to_json(), "u": self.u.to_json()}


def from_json(d) -> AlphabetExpr:
    if isinstance(d, str):
        d = json.loads(d)
    kind = d["kind"]
    if kind == "letter":
        return Letter(Monomial.from_json(d["m"]))
    if kind == "plus":
        return Plus(from_json(d["a"]), from_json(d["b"]))
    if kind == "minus":
        return Minus(from_json(d["a"]), from_json(d["b"]))
    if kind == "epsilon":
        return Epsilon(from_json(d["a"]))
    if kind == "scale":
        return ScaleByLetter(Monomial.from_json(d["m"]), from_json(d["a"]))
    if kind == "geomdiv":
        return GeomDiv(from_json(d["a"]), Monomial.from_json(d["u"]))
    raise ValueError(f"unknown alphabet node {kind!r}")


ONE = Letter(Monomial())
EMPTY = Minus(ONE, ONE)


def letter(i: int | None = None, qshift: int = 0, tshift: int = 0) -> Letter:
    """The letter q^qshift t^tshift x_i, or a pure q,t-monomial when i is None."""
    ex = () if i is None else ((i, 1),)
    return Letter(Monomial(ex, qshift, tshift))


def letters(indices) -> AlphabetExpr:
    return alphabet_sum([letter(i) for i in indices])


def alphabet_sum(items) -> AlphabetExpr:
    items = list(items)
    if not items:
        return EMPTY
    return reduce(Plus, items)


def qratio_alphabet(num: tuple, den: int, inner: AlphabetExpr) -> AlphabetExpr:
    """((q^u - q^v) / (1 - q^den)) * inner, with ``num = (u, v)``."""
    u, v = num
    body = Minus(ScaleByLetter(Monomial.scalar(u), inner), ScaleByLetter(Monomial.scalar(v), inner))
    return GeomDiv(body, Monomial.scalar(den))


def power_sum(X: AlphabetExpr, r: int, nvars: int | None = None) -> LaurentPoly:
    """p_r[X] as a Laurent polynomial in the x-variables."""
    if r < 1:
        raise ValueError("power sums are indexed by r >= 1")
    N = X.max_var() + 1 if nvars is None else nvars
    N = max(N, 1)
    return _ps(X, r, N)


def _ps(X: AlphabetExpr, r: int, N: int) -> LaurentPoly:
    if isinstance(X, Letter):
        return (X.m ** r).to_poly(N)
    if isinstance(X, Plus):
        return _ps(X.a, r, N) + _ps(X.b, r, N)
    if isinstance(X, Minus):
        return _ps(X.a, r, N) - _ps(X.b, r, N)
    if isinstance(X, Epsilon):
        inner = _ps(X.a, r, N)
        return -inner if r % 2 else inner
    if isinstance(X, ScaleByLetter):
        return (X.m ** r).to_poly(N) * _ps(X.a, r, N)
    if isinstance(X, GeomDiv):
        return _ps(X.a, r, N).scale(QRat(1) / (1 - (X.u ** r).coeff()))
    raise TypeError(f"not an alphabet: {X!r}")


def eval_sym(f: SymFunc, X: AlphabetExpr, nvars: int | None = None) -> LaurentPoly:
    """f[X]: expand f in power sums and substitute p_r -> p_r[X]."""
    N = max(X.max_var() + 1, 1) if nvars is None else nvars
    cache: dict = {}

    def ps(r):
        if r not in cache:
            cache[r] = _ps(X, r, N)
        return cache[r]

    out = LaurentPoly({}, N)
    for lam, c in _to_p(f).items():
        term = LaurentPoly.constant(c, N)
        for part in lam:
            term = term * ps(part)
        out = out + term
    return out


def verify_h_rules(r: int, X: AlphabetExpr, Y: AlphabetExpr) -> bool:
    """h_r[X+Y] = sum_i h_i[X] h_{r-i}[Y] and h_r[-X] = (-1)^r e_r[X]."""
    from .symfunc import e, h

    N = max(X.max_var(), Y.max_var(), 0) + 1
    lhs = eval_sym(h(r), Plus(X, Y), N)
    rhs = LaurentPoly({}, N)
    for i in range(r + 1):
        rhs = rhs + eval_sym(h(i), X, N) * eval_sym(h(r - i), Y, N)
    neg = eval_sym(h(r), Minus(EMPTY, X), N)
    sign = -1 if r % 2 else 1
    return lhs == rhs and neg == eval_sym(e(r), X, N).scale(QRat(sign))
