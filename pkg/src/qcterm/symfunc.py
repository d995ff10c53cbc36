"""Symmetric functions in the m, e, h, p and g bases.

The power sums are the hub: every element is converted through its
p-expansion. Rational transition matrices are computed once per degree.
Coefficients are ``QRat`` unless a formal t is in play. In that case
they are ``QTRat``.

The g basis depends on t. A ``SymFunc`` carries ``t=None`` for a formal t
and ``t=c`` for the specialization t = q^c.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentPoly
from .partitions import Partition, partitions_of, z_lambda
from .qfield import QRat, QTRat, qpow

__all__ = ["SymFunc", "convert", "hall_inner", "expand_in_vars", "t_value", "BASES"]

BASES = ("m", "e", "h", "p", "g")


def t_value(t):
    """The element t: formal when ``t is None``, else q**t."""
    if t is None:
        return QTRat.monomial(0, 1)
    return qpow(t)


def _is_zero(c) -> bool:
    return not c


class SymFunc:
    """A finite linear combination of basis elements indexed by partitions."""

    __slots__ = ("basis", "coeffs", "t")

    def __init__(self, basis: str, coeffs=None, t=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.t = t
        self.coeffs = {}
        for lam, c in (coeffs or {}).items():
            if not isinstance(c, (QRat, QTRat)):
                c = QRat(1) * c
            if not _is_zero(c):
                self.coeffs[Partition(lam)] = c

    @classmethod
    def basis_element(cls, basis: str, lam, t=None) -> "SymFunc":
        return cls(basis, {Partition(lam): QRat(1)}, t)

    @classmethod
    def zero(cls, basis: str = "p", t=None) -> "SymFunc":
        return cls(basis, {}, t)

    def __repr__(self):
        inner = " + ".join(f"({c})*{self.basis}{list(l)}" for l, c in sorted(self.coeffs.items(), reverse=True))
        return f"SymFunc({inner or 0})"

    def degrees(self) -> set:
        return {sum(l) for l in self.coeffs}

    def is_zero(self) -> bool:
        return not self.coeffs

    def _same(self, other: "SymFunc") -> "SymFunc":
        if other.basis == self.basis and other.t == self.t:
            return other
        return convert(other, self.basis, self.t)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        other = self._same(other)
        out = dict(self.coeffs)
        for l, c in other.coeffs.items():
            out[l] = out[l] + c if l in out else c
        return SymFunc(self.basis, out, self.t)

    def __neg__(self):
        return SymFunc(self.basis, {l: -c for l, c in self.coeffs.items()}, self.t)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        return SymFunc(self.basis, {l: x * c for l, x in self.coeffs.items()}, self.t)

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            return self.scale(other)
        t = self.t if self.basis == "g" else other.t
        a = convert(self, "p", t)
        b = convert(other, "p", t)
        out: dict = {}
        for l1, c1 in a.coeffs.items():
            for l2, c2 in b.coeffs.items():
                lam = Partition(sorted(l1 + l2, reverse=True))
                p = c1 * c2
                out[lam] = out[lam] + p if lam in out else p
        return SymFunc("p", out, t)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        a = convert(self, "p", self.t)
        b = convert(other, "p", other.t)
        return a.coeffs == b.coeffs

    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc(self.basis, {l: fn(c) for l, c in self.coeffs.items()}, self.t)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "entries": [
                {"partition": list(l), "coeff": c.to_string() if isinstance(c, QRat) else str(c)}
                for l, c in sorted(self.coeffs.items(), reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, d: dict, t=None) -> "SymFunc":
        return cls(d["basis"], {Partition(e["partition"]): QRat.from_string(e["coeff"]) for e in d["entries"]}, t)


# ---------------------------------------------------------------------------
# rational transition matrices (degree by degree)

def _count_p_in_m(lam: tuple, mu: tuple) -> int:
    """Coefficient of m_mu in p_lam: ways to distribute the parts of lam onto the slots of mu."""
    slots = list(mu)

    @lru_cache(maxsize=None)
    def go(i: int, rem: tuple) -> int:
        if i == len(lam):
            return 1 if all(r == 0 for r in rem) else 0
        total = 0
        for j, r in enumerate(rem):
            if r >= lam[i]:
                total += go(i + 1, rem[:j] + (r - lam[i],) + rem[j + 1:])
        return total

    return go(0, tuple(slots))


@lru_cache(maxsize=None)
def _p_to_m(d: int):
    parts = partitions_of(d)
    return {lam: {mu: Fraction(_count_p_in_m(lam, mu)) for mu in parts if _count_p_in_m(lam, mu)} for lam in parts}


def _invert(mat: dict, parts) -> dict:
    """Invert a square matrix given as dict-of-dicts over Fractions."""
    n = len(parts)
    idx = {p: i for i, p in enumerate(parts)}
    A = [[Fraction(0)] * n + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for r, row in mat.items():
        for c, v in row.items():
            A[idx[r]][idx[c]] = Fraction(v)
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [x / pv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return {parts[i]: {parts[j]: A[i][n + j] for j in range(n) if A[i][n + j] != 0} for i in range(n)}


@lru_cache(maxsize=None)
def _m_to_p(d: int):
    return _invert(_p_to_m(d), partitions_of(d))


@lru_cache(maxsize=None)
def _single_to_p(kind: str, r: int) -> dict:
    out = {}
    for nu in partitions_of(r):
        c = Fraction(1, z_lambda(nu))
        if kind == "e":
            c *= (-1) ** (r - len(nu))
        out[nu] = c
    return out


def _mult_p(a: dict, b: dict) -> dict:
    out: dict = {}
    for l1, c1 in a.items():
        for l2, c2 in b.items():
            lam = Partition(sorted(l1 + l2, reverse=True))
            out[lam] = out.get(lam, 0) + c1 * c2
    return {k: v for k, v in out.items() if v != 0}


@lru_cache(maxsize=None)
def _eh_to_p(kind: str, lam: Partition) -> dict:
    out = {Partition(): Fraction(1)}
    for r in lam:
        out = _mult_p(out, _single_to_p(kind, r))
    return out


@lru_cache(maxsize=None)
def _p_to_eh(kind: str, d: int) -> dict:
    parts = partitions_of(d)
    return _invert({lam: _eh_to_p(kind, lam) for lam in parts}, parts)


@lru_cache(maxsize=None)
def _g_to_p(lam: Partition, t) -> dict:
    """p-expansion of g_lam with field coefficients."""
    tv = t_value(t)
    out = {Partition(): QRat(1)}
    for r in lam:
        single = {}
        for nu in partitions_of(r):
            c = QRat(1) * Fraction(1, z_lambda(nu))
            for part in nu:
                c = c * (1 - tv ** part) / (1 - qpow(part))
            single[nu] = c
        nxt: dict = {}
        for l1, c1 in out.items():
            for l2, c2 in single.items():
                key = Partition(sorted(l1 + l2, reverse=True))
                v = c1 * c2
                nxt[key] = nxt[key] + v if key in nxt else v
        out = {k: v for k, v in nxt.items() if not _is_zero(v)}
    return out


def _solve(matrix, rhs):
    """Solve ``sum_j x_j matrix[j][i] = rhs[i]`` by Gaussian elimination over a field."""
    n = len(rhs)
    A = [[matrix[j][i] for j in range(n)] + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not _is_zero(A[r][col])), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        A[col], A[piv] = A[piv], A[col]
        inv = QRat(1) / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and not _is_zero(A[r][col]):
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [A[i][n] for i in range(n)]


@lru_cache(maxsize=None)
def _p_to_g(d: int, t) -> dict:
    parts = partitions_of(d)
    rows = [[_g_to_p(lam, t).get(nu, QRat(0)) for nu in parts] for lam in parts]
    out = {}
    for k, nu in enumerate(parts):
        # p_nu = sum_lam x_lam g_lam
        rhs = [QRat(int(i == k)) for i in range(len(parts))]
        sol = _solve(rows, rhs)
        out[nu] = {lam: x for lam, x in zip(parts, sol) if not _is_zero(x)}
    return out


def _to_p(f: SymFunc) -> dict:
    if f.basis == "p":
        return dict(f.coeffs)
    out: dict = {}
    for lam, c in f.coeffs.items():
        if f.basis == "m":
            row = _m_to_p(sum(lam))[lam]
        elif f.basis in ("e", "h"):
            row = _eh_to_p(f.basis, lam)
        else:
            row = _g_to_p(lam, f.t)
        for nu, v in row.items():
            term = c * v
            out[nu] = out[nu] + term if nu in out else term
    return {k: v for k, v in out.items() if not _is_zero(v)}


def _from_p(coeffs: dict, target: str, t) -> dict:
    if target == "p":
        return coeffs
    out: dict = {}
    for nu, c in coeffs.items():
        d = sum(nu)
        if target == "m":
            row = _p_to_m(d)[nu]
        elif target in ("e", "h"):
            row = _p_to_eh(target, d)[nu]
        else:
            row = _p_to_g(d, t)[nu]
        for lam, v in row.items():
            term = c * v
            out[lam] = out[lam] + term if lam in out else term
    return {k: v for k, v in out.items() if not _is_zero(v)}


def convert(f: SymFunc, target: str, t="same") -> SymFunc:
    """Re-express f in the target basis.

    ``t`` is needed only when the target is g. It defaults to f's own t.
    """
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    t = f.t if t == "same" else t
    if f.basis == target and (target != "g" or f.t == t):
        return SymFunc(target, f.coeffs, t)
    return SymFunc(target, _from_p(_to_p(f), target, t), t)


def hall_weight(nu, t):
    """<p_nu, p_nu> = z_nu prod (1 - q^nu_i)/(1 - t^nu_i)."""
    tv = t_value(t)
    w = QRat(z_lambda(nu))
    for part in nu:
        den = 1 - tv ** part
        if _is_zero(den):
            raise ZeroDivisionError("t specialization makes the scalar product singular")
        w = w * (1 - qpow(part)) / den
    return w


def hall_inner(f: SymFunc, g: SymFunc, t=None):
    """The q,t-Hall scalar product; t=None keeps t formal."""
    a, b = _to_p(f), _to_p(g)
    total = QRat(0)
    for nu, c in a.items():
        if nu in b:
            total = total + c * b[nu] * hall_weight(nu, t)
    return total


def _distinct_perms(lam, n):
    padded = tuple(lam) + (0,) * (n - len(lam))
    return set(itertools.permutations(padded))


def expand_in_vars(f: SymFunc, n: int, offset: int = 1, nvars: int | None = None) -> LaurentPoly:
    """f(x_offset, ..., x_{offset+n-1}, 0, 0, ...) as a Laurent polynomial."""
    N = offset + n if nvars is None else nvars
    m = convert(f, "m")
    terms: dict = {}
    for lam, c in m.coeffs.items():
        if len(lam) > n:
            continue
        for perm in _distinct_perms(lam, n):
            vec = [0] * N
            for i, e in enumerate(perm):
                vec[offset + i] = e
            vec = tuple(vec)
            terms[vec] = terms[vec] + c if vec in terms else c
    return LaurentPoly(terms, N)


def h(r: int) -> SymFunc:
    return SymFunc.basis_element("h", (r,) if r else ())


def e(r: int) -> SymFunc:
    return SymFunc.basis_element("e", (r,) if r else ())


def p(r: int) -> SymFunc:
    return SymFunc.basis_element("p", (r,) if r else ())


def g(r: int, t=None) -> SymFunc:
    return SymFunc.basis_element("g", (r,) if r else (), t)
