"""Sparse Laurent polynomials in x0..xn over Q(q), and constant terms.

Exponent vectors are plain tuples of a fixed length ``nvars``. Variable
``i`` prints as ``x{i}``. Extra formal parameters such as ``w`` or ``y`` in
the splitting formulas are just one more index.

Products of q-shifted factorials ``(q^e x^v; q)_k`` have their own
expansion kernel, ``expand_qpoch_product``. It works on integer polynomial
coefficients and can throw away every term that cannot reach a target
exponent box.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import flint

from .qfield import QRat, QTRat, q_poch_qpower, qpow

__all__ = [
    "Monomial",
    "LaurentPoly",
    "QPoch",
    "expand_qpoch_product",
    "ct",
    "build_F",
    "build_D",
    "F_factors",
    "D_factors",
    "RationalCT",
    "ct_partial_fraction",
    "ct_series_oracle",
    "verify_splitting_S",
    "verify_splitting_T",
    "splitting_S_terms",
    "splitting_T_terms",
    "verify_qfact_lemma",
    "verify_symmetrization",
    "weyl_sum_holds",
]

_ZP = flint.fmpz_poly


def chi(cond: bool) -> int:
    return 1 if cond else 0


def _zero(c) -> bool:
    return not c


@dataclass(frozen=True)
class Monomial:
    """A monic monomial ``q^qshift t^tshift x^exponents``.

    ``exponents`` is a sorted tuple of ``(variable, exponent)`` pairs with
    no zero exponents. ``tshift`` is only used with a formal second parameter.
    """

    exponents: tuple = ()
    qshift: int = 0
    tshift: int = 0

    def __post_init__(self):
        ex = dict()
        for v, e in self.exponents:
            ex[v] = ex.get(v, 0) + e
        object.__setattr__(self, "exponents", tuple(sorted((v, e) for v, e in ex.items() if e)))

    @classmethod
    def var(cls, i: int, qshift: int = 0, power: int = 1) -> "Monomial":
        return cls(((i, power),), qshift)

    @classmethod
    def scalar(cls, qshift: int = 0, tshift: int = 0) -> "Monomial":
        return cls((), qshift, tshift)

    def is_scalar(self) -> bool:
        return not self.exponents

    def is_one(self) -> bool:
        return not self.exponents and self.qshift == 0 and self.tshift == 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.exponents + other.exponents, self.qshift + other.qshift, self.tshift + other.tshift)

    def __pow__(self, r: int) -> "Monomial":
        return Monomial(tuple((v, e * r) for v, e in self.exponents), self.qshift * r, self.tshift * r)

    def max_var(self) -> int:
        return max((v for v, _ in self.exponents), default=-1)

    def coeff(self):
        if self.tshift:
            return QTRat.monomial(self.qshift, self.tshift)
        return qpow(self.qshift)

    def to_poly(self, nvars: int) -> "LaurentPoly":
        vec = [0] * nvars
        for v, e in self.exponents:
            vec[v] = e
        return LaurentPoly({tuple(vec): self.coeff()}, nvars)

    def to_json(self) -> dict:
        return {"q": self.qshift, "t": self.tshift, "x": {f"x{v}": e for v, e in self.exponents}}

    @classmethod
    def from_json(cls, d: dict) -> "Monomial":
        return cls(tuple((int(k[1:]), int(e)) for k, e in d.get("x", {}).items()), int(d.get("q", 0)), int(d.get("t", 0)))


class LaurentPoly:
    """A finite sum of ``coeff * x^vec`` with field coefficients."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms=None, nvars: int = 1):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for vec, c in terms.items():
                if len(vec) != nvars:
                    raise ValueError("exponent vector length mismatch")
                if not _zero(c):
                    self.terms[tuple(vec)] = c

    @classmethod
    def _raw(cls, terms, nvars):
        obj = object.__new__(cls)
        obj.terms = terms
        obj.nvars = nvars
        return obj

    @classmethod
    def constant(cls, c, nvars: int) -> "LaurentPoly":
        return cls({(0,) * nvars: c if isinstance(c, (QRat, QTRat)) else QRat(c)}, nvars)

    @classmethod
    def monomial(cls, vec, coeff=1, nvars: int | None = None) -> "LaurentPoly":
        vec = tuple(vec)
        n = len(vec) if nvars is None else nvars
        vec = vec + (0,) * (n - len(vec))
        return cls({vec: coeff if isinstance(coeff, (QRat, QTRat)) else QRat(coeff)}, n)

    @classmethod
    def var(cls, i: int, nvars: int, power: int = 1) -> "LaurentPoly":
        vec = [0] * nvars
        vec[i] = power
        return cls({tuple(vec): QRat(1)}, nvars)

    def widen(self, nvars: int) -> "LaurentPoly":
        if nvars == self.nvars:
            return self
        if nvars < self.nvars:
            raise ValueError("cannot drop variables by widening")
        pad = (0,) * (nvars - self.nvars)
        return LaurentPoly._raw({v + pad: c for v, c in self.terms.items()}, nvars)

    # basic protocol ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def coefficient(self, vec):
        return self.terms.get(tuple(vec), QRat(0))

    def __eq__(self, other):
        if isinstance(other, (int, QRat, QTRat)):
            other = LaurentPoly.constant(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = _align(self, other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        return "LaurentPoly(" + " + ".join(f"({c})*{_fmt_vec(v)}" for v, c in self) + ")"

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other, self.nvars)
        a, b = _align(self, other)
        out = dict(a.terms)
        for v, c in b.terms.items():
            s = out.get(v)
            s = c if s is None else s + c
            if _zero(s):
                out.pop(v, None)
            else:
                out[v] = s
        return LaurentPoly._raw(out, a.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({v: -c for v, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "LaurentPoly":
        if _zero(c):
            return LaurentPoly({}, self.nvars)
        return LaurentPoly._raw({v: x * c for v, x in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        a, b = _align(self, other)
        out: dict = {}
        for v1, c1 in a.terms.items():
            for v2, c2 in b.terms.items():
                v = tuple(x + y for x, y in zip(v1, v2))
                s = out.get(v)
                p = c1 * c2
                out[v] = p if s is None else s + p
        return LaurentPoly({v: c for v, c in out.items()}, a.nvars)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = LaurentPoly.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, vec) -> "LaurentPoly":
        """Multiply by the monomial x^vec."""
        vec = tuple(vec) + (0,) * (self.nvars - len(vec))
        return LaurentPoly._raw({tuple(a + b for a, b in zip(v, vec)): c for v, c in self.terms.items()}, self.nvars)

    # structure -----------------------------------------------------------
    def degree_in(self, i: int) -> tuple[int, int]:
        """(min, max) exponent of x_i; raises on the zero polynomial."""
        es = [v[i] for v in self.terms]
        if not es:
            raise ValueError("zero polynomial has no degree")
        return min(es), max(es)

    def total_degrees(self, vars=None) -> set:
        idx = range(self.nvars) if vars is None else vars
        return {sum(v[i] for i in idx) for v in self.terms}

    def is_homogeneous(self, degree: int | None = None, vars=None) -> bool:
        ds = self.total_degrees(vars)
        if not ds:
            return True
        return len(ds) == 1 and (degree is None or degree in ds)

    def map_coeffs(self, fn) -> "LaurentPoly":
        return LaurentPoly({v: fn(c) for v, c in self.terms.items()}, self.nvars)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, QRat(0))

    # substitutions -------------------------------------------------------
    def subs_var(self, u: int, v: int, s: int = 0) -> "LaurentPoly":
        """Substitute x_u -> q^s x_v."""
        out = LaurentPoly({}, self.nvars)
        acc: dict = {}
        for vec, c in self.terms.items():
            e = vec[u]
            nv = list(vec)
            nv[u] = 0
            nv[v] += e
            nv = tuple(nv)
            term = c * qpow(s * e) if s and e else c
            prev = acc.get(nv)
            acc[nv] = term if prev is None else prev + term
        out.terms = {k: c for k, c in acc.items() if not _zero(c)}
        return out

    def subs_qpower(self, u: int, s: int) -> "LaurentPoly":
        """Substitute x_u -> q^s."""
        acc: dict = {}
        for vec, c in self.terms.items():
            e = vec[u]
            nv = vec[:u] + (0,) + vec[u + 1:]
            term = c * qpow(s * e) if e else c
            prev = acc.get(nv)
            acc[nv] = term if prev is None else prev + term
        return LaurentPoly({k: c for k, c in acc.items()}, self.nvars)

    def permute(self, perm) -> "LaurentPoly":
        """Apply x_i -> x_{perm[i]} for every variable index i."""
        out: dict = {}
        for vec, c in self.terms.items():
            nv = [0] * self.nvars
            for i, e in enumerate(vec):
                nv[perm[i]] += e
            out[tuple(nv)] = c
        return LaurentPoly._raw(out, self.nvars)

    # serialization -------------------------------------------------------
    def to_json(self) -> list:
        out = []
        for vec, c in self:
            out.append({
                "exponents": {f"x{i}": e for i, e in enumerate(vec) if e},
                "coeff": c.to_string() if isinstance(c, QRat) else str(c),
            })
        return out

    @classmethod
    def from_json(cls, data: list, nvars: int) -> "LaurentPoly":
        terms = {}
        for item in data:
            vec = [0] * nvars
            for k, e in item["exponents"].items():
                vec[int(k[1:])] = int(e)
            terms[tuple(vec)] = QRat.from_string(item["coeff"])
        return cls(terms, nvars)


def _fmt_vec(v) -> str:
    parts = [f"x{i}^{e}" if e != 1 else f"x{i}" for i, e in enumerate(v) if e]
    return "*".join(parts) if parts else "1"


def _align(a: LaurentPoly, b: LaurentPoly):
    n = max(a.nvars, b.nvars)
    return a.widen(n), b.widen(n)


def ct(f: LaurentPoly, vars) -> LaurentPoly:
    """Keep the terms whose exponent vanishes on every variable in ``vars``."""
    vars = list(vars)
    return LaurentPoly._raw({v: c for v, c in f.terms.items() if all(v[i] == 0 for i in vars)}, f.nvars)


# ---------------------------------------------------------------------------
# q-shifted factorial products


@dataclass(frozen=True)
class QPoch:
    """The factor ``(q^e x^vec; q)_k`` with ``k >= 0``."""

    vec: tuple
    e: int
    k: int

    def to_poly(self) -> LaurentPoly:
        return expand_qpoch_product([self], len(self.vec))


@lru_cache(maxsize=None)
def _int_qbinom(k: int, j: int) -> flint.fmpz_poly:
    num = QRat(1)
    for i in range(j):
        num = num * QRat(_ZP([1] + [0] * (k - i - 1) + [-1])) / QRat(_ZP([1] + [0] * i + [-1]))
    nz = num.numerator
    return nz.numer()


@lru_cache(maxsize=None)
def _qpoch_terms(e: int, k: int):
    """Terms of (q^e z; q)_k = sum_j coeff_j z^j as (j, poly, shift) with a common minimal shift."""
    raw = []
    for j in range(k + 1):
        sign = -1 if j % 2 else 1
        raw.append((j, _int_qbinom(k, j) * sign, j * (j - 1) // 2 + e * j))
    smin = min(s for _, _, s in raw)
    return tuple((j, p.left_shift(s - smin) if s > smin else p, ) for j, p, s in raw), smin


def expand_qpoch_product(factors, nvars: int, box=None, keep=None, as_raw=False):
    """Expand a product of ``QPoch`` factors.

    ``keep`` lists the variable indices that stay. Every other variable is
    set to 1. ``box`` optionally gives a ``(lo, hi)`` range for each kept
    coordinate. Terms are dropped as soon as the remaining factors can no
    longer bring them inside the box. With ``as_raw`` the result is the
    pair ``(dict vec -> fmpz_poly, shift)``, meaning ``sum poly(q) q^shift x^vec``.
    """
    keep = list(range(nvars)) if keep is None else list(keep)
    m = len(keep)
    steps = []
    for f in factors:
        if f.k < 0:
            raise ValueError("negative subscript in a product factor")
        if f.k == 0:
            continue
        dv = tuple(f.vec[i] if i < len(f.vec) else 0 for i in keep)
        terms, smin = _qpoch_terms(f.e, f.k)
        steps.append((dv, terms, smin, f.k))
    shift = 0
    # Reach of the remaining factors, for pruning.
    rem_lo = [[0] * m for _ in range(len(steps) + 1)]
    rem_hi = [[0] * m for _ in range(len(steps) + 1)]
    for s in range(len(steps) - 1, -1, -1):
        dv, _, _, k = steps[s]
        for i in range(m):
            d = dv[i] * k
            rem_lo[s][i] = rem_lo[s + 1][i] + min(0, d)
            rem_hi[s][i] = rem_hi[s + 1][i] + max(0, d)
    cur = {(0,) * m: _ZP([1])}
    for s, (dv, terms, smin, _) in enumerate(steps):
        shift += smin
        lo_r, hi_r = rem_lo[s + 1], rem_hi[s + 1]
        nxt: dict = {}
        zero_dv = not any(dv)
        for vec, p in cur.items():
            for j, cj in terms:
                if zero_dv:
                    nv = vec
                else:
                    nv = tuple(a + j * d for a, d in zip(vec, dv))
                    if box is not None:
                        bad = False
                        for i in range(m):
                            lo, hi = box[i]
                            if nv[i] + lo_r[i] > hi or nv[i] + hi_r[i] < lo:
                                bad = True
                                break
                        if bad:
                            continue
                prev = nxt.get(nv)
                prod = p * cj
                nxt[nv] = prod if prev is None else prev + prod
        cur = {v: p for v, p in nxt.items() if not p.is_zero()}
    if as_raw:
        return cur, shift
    return LaurentPoly({_unkeep(v, keep, nvars): QRat.from_zpoly(p, shift) for v, p in cur.items()}, nvars)


def _unkeep(vec, keep, nvars):
    out = [0] * nvars
    for i, e in zip(keep, vec):
        out[i] = e
    return tuple(out)


def _ratio(nvars: int, i: int, j: int) -> tuple:
    """Exponent vector of x_i / x_j."""
    v = [0] * nvars
    v[i] += 1
    v[j] -= 1
    return tuple(v)


def F_factors(n: int, n0: int, a: int, b: int, c: int, m: int) -> list:
    """The q-factorials whose product is F_{n,n0}(x; a, b, c, m) in x0..xn."""
    if m > n:
        raise ValueError("m must not exceed n")
    if n < 1 or c < 0 or a < 0 or b < 0:
        raise ValueError("invalid parameters")
    N = n + 1
    out = []
    for i in range(1, n + 1):
        out.append(QPoch(_ratio(N, 0, i), 0, a))
        out.append(QPoch(_ratio(N, i, 0), 1, b + chi(i > n - m)))
    out.extend(D_factors(n, n0, c, offset=1, nvars=N))
    return out


def D_factors(n: int, n0: int, c: int, offset: int = 1, nvars: int | None = None, skip=()) -> list:
    """Factors of D_{n,n0}(x, c) on the variables x_offset..x_{offset+n-1}.

    Indices listed in ``skip`` (1-based positions) are left out, which gives
    D on the reduced alphabet x^{(i)} when the positions are renumbered.
    """
    N = offset + n if nvars is None else nvars
    idx = [p for p in range(1, n + 1) if p not in skip]
    out = []
    for ii, i in enumerate(idx):
        for j in idx[ii + 1:]:
            ci = c - chi(ii + 1 <= n0)
            if ci < 0:
                raise ValueError("c too small for this n0")
            out.append(QPoch(_ratio(N, offset + i - 1, offset + j - 1), 0, ci))
            out.append(QPoch(_ratio(N, offset + j - 1, offset + i - 1), 1, ci))
    return out


def build_F(n: int, n0: int, a: int, b: int, c: int, m: int) -> LaurentPoly:
    """F_{n,n0}(x; a, b, c, m) fully expanded in x0..xn."""
    return expand_qpoch_product(F_factors(n, n0, a, b, c, m), n + 1)


def build_D(n: int, n0: int, c: int) -> LaurentPoly:
    """D_{n,n0}(x, c) in x1..xn, with x0 present but unused."""
    return expand_qpoch_product(D_factors(n, n0, c, offset=1, nvars=n + 1), n + 1)


# ---------------------------------------------------------------------------
# one-variable partial fraction constant terms


@dataclass(frozen=True)
class Factor:
    """The binomial ``1 - q^e x_u / x_v``."""

    e: int
    u: int
    v: int


class RationalCT:
    """``numerator / prod (1 - q^{e_r} x_{u_r} / x_{v_r})``."""

    def __init__(self, numerator: LaurentPoly, factors):
        self.numerator = numerator
        self.factors = tuple(f if isinstance(f, Factor) else Factor(*f) for f in factors)
        for f in self.factors:
            if f.u == f.v:
                raise ValueError("a factor must involve two distinct variables")

    def __repr__(self):
        den = "".join(f"(1-q^{f.e}x{f.u}/x{f.v})" for f in self.factors)
        return f"RationalCT({self.numerator!r} / {den})"

    def cleared(self, nvars: int | None = None) -> LaurentPoly:
        """The denominator as a Laurent polynomial."""
        n = nvars or self.numerator.nvars
        out = LaurentPoly.constant(1, n)
        for f in self.factors:
            out = out * (LaurentPoly.constant(1, n) - LaurentPoly.monomial(_ratio(n, f.u, f.v), qpow(f.e)))
        return out


def _position(order):
    return {v: i for i, v in enumerate(order)}


def ct_partial_fraction(r: RationalCT, k: int, order=None) -> list:
    """CT in x_k of ``r`` as a list of ``RationalCT`` summands.

    ``order`` lists the variables from the innermost series variable (the
    one every expansion treats as smallest) outward. The default is
    ``0, 1, ..., nvars-1``. Factors that do not involve x_k are carried
    through unchanged. Factors of the shape ``1 - c x_i/x_k`` are rewritten
    as ``-c x_i/x_k (1 - c^{-1} x_k/x_i)`` first.
    """
    n = r.numerator.nvars
    pos = _position(range(n) if order is None else order)
    num = r.numerator
    inert, active = [], []
    for f in r.factors:
        if f.u == k:
            active.append((f.e, f.v))
        elif f.v == k:
            # 1 - q^e x_u/x_k = -q^e (x_u/x_k)(1 - q^{-e} x_k/x_u)
            num = num * LaurentPoly.monomial(_ratio(n, k, f.u), -qpow(-f.e))
            active.append((-f.e, f.u))
        else:
            inert.append(f)
    m = len(active)
    seen = {}
    for e, i in active:
        if seen.setdefault(i, set()) and e in seen[i]:
            raise ValueError("repeated factor: the constants must differ for equal variables")
        seen[i].add(e)
    if num.is_zero():
        return []
    lo, hi = num.degree_in(k)
    if hi > m - 1:
        raise ValueError(f"numerator degree {hi} in x{k} exceeds {m - 1}: partial fraction lemma does not apply")
    out = []
    for idx, (e, i) in enumerate(active):
        if pos[i] <= pos[k]:
            continue
        # x_k -> q^{-e} x_i
        new_num = num.subs_var(k, i, -e)
        new_f = list(inert)
        for jdx, (e2, i2) in enumerate(active):
            if jdx == idx:
                continue
            # 1 - q^{e2} x_k/x_{i2} at x_k = q^{-e} x_i
            if i2 == i:
                scal = 1 - qpow(e2 - e)
                new_num = new_num.scale(QRat(1) / scal)
            else:
                new_f.append(Factor(e2 - e, i, i2))
        out.append(RationalCT(new_num, new_f))
    return out


def _series_factor(f: Factor, n: int, pos, depth: int) -> LaurentPoly:
    """Truncated expansion of 1/(1 - q^e x_u/x_v) following ``pos``."""
    if pos[f.u] < pos[f.v]:
        base = LaurentPoly.monomial(_ratio(n, f.u, f.v), qpow(f.e))
        pre = LaurentPoly.constant(1, n)
    else:
        base = LaurentPoly.monomial(_ratio(n, f.v, f.u), qpow(-f.e))
        pre = -base
    out = LaurentPoly.constant(1, n)
    p = LaurentPoly.constant(1, n)
    for _ in range(depth):
        p = p * base
        out = out + p
    return pre * out


def _weight(vec, pos) -> int:
    return sum(pos[i] * e for i, e in enumerate(vec))


def ct_series_oracle(r: RationalCT, k: int, order=None, depth: int = 6):
    """Independent check of ``ct_partial_fraction`` by truncated series.

    Each denominator factor is expanded as a geometric series in the
    direction fixed by ``order``. Terms are graded by ``sum pos(i) e_i``.
    Every expansion step lowers the grade by at least one, so a product
    truncated at ``depth`` steps is exact in grades above ``top - depth``.
    Returns ``(lhs, rhs, cutoff)``: the series of the true constant term,
    the series of the lemma's answer, and the grade above which both are
    exact.
    """
    n = r.numerator.nvars
    order = list(range(n)) if order is None else list(order)
    pos = _position(order)

    def expand(rc: RationalCT) -> LaurentPoly:
        out = rc.numerator
        for f in rc.factors:
            out = _truncate(out * _series_factor(f, n, pos, depth), pos, depth, top)
        return out

    def top_of(rc: RationalCT) -> int:
        # every factor's expansion has leading grade <= 0
        return max((_weight(v, pos) for v in rc.numerator.terms), default=0)

    pieces = ct_partial_fraction(r, k, order)
    top = max([top_of(r)] + [top_of(p) for p in pieces])
    lhs = ct(expand(r), [k])
    rhs = LaurentPoly({}, n)
    for p in pieces:
        rhs = rhs + expand(p)
    cutoff = top - depth
    keep = lambda f: LaurentPoly({v: c for v, c in f.terms.items() if _weight(v, pos) > cutoff}, n)
    return keep(lhs), keep(rhs), cutoff


def _truncate(f: LaurentPoly, pos, depth: int, top: int) -> LaurentPoly:
    return LaurentPoly._raw({v: c for v, c in f.terms.items() if _weight(v, pos) > top - depth - 1}, f.nvars)


# ---------------------------------------------------------------------------
# splitting formulas


def _poch_poly(N: int, i: int, l: int, e: int, k: int) -> LaurentPoly:
    """(q^e x_i/x_l; q)_k as a Laurent polynomial; k may be zero."""
    if k < 0:
        raise ValueError("negative subscript")
    return expand_qpoch_product([QPoch(_ratio(N, i, l), e, k)], N)


def _prod(polys, N: int) -> LaurentPoly:
    out = LaurentPoly.constant(1, N)
    for p in polys:
        out = out * p
    return out


def _D_reduced(n: int, n0: int, c: int, skip: int, N: int) -> LaurentPoly:
    """D_{n-1, n0'}(x^{(skip)}) on the original indices 1..n.

    The reduced alphabet keeps the relative order, so the threshold n0' is
    applied to the position inside x^{(skip)}.
    """
    idx = [p for p in range(1, n + 1) if p != skip]
    facs = []
    for a, i in enumerate(idx):
        for j in idx[a + 1:]:
            ci = c - chi(a + 1 <= n0)
            facs.append(QPoch(_ratio(N, i, j), 0, ci))
            facs.append(QPoch(_ratio(N, j, i), 1, ci))
    return expand_qpoch_product(facs, N)


def splitting_S_terms(n: int, n0: int, c: int):
    """The closed-form coefficients of the S-splitting.

    Returns a list of ``(i, j, coeff)`` where ``coeff`` is a Laurent
    polynomial in x1..xn (index 0 unused, index n+1 reserved for w).
    """
    N = n + 2
    out = []
    for i in range(1, n0 + 1):
        for j in range(0, c - 1):
            scal = qpow((c - 1) * (j * (n - 1) + n0 - i) + j * (n - n0)) / (q_poch_qpower(-j, j) * q_poch_qpower(1, c - j - 2))
            parts = [_D_reduced(n, n0 - 1, c, i, N)]
            for l in range(1, i):
                parts += [_poch_poly(N, i, l, 2 - c, j), _poch_poly(N, i, l, j + 1, c - j - 1)]
            for l in range(i + 1, n0 + 1):
                parts += [_poch_poly(N, i, l, 1 - c, j + 1), _poch_poly(N, i, l, j + 1, c - j - 2)]
            for l in range(n0 + 1, n + 1):
                parts += [
                    LaurentPoly.monomial(_ratio(N, i, l), -1),
                    _poch_poly(N, i, l, 1 - c, j),
                    _poch_poly(N, i, l, j + 1, c - j - 2),
                ]
            out.append(("A", i, j, _prod(parts, N).scale(scal)))
    for i in range(n0 + 1, n + 1):
        for j in range(0, c):
            scal = qpow((n - 1) * j * c + (n - i) * c - n0 * j) / (q_poch_qpower(-j, j) * q_poch_qpower(1, c - j - 1))
            parts = [_D_reduced(n, n0, c, i, N)]
            for l in range(1, n0 + 1):
                parts += [_poch_poly(N, i, l, 2 - c, j), _poch_poly(N, i, l, j + 1, c - j - 1)]
            for l in range(n0 + 1, i):
                parts += [_poch_poly(N, i, l, 1 - c, j), _poch_poly(N, i, l, j + 1, c - j)]
            for l in range(i + 1, n + 1):
                parts += [_poch_poly(N, i, l, -c, j + 1), _poch_poly(N, i, l, j + 1, c - j - 1)]
            out.append(("B", i, j, _prod(parts, N).scale(scal)))
    return out


def _binomial_w(N: int, i: int, wi: int, e: int, inverse: bool) -> LaurentPoly:
    """1 - q^e x_i/x_w, or 1 - q^e x_w/x_i when ``inverse``."""
    vec = _ratio(N, wi, i) if inverse else _ratio(N, i, wi)
    return LaurentPoly.constant(1, N) - LaurentPoly.monomial(vec, qpow(e))


def verify_splitting_S(n: int, n0: int, c: int) -> bool:
    """Check the S-splitting with all denominators cleared."""
    if n < 1 or c < 1 or not 0 <= n0 <= n:
        raise ValueError("need n >= 1, c >= 1, 0 <= n0 <= n")
    N = n + 2
    w = n + 1
    dens = [(i, j) for i in range(1, n0 + 1) for j in range(c - 1)]
    dens += [(i, j) for i in range(n0 + 1, n + 1) for j in range(c)]
    lhs = _D_reduced(n, n0, c, 0, N)
    rhs = LaurentPoly({}, N)
    for _, i, j, coeff in splitting_S_terms(n, n0, c):
        others = [_binomial_w(N, i2, w, j2, False) for (i2, j2) in dens if (i2, j2) != (i, j)]
        rhs = rhs + coeff * _prod(others, N)
    return lhs == rhs


def splitting_T_terms(n: int, n0: int, c: int):
    N = n + 2
    out = []
    for i in range(1, n0 + 1):
        for j in range(0, c - 1):
            scal = QRat(1) / (q_poch_qpower(-j, j) * q_poch_qpower(1, c - j - 2))
            parts = [_D_reduced(n, n0 - 1, c, i, N)]
            for l in range(1, i):
                scal = scal * qpow((c - 1) * (j + 1))
                parts += [_poch_poly(N, l, i, 1 - c, j + 1), _poch_poly(N, l, i, j + 1, c - j - 2)]
            for l in range(i + 1, n0 + 1):
                scal = scal * qpow((c - 1) * j)
                parts += [_poch_poly(N, l, i, 2 - c, j), _poch_poly(N, l, i, j + 1, c - j - 1)]
            for l in range(n0 + 1, n + 1):
                scal = scal * qpow(c * j + 1)
                parts += [
                    LaurentPoly.monomial(_ratio(N, l, i), -1),
                    _poch_poly(N, l, i, 2 - c, j),
                    _poch_poly(N, l, i, j + 2, c - j - 2),
                ]
            out.append(("A", i, j, _prod(parts, N).scale(scal)))
    for i in range(n0 + 1, n + 1):
        for j in range(-1, c - 1):
            scal = QRat(1) / (q_poch_qpower(-j - 1, j + 1) * q_poch_qpower(1, c - j - 2))
            parts = [_D_reduced(n, n0, c, i, N)]
            for l in range(1, n0 + 1):
                scal = scal * qpow((c - 1) * (j + 1))
                parts += [_poch_poly(N, l, i, 1 - c, j + 1), _poch_poly(N, l, i, j + 1, c - j - 2)]
            for l in range(n0 + 1, i):
                scal = scal * qpow(c * (j + 2))
                parts += [_poch_poly(N, l, i, -c, j + 2), _poch_poly(N, l, i, j + 2, c - j - 2)]
            for l in range(i + 1, n + 1):
                scal = scal * qpow(c * (j + 1))
                parts += [_poch_poly(N, l, i, 1 - c, j + 1), _poch_poly(N, l, i, j + 2, c - j - 1)]
            out.append(("B", i, j, _prod(parts, N).scale(scal)))
    return out


def verify_splitting_T(n: int, n0: int, c: int) -> bool:
    """Check the T-splitting with all denominators cleared; y is x_{n+1}."""
    if n < 1 or c < 1 or not 0 <= n0 <= n:
        raise ValueError("need n >= 1, c >= 1, 0 <= n0 <= n")
    N = n + 2
    y = n + 1
    dens = [(i, j) for i in range(1, n0 + 1) for j in range(c - 1)]
    dens += [(i, j) for i in range(n0 + 1, n + 1) for j in range(-1, c - 1)]
    lhs = _D_reduced(n, n0, c, 0, N)
    rhs = LaurentPoly({}, N)
    for _, i, j, coeff in splitting_T_terms(n, n0, c):
        others = [_binomial_w(N, i2, y, j2, True) for (i2, j2) in dens if (i2, j2) != (i, j)]
        rhs = rhs + coeff * _prod(others, N)
    return lhs == rhs


# ---------------------------------------------------------------------------
# the q-factorial lemma


def _ypoch(e: int, k: int, power: int) -> LaurentPoly:
    """(q^e y^power; q)_k in the single variable y, k >= 0."""
    return expand_qpoch_product([QPoch((power,), e, k)], 1)


def verify_qfact_lemma(i: int, j: int, t: int, case: str) -> bool:
    """Check one instance of the three q-factorial identities in y.

    Both sides are multiplied by the left-hand denominator, which is a
    Laurent polynomial in y, so the comparison is between polynomials.
    """
    if i < 0 or j < 0:
        raise ValueError("i and j must be nonnegative")
    one = LaurentPoly.monomial((1,), 1)
    if case == "b1":
        if not 0 <= t <= j:
            raise ValueError("b1 needs 0 <= t <= j")
        lhs = _ypoch(0, i, -1) * _ypoch(1, j, 1)
        den = _ypoch(-t, i, -1)
        rhs = _ypoch(1 - i, t, 1) * _ypoch(t + 1, j - t, 1) * qpow(i * t)
    elif case == "b2":
        if not -1 <= t <= j - 1:
            raise ValueError("b2 needs -1 <= t <= j-1")
        lhs = _ypoch(0, j, 1) * _ypoch(1, i, -1)
        den = _ypoch(-t, i, -1)
        rhs = _ypoch(-i, t + 1, 1) * _ypoch(t + 1, j - t - 1, 1) * qpow(i * (t + 1))
    elif case == "c":
        if not 0 <= t <= j - 1:
            raise ValueError("c needs 0 <= t <= j-1")
        lhs = _ypoch(0, j, 1) * _ypoch(1, i, -1)
        den = _ypoch(-t, i + 1, -1)
        rhs = one * _ypoch(-i, t, 1) * _ypoch(t + 1, j - t - 1, 1) * (-qpow((i + 1) * t))
    else:
        raise ValueError(f"unknown case {case!r}")
    return lhs == rhs * den


# ---------------------------------------------------------------------------
# symmetrization


def _is_symmetric(f: LaurentPoly, vars) -> bool:
    vars = list(vars)
    for a, b in zip(vars, vars[1:]):
        perm = list(range(f.nvars))
        perm[a], perm[b] = b, a
        if f.permute(perm) != f:
            return False
    return True


def weyl_sum_holds(n: int, c: int) -> bool:
    """Sum over S_n of w(prod_{i<j} (1 - q^c x_j/x_i)/(1 - x_j/x_i)).

    Writing prod_{i<j}(1 - x_j/x_i) = V / M with V the Vandermonde product
    prod_{i<j}(x_i - x_j) and M = prod x_i^{n-i}, each summand equals
    sgn(w) w(N M) / V, so the identity is checked as
    sum sgn(w) w(N M) = RHS * V.
    """
    N = n + 1
    NM = LaurentPoly.constant(1, N)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            NM = NM * (LaurentPoly.constant(1, N) - LaurentPoly.monomial(_ratio(N, j, i), qpow(c)))
        NM = NM * LaurentPoly.var(i, N, n - i)
    V = LaurentPoly.constant(1, N)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            V = V * (LaurentPoly.var(i, N) - LaurentPoly.var(j, N))
    total = LaurentPoly({}, N)
    for perm in itertools.permutations(range(1, n + 1)):
        sign = _perm_sign(perm)
        full = [0] + list(perm)
        total = total + NM.permute(full).scale(sign)
    rhs = QRat(1)
    for i in range(1, n):
        rhs = rhs * (1 - qpow((i + 1) * c)) / (1 - qpow(c))
    return total == V.scale(rhs)


def _perm_sign(perm) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def verify_symmetrization(n: int, c: int, f: LaurentPoly) -> bool:
    """Check the symmetrization identity for a symmetric Laurent polynomial f in x1..xn."""
    N = n + 1
    f = f.widen(N)
    if not _is_symmetric(f, range(1, n + 1)):
        raise ValueError("f is not symmetric in x1..xn")
    half, full = [], []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i < j:
                half.append(QPoch(_ratio(N, i, j), 0, c))
                half.append(QPoch(_ratio(N, j, i), 1, c))
            if i != j:
                full.append(QPoch(_ratio(N, i, j), 0, c))
    xs = range(1, n + 1)
    lhs = ct(f * expand_qpoch_product(half, N), xs).constant_term()
    rhs = ct(f * expand_qpoch_product(full, N), xs).constant_term()
    factor = QRat(Fraction(1, math.factorial(n)))
    for i in range(1, n):
        factor = factor * (1 - qpow((i + 1) * c)) / (1 - qpow(c))
    return lhs == rhs * factor and weyl_sum_holds(n, c)
