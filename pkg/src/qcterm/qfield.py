"""Exact arithmetic in Q(q), plus the bivariate field Q(q, t).

``QRat`` is a rational function in ``q`` kept in a canonical form: the
numerator and denominator are coprime, and the denominator is a primitive
integer polynomial with positive leading coefficient. Any rational content
sits in the numerator. Because the form is canonical, ``==`` compares
structure and that is the same as comparing values.

``QTRat`` plays the same role for Q(q, t). The Macdonald machinery needs it
whenever q and t have to stay independent, for example when they swap.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

import flint

__all__ = [
    "QRat",
    "QTRat",
    "PoleError",
    "q",
    "qpow",
    "q_poch_qpower",
    "q_binomial",
    "q_factorial",
]


class PoleError(ZeroDivisionError):
    """Raised when a q-expression has a vanishing denominator."""


_ZP = flint.fmpz_poly
_QP = flint.fmpq_poly
_ONE_Z = _ZP([1])


def _canon(num: flint.fmpq_poly, den: flint.fmpz_poly):
    if den.is_zero():
        raise PoleError("zero denominator")
    if num.is_zero():
        return _QP([]), _ONE_Z
    nz = num.numer()
    nd = num.denom()
    if den.degree() > 0:
        g = nz.gcd(den)
        if g.degree() > 0:
            nz = nz // g
            den = den // g
    lead = den.leading_coefficient()
    cont = den.content()
    if lead < 0:
        cont = -cont
    if cont != 1:
        den = den // cont
    return _QP(nz) / (nd * cont), den


def _as_qrat(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, int):
        return QRat._raw(_QP([x]), _ONE_Z)
    if isinstance(x, Fraction):
        return QRat._raw(_QP([x.numerator]) / x.denominator, _ONE_Z)
    if isinstance(x, (flint.fmpz, flint.fmpq)):
        return QRat._raw(_QP([x]), _ONE_Z)
    return None


class QRat:
    """An element of Q(q)."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, QRat) and den == 1:
            self._num, self._den = num._num, num._den
            self._hash = None
            return
        if isinstance(num, Fraction):
            num = flint.fmpq(num.numerator, num.denominator)
        n = _QP(num) if not isinstance(num, _QP) else num
        if isinstance(den, _QP):
            n = n * den.denom()
            d = den.numer()
        else:
            d = _ZP(den) if not isinstance(den, _ZP) else den
        self._num, self._den = _canon(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def from_zpoly(cls, poly: flint.fmpz_poly, shift: int = 0) -> "QRat":
        """``poly(q) * q**shift`` for an integer polynomial."""
        if shift >= 0:
            if shift:
                poly = poly.left_shift(shift)
            return cls._raw(_QP(poly), _ONE_Z)
        return cls(_QP(poly), _ZP([0] * (-shift) + [1]))

    # structure -----------------------------------------------------------
    @property
    def numerator(self) -> flint.fmpq_poly:
        return self._num

    @property
    def denominator(self) -> flint.fmpz_poly:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        return self._den.degree() == 0

    def is_laurent(self) -> bool:
        """True when the denominator is a power of q."""
        d = self._den
        return d.degree() == 0 or (d.coeffs()[-1] == 1 and all(c == 0 for c in d.coeffs()[:-1]))

    def laurent_terms(self) -> dict[int, Fraction]:
        """Exponent -> coefficient, valid only when ``is_laurent()``."""
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial in q")
        shift = self._den.degree()
        out = {}
        for e, c in enumerate(self._num.coeffs()):
            if c != 0:
                out[e - shift] = Fraction(int(c.p), int(c.q))
        return out

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        o = _as_qrat(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            if self._den.degree() == 0:
                return QRat._raw(self._num + o._num, _ONE_Z)
            return QRat(self._num + o._num, self._den)
        return QRat(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(-self._num, self._den)

    def __sub__(self, other):
        o = _as_qrat(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_qrat(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _as_qrat(other)
        if o is None:
            return NotImplemented
        if self._den.degree() == 0 and o._den.degree() == 0:
            return QRat._raw(self._num * o._num, _ONE_Z)
        return QRat(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        n = self._num
        return QRat(_QP(self._den) * n.denom(), n.numer())

    def __truediv__(self, other):
        o = _as_qrat(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _as_qrat(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return QRat(self._num ** k, self._den ** k)

    def __eq__(self, other):
        o = _as_qrat(other)
        if o is None:
            if isinstance(other, QTRat):
                return QTRat.coerce(self) == other
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((str(self._num), str(self._den)))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # evaluation and substitution -----------------------------------------
    def __call__(self, q0):
        """Evaluate at a rational number."""
        q0 = Fraction(q0)
        num = sum((Fraction(int(c.p), int(c.q)) * q0 ** e for e, c in enumerate(self._num.coeffs())), Fraction(0))
        den = sum((int(c) * q0 ** e for e, c in enumerate(self._den.coeffs())), Fraction(0))
        if den == 0:
            raise PoleError(f"pole at q={q0}")
        return num / den

    def subs_qpower(self, k: int) -> "QRat":
        """Substitute q -> q**k (k != 0)."""
        if k == 0:
            raise ValueError("q -> 1 is not a field map")
        return _poly_at_qpower(self._num, k) / _poly_at_qpower(_QP(self._den), k)

    # printing ------------------------------------------------------------
    def __repr__(self):
        return f"QRat({self.to_string()!r})"

    def __str__(self):
        if self._den.degree() == 0:
            return _fmt_poly(self._num.coeffs())
        return f"({_fmt_poly(self._num.coeffs())})/({_fmt_poly(self._den.coeffs())})"

    def to_string(self) -> str:
        """Serialize as ``(num)/(den)`` with sparse ``c*q^e`` terms."""
        return f"({_terms(self._num.coeffs())})/({_terms(self._den.coeffs())})"

    @classmethod
    def from_string(cls, s: str) -> "QRat":
        s = s.strip()
        m = re.fullmatch(r"\((.*)\)/\((.*)\)", s)
        if m is None:
            raise ValueError(f"cannot parse {s!r}")
        return cls(_parse_terms(m.group(1)), _parse_terms(m.group(2)))


def _fmt_poly(coeffs) -> str:
    parts = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
        if mono and c == 1:
            parts.append(f"+{mono}")
        elif mono and c == -1:
            parts.append(f"-{mono}")
        else:
            cs = str(c)
            sign = "-" if cs.startswith("-") else "+"
            cs = cs.lstrip("-")
            parts.append(f"{sign}{cs}*{mono}" if mono else f"{sign}{cs}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def _terms(coeffs) -> str:
    ts = [f"{c}*q^{e}" for e, c in enumerate(coeffs) if c != 0]
    return " + ".join(ts) if ts else "0"


def _parse_terms(s: str) -> flint.fmpq_poly:
    s = s.strip()
    if s == "0":
        return _QP([])
    coeffs: dict[int, Fraction] = {}
    for tok in s.split(" + "):
        c, e = tok.strip().split("*q^")
        coeffs[int(e)] = coeffs.get(int(e), Fraction(0)) + Fraction(c)
    if min(coeffs) < 0:
        raise ValueError("negative exponent in serialized polynomial")
    lst = [Fraction(0)] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        lst[e] = c
    return _QP([flint.fmpq(c.numerator, c.denominator) for c in lst])


def _poly_at_qpower(p: flint.fmpq_poly, k: int) -> QRat:
    coeffs = p.coeffs()
    if k > 0:
        out = [0] * (k * (len(coeffs) - 1) + 1) if coeffs else []
        for e, c in enumerate(coeffs):
            out[k * e] = c
        return QRat(_QP(out))
    top = -k * (len(coeffs) - 1)
    out = [0] * (top + 1)
    for e, c in enumerate(coeffs):
        out[top + k * e] = c
    return QRat(_QP(out), _ZP([0] * top + [1]))


def qpow(e: int) -> QRat:
    """The monomial q**e for any integer e."""
    return QRat.from_zpoly(_ONE_Z, e)


q = qpow(1)


@lru_cache(maxsize=None)
def q_poch_qpower(e: int, k: int) -> QRat:
    """(q^e; q)_k for integers e and k, including negative k."""
    if k == 0:
        return QRat(1)
    if k > 0:
        if e <= 0 < e + k:
            return QRat(0)
        acc = _ONE_Z
        shift = 0
        for i in range(k):
            ex = e + i
            if ex > 0:
                acc = acc * _ZP([1] + [0] * (ex - 1) + [-1])
            else:
                # 1 - q^ex = q^ex (q^-ex - 1)
                acc = acc * _ZP([-1] + [0] * (-ex - 1) + [1])
                shift += ex
        return QRat.from_zpoly(acc, shift)
    for j in range(k, 0):
        if e + j == 0:
            raise PoleError(f"(q^{e};q)_{k} has the factor 1/(1-q^0)")
    return q_poch_qpower(e + k, -k).inverse()


def q_factorial(k: int) -> QRat:
    """(q;q)_k."""
    return q_poch_qpower(1, k)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QRat:
    """[n choose k]_q = (q^{n-k+1})_k / (q)_k for any integer n and k >= 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return q_poch_qpower(n - k + 1, k) / q_factorial(k)


# ---------------------------------------------------------------------------
# Q(q, t)

_CTX = flint.fmpz_mpoly_ctx.get(("q", "t"))
_MONE = _CTX.from_dict({(0, 0): 1})
_MZERO = _CTX.from_dict({})


def _mcanon(num, den):
    if den.is_zero():
        raise PoleError("zero denominator")
    if num.is_zero():
        return _MZERO, _MONE
    g = num.gcd(den)
    if not g.is_one():
        num = num / g
        den = den / g
    lead = den.leading_coefficient()
    if lead < 0:
        num, den = -num, -den
    return num, den


class QTRat:
    """An element of Q(q, t), held as a reduced quotient of integer polynomials."""

    __slots__ = ("_num", "_den")

    def __init__(self, num=None, den=None, _raw=False):
        if _raw:
            self._num, self._den = num, den
            return
        num = _MZERO if num is None else num
        den = _MONE if den is None else den
        self._num, self._den = _mcanon(num, den)

    @classmethod
    def coerce(cls, x) -> "QTRat":
        if isinstance(x, QTRat):
            return x
        if isinstance(x, int):
            return cls(_CTX.from_dict({(0, 0): x}) if x else _MZERO)
        if isinstance(x, Fraction):
            return cls(_CTX.from_dict({(0, 0): x.numerator}), _CTX.from_dict({(0, 0): x.denominator}))
        if isinstance(x, QRat):
            n = x.numerator
            num = _CTX.from_dict({(e, 0): int(c) for e, c in enumerate(n.numer().coeffs()) if c != 0})
            den = _CTX.from_dict({(e, 0): int(c) * int(n.denom()) for e, c in enumerate(x.denominator.coeffs()) if c != 0})
            return cls(num, den)
        raise TypeError(f"cannot coerce {type(x).__name__} to QTRat")

    @classmethod
    def monomial(cls, qe: int = 0, te: int = 0, coeff: int = 1) -> "QTRat":
        num = _CTX.from_dict({(max(qe, 0), max(te, 0)): coeff})
        den = _CTX.from_dict({(max(-qe, 0), max(-te, 0)): 1})
        return cls(num, den)

    @property
    def numerator(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def _co(self, other):
        if isinstance(other, QTRat):
            return other
        try:
            return QTRat.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            if self._den.is_one():
                return QTRat(self._num + o._num, _MONE, _raw=True)
            return QTRat(self._num + o._num, self._den)
        return QTRat(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __neg__(self):
        return QTRat(-self._num, self._den, _raw=True)

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        if self._den.is_one() and o._den.is_one():
            return QTRat(self._num * o._num, _MONE, _raw=True)
        return QTRat(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(q,t)")
        return QTRat(self._den, self._num)

    def __truediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return QTRat(self._num ** k, self._den ** k, _raw=True)

    def __eq__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        return hash((str(self._num), str(self._den)))

    def __repr__(self):
        return f"QTRat(({self._num})/({self._den}))"

    def __str__(self):
        if self._den.is_one():
            return str(self._num)
        return f"({self._num})/({self._den})"

    # field maps ----------------------------------------------------------
    def swap(self) -> "QTRat":
        """Exchange q and t."""
        sw = lambda p: _CTX.from_dict({(b, a): c for (a, b), c in p.to_dict().items()})
        return QTRat(sw(self._num), sw(self._den))

    def specialize_t(self, c: int) -> QRat:
        """Substitute t = q**c."""
        num = _mpoly_at(self._num, c)
        den = _mpoly_at(self._den, c)
        if den.is_zero():
            raise PoleError(f"t = q^{c} is a pole")
        return num / den

    def to_qrat(self) -> QRat:
        """Exact conversion when t does not occur."""
        for p in (self._num, self._den):
            if any(b for (_, b) in p.to_dict()):
                raise ValueError("element depends on t")
        return self.specialize_t(0)

    def eval(self, q0, t0) -> Fraction:
        q0, t0 = Fraction(q0), Fraction(t0)
        ev = lambda p: sum((Fraction(int(c)) * q0 ** int(a) * t0 ** int(b) for (a, b), c in p.to_dict().items()), Fraction(0))
        d = ev(self._den)
        if d == 0:
            raise PoleError("pole")
        return ev(self._num) / d


def _mpoly_at(p, c: int) -> QRat:
    terms: dict[int, int] = {}
    for (a, b), coef in p.to_dict().items():
        e = a + c * b
        terms[e] = terms.get(e, 0) + int(coef)
    if not terms:
        return QRat(0)
    lo = min(terms)
    lst = [0] * (max(terms) - lo + 1)
    for e, v in terms.items():
        lst[e - lo] = v
    return QRat.from_zpoly(_ZP(lst), lo)
