"""Constant-term identities of q-Morris / Baker-Forrester type.

Every left-hand side is a constant term ``CT x0^{-K} F(x) G(x)``. Here F
is a product of q-shifted factorials, homogeneous of degree 0, and G is a
homogeneous weight of degree K built from plethystic evaluations. By
homogeneity x0 can be set to 1. F is then split into the a-independent
part ``R = prod (q x_i)_{b_i} * D(x)``, cached per parameter tuple, and
the separable factor ``prod (1/x_i)_a``. The constant term becomes a sum
of products of integer polynomials in q.

Right-hand sides are the closed product formulas, built from
``q_poch_qpower`` and plethystic scalar evaluations. Values at negative a
come from exact Lagrange interpolation in y = q^a.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

import flint

from .laurent import (
    LaurentPoly,
    QPoch,
    _ratio,
    build_D,
    build_F,
    chi,
    ct,
    D_factors,
    expand_qpoch_product,
)
from .macdonald import macdonald_P
from .partitions import Partition
from .plethysm import (
    GeomDiv,
    ONE,
    alphabet_sum,
    eval_sym,
    letter,
    qratio_alphabet,
)
from .qfield import QRat, q_poch_qpower, qpow
from .symfunc import expand_in_vars, h

__all__ = [
    "IdentityParams",
    "VerdictRecord",
    "ct_weighted",
    "ct_bruteforce",
    "qmorris_lhs",
    "qmorris_rhs",
    "verify_qmorris",
    "bf_rhs",
    "lhs_A",
    "rhs_A",
    "lhs_B",
    "rhs_B",
    "lhs_C",
    "rhs_C",
    "verify_identity",
    "verify_vanishing",
    "roots_B",
    "roots_C",
    "degree_bound",
    "values_in_a",
    "interpolate_at",
    "verify_polynomiality",
    "verify_roots",
    "extra_point_B",
    "extra_point_C",
    "sub_B_route",
    "verify_special_points",
]


def _poch(e: int, k: int) -> QRat:
    """(q^e; q)_k."""
    return q_poch_qpower(e, k)


def _qfac(k: int) -> QRat:
    return q_poch_qpower(1, k)


# ---------------------------------------------------------------------------
# parameter and verdict records


@dataclass(frozen=True)
class IdentityParams:
    name: str
    n: int = 0
    n0: int = 0
    a: int = 0
    b: int = 0
    c: int = 1
    l: int = 0
    m: int = 0
    mu: tuple = ()
    lam: tuple = ()

    def to_json(self) -> dict:
        d = asdict(self)
        d["mu"] = list(self.mu)
        d["lam"] = list(self.lam)
        return d


@dataclass
class VerdictRecord:
    params: IdentityParams
    lhs: QRat
    rhs: QRat
    equal: bool
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "equal": self.equal,
            "elapsed": round(self.elapsed, 6),
        }


# ---------------------------------------------------------------------------
# constant term engine


def _homogeneous_factors(factors) -> bool:
    return all(sum(f.vec) == 0 for f in factors)


@lru_cache(maxsize=128)
def _R_part(n: int, n0: int, b: int, c: int, m: int):
    N = n + 1
    facs = [QPoch(_ratio(N, i, 0), 1, b + chi(i > n - m)) for i in range(1, n + 1)]
    facs += D_factors(n, n0, c, offset=1, nvars=N)
    assert _homogeneous_factors(facs)
    return expand_qpoch_product(facs, N, keep=range(1, N), as_raw=True)


@lru_cache(maxsize=128)
def _A_part(n: int, a: int):
    N = n + 1
    facs = [QPoch(_ratio(N, 0, i), 0, a) for i in range(1, n + 1)]
    return expand_qpoch_product(facs, N, keep=range(1, N), as_raw=True)


def ct_weighted(n: int, n0: int, a: int, b: int, c: int, m: int, G: LaurentPoly, K: int) -> QRat:
    """CT over x0..xn of x0^{-K} F_{n,n0}(x; a, b, c, m) G(x)."""
    if a < 0 or b < 0 or c < 0 or not 0 <= m <= n:
        raise ValueError("need a, b, c >= 0 and 0 <= m <= n")
    if c == 0 and n0 > 0:
        raise ValueError("c = 0 requires n0 = 0")
    N = n + 1
    G = G.widen(N)
    if not G.is_zero() and not G.is_homogeneous(K):
        raise AssertionError("weight is not homogeneous of the stated degree")
    R, r_shift = _R_part(n, n0, b, c, m)
    A, a_shift = _A_part(n, a)
    collapsed: dict = {}
    for vec, g in G.terms.items():
        key = vec[1:]
        collapsed[key] = collapsed[key] + g if key in collapsed else g
    total = QRat(0)
    zero = flint.fmpz_poly(0)
    for beta, g in collapsed.items():
        inner = zero
        for alpha, pa in A.items():
            pr = R.get(tuple(-x - y for x, y in zip(beta, alpha)))
            if pr is not None:
                inner = inner + pa * pr
        if not inner.is_zero():
            total = total + g * QRat.from_zpoly(inner, a_shift + r_shift)
    return total


def ct_bruteforce(n: int, n0: int, a: int, b: int, c: int, m: int, G: LaurentPoly, K: int) -> QRat:
    """Same constant term by full expansion in all of x0..xn (oracle route)."""
    N = n + 1
    f = build_F(n, n0, a, b, c, m) * G.widen(N) * LaurentPoly.var(0, N, -K)
    return ct(f, range(N)).constant_term()


# ---------------------------------------------------------------------------
# alphabets and weights


def _scalar(f, X) -> QRat:
    val = eval_sym(f, X, 1)
    if any(any(v) for v in val.terms):
        raise ValueError("alphabet is not scalar")
    return val.constant_term()


def _qratio(u: int, v: int, den: int) -> GeomDiv:
    """The scalar alphabet (q^u - q^v)/(1 - q^den)."""
    return qratio_alphabet((u, v), den, ONE)


def _h_alphabet(n: int, n0: int, c: int):
    """sum_i ((1 - q^{c - chi(i <= n0)})/(1 - q)) x_i."""
    return alphabet_sum([qratio_alphabet((0, c - chi(i <= n0)), 1, letter(i)) for i in range(1, n + 1)])


def _P_alphabet_B(n: int, n0: int, a: int, b: int, c: int):
    head = qratio_alphabet((c - b - 1, a), c, letter(0))
    tail = [qratio_alphabet((0, c - chi(i <= n0)), c, letter(i)) for i in range(1, n + 1)]
    return alphabet_sum([head] + tail)


def _P_alphabet_A(n: int, a: int, b: int, c: int):
    head = qratio_alphabet((c - b - 1, a), c, letter(0))
    return alphabet_sum([head] + [letter(i) for i in range(1, n + 1)])


def _weight_B(n, n0, a, b, c, l, mu) -> LaurentPoly:
    N = n + 1
    G = eval_sym(h(l), _h_alphabet(n, n0, c), N)
    if mu:
        G = G * eval_sym(macdonald_P(mu, c), _P_alphabet_B(n, n0, a, b, c), N)
    return G


def _weight_C(n, n0, c, l) -> LaurentPoly:
    return eval_sym(h(l), _h_alphabet(n, n0, c), n + 1)


def _weight_A(n, a, b, c, lam, mu) -> LaurentPoly:
    N = n + 1
    G = LaurentPoly.constant(1, N)
    if lam:
        G = G * expand_in_vars(macdonald_P(lam, c), n, offset=1, nvars=N)
    if mu:
        G = G * eval_sym(macdonald_P(mu, c), _P_alphabet_A(n, a, b, c), N)
    return G


# ---------------------------------------------------------------------------
# q-Morris and Baker-Forrester


def qmorris_lhs(n: int, a: int, b: int, c: int) -> QRat:
    return ct_weighted(n, 0, a, b, c, 0, LaurentPoly.constant(1, n + 1), 0)


def qmorris_rhs(n: int, a: int, b: int, c: int) -> QRat:
    out = QRat(1)
    for i in range(n):
        out = out * _qfac(a + b + i * c) * _qfac((i + 1) * c) / (_qfac(a + i * c) * _qfac(b + i * c) * _qfac(c))
    return out


def verify_qmorris(n: int, a: int, b: int, c: int) -> VerdictRecord:
    t0 = time.perf_counter()
    lhs, rhs = qmorris_lhs(n, a, b, c), qmorris_rhs(n, a, b, c)
    return VerdictRecord(IdentityParams("qmorris", n=n, a=a, b=b, c=c), lhs, rhs, lhs == rhs, time.perf_counter() - t0)


def _shift_j(j: int, n0: int, c: int) -> int:
    """j c - n0 - chi(j <= n0)(j - n0)."""
    return j * c - n0 - chi(j <= n0) * (j - n0)


def bf_rhs(n: int, n0: int, a: int, b: int, c: int) -> QRat:
    """Closed form of CT F_{n,n0}(x; a, b, c, 0)."""
    out = QRat(1)
    for i in range(1, n - n0):
        out = out * (1 - qpow((i + 1) * c))
    for i in range(n):
        s = _shift_j(i, n0, c)
        out = out * _poch(a + s + 1, b) * _qfac(s + c - 1) / (_qfac(b + s) * _qfac(c - chi(i <= n0)))
    return out


# ---------------------------------------------------------------------------
# the three families


def _check_B(n, n0, a, b, c, l, mu):
    if not 0 <= n0 < n:
        raise ValueError("need 0 <= n0 < n")
    if len(mu) >= n - n0:
        raise ValueError("need l(mu) < n - n0")
    if a < 0 or b < 0 or l < 0 or c < 1:
        raise ValueError("need a, b, l >= 0 and c >= 1")


def lhs_B(n: int, n0: int, a: int, b: int, c: int, l: int, mu=()) -> QRat:
    mu = Partition(mu)
    _check_B(n, n0, a, b, c, l, mu)
    return ct_weighted(n, n0, a, b, c, 0, _weight_B(n, n0, a, b, c, l, mu), l + sum(mu))


def _n_stat(mu) -> int:
    return sum(i * p for i, p in enumerate(mu))


def rhs_B(n: int, n0: int, a: int, b: int, c: int, l: int, mu=()) -> QRat:
    mu = Partition(mu)
    _check_B(n, n0, a, b, c, l, mu)
    size = sum(mu)
    out = QRat(-1 if (l + size) % 2 else 1)
    out = out * qpow(comb(l, 2) + sum(comb(p, 2) for p in mu) - c * _n_stat(mu))
    out = out * _scalar(h(l), _qratio(0, n * c - n0, 1))
    out = out * _poch(a - l + 1, l) / _poch(n0 * (c - 1) + b + 1, l)
    if mu:
        out = out * _scalar(macdonald_P(mu, c), _qratio(0, a + b + (n - 1) * c - n0 + 1, c))
    for j in range(n):
        s = _shift_j(j, n0, c)
        out = out * _poch(a + s + 1, b) * _qfac(s + c - 1) / (_qfac(b + s) * _qfac(c - chi(j <= n0)))
    for j in range(1, n - n0):
        mj = mu.part(j)
        out = out * (1 - qpow((j + 1) * c)) * _poch(j * c - b - mj, mj)
        out = out * _poch((n - j - 1) * c - n0 + b + mj + 1, l) / _poch((n - j) * c + b + 1 - n0, mj + l)
    return out


def _check_C(n, n0, a, b, c, l, m):
    if not 0 <= n0 < n:
        raise ValueError("need 0 <= n0 < n")
    if not n - n0 <= m <= n:
        raise ValueError("need n - n0 <= m <= n")
    if a < 0 or b < 0 or l < 0 or c < 1:
        raise ValueError("need a, b, l >= 0 and c >= 1")


def lhs_C(n: int, n0: int, a: int, b: int, c: int, l: int, m: int) -> QRat:
    if not 0 <= n0 < n or not 0 <= m <= n or a < 0 or b < 0 or l < 0 or c < 1:
        raise ValueError("parameters out of range")
    return ct_weighted(n, n0, a, b, c, m, _weight_C(n, n0, c, l), l)


def rhs_C(n: int, n0: int, a: int, b: int, c: int, l: int, m: int) -> QRat:
    _check_C(n, n0, a, b, c, l, m)
    out = QRat(-1 if l % 2 else 1) * qpow(comb(l, 2))
    out = out * _scalar(h(l), _qratio(0, n * c - n0, 1))
    out = out * _poch(a - l + 1, l) / _poch((n - 1) * c - n0 + b + 2, l)
    for j in range(2, n - n0 + 1):
        out = out * (1 - qpow(j * c))
    for j in range(n):
        s = j * (c - 1) + chi(j > n0) * (j - n0)
        e = chi(j >= n - m)
        out = out * _poch(a + s + 1, b + e) * _qfac(s + c - 1)
        out = out / (_qfac(b + s + e) * _qfac(c - chi(j <= n0)))
    return out


def lhs_A(n: int, a: int, b: int, c: int, lam=(), mu=()) -> QRat:
    lam, mu = Partition(lam), Partition(mu)
    if a < 0 or b < 0 or c < 1 or n < 1:
        raise ValueError("need a, b >= 0, c >= 1, n >= 1")
    return ct_weighted(n, 0, a, b, c, 0, _weight_A(n, a, b, c, lam, mu), sum(lam) + sum(mu))


def rhs_A(n: int, a: int, b: int, c: int, lam=(), mu=()) -> QRat:
    """Closed form; n = 0 is allowed and leaves only the P_mu factor."""
    lam, mu = Partition(lam), Partition(mu)
    if len(lam) > n:
        return QRat(0)
    out = QRat(-1 if sum(lam) % 2 else 1)
    out = out * qpow(sum(comb(p, 2) for p in lam) - c * _n_stat(lam))
    if lam:
        out = out * _scalar(macdonald_P(lam, c), _qratio(0, n * c, c))
    if mu:
        out = out * _scalar(macdonald_P(mu, c), _qratio(c - b - 1, a + n * c, c))
    for i in range(1, n + 1):
        li = lam.part(i)
        for j in range(1, len(mu) + 1):
            out = out * _poch(b + (n - i - j) * c + li + mu.part(j + 1) + 1, mu.part(j) - mu.part(j + 1))
        out = out * _poch(a + (i - 1) * c - li + 1, b + li) * _qfac(i * c)
        out = out / (_qfac(b + (n - i) * c + li + mu.part(1)) * _qfac(c))
    return out


def verify_identity(name: str, **kw) -> VerdictRecord:
    """Compute both sides for one of qmorris, thm11, thm12, aflt."""
    t0 = time.perf_counter()
    if name == "qmorris":
        args = (kw["n"], kw["a"], kw["b"], kw["c"])
        rhs = qmorris_rhs(*args)
        lhs = qmorris_lhs(*args)
    elif name == "thm11":
        args = (kw["n"], kw["n0"], kw["a"], kw["b"], kw["c"], kw["l"], tuple(kw.get("mu", ())))
        rhs = rhs_B(*args)
        lhs = lhs_B(*args)
    elif name == "thm12":
        args = (kw["n"], kw["n0"], kw["a"], kw["b"], kw["c"], kw["l"], kw["m"])
        rhs = rhs_C(*args)
        lhs = lhs_C(*args)
    elif name == "aflt":
        args = (kw["n"], kw["a"], kw["b"], kw["c"], tuple(kw.get("lam", ())), tuple(kw.get("mu", ())))
        lhs, rhs = lhs_A(*args), rhs_A(*args)
    else:
        raise ValueError(f"unknown identity {name!r}")
    params = IdentityParams(name, **{k: (tuple(v) if isinstance(v, (list, tuple)) else v) for k, v in kw.items()})
    return VerdictRecord(params, lhs, rhs, lhs == rhs, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# vanishing lemmas


def _D_ct(n: int, n0: int, c: int, weight: LaurentPoly) -> QRat:
    """CT over x1..xn of weight * D_{n,n0}(x, c); x0 is an unused slot."""
    N = n + 1
    return ct(build_D(n, n0, c) * weight.widen(N), range(N)).constant_term()


def _monomial(vec) -> LaurentPoly:
    return LaurentPoly.monomial(tuple(vec))


def verify_vanishing(case: str, **p) -> bool:
    """The constant term named by ``case`` is zero.

    ``h_product``: n, n0, c, v, lam with |v| = |lam| and lam_1 > max v.
    ``polynomial_h``: n, n0, c, l, a, H (homogeneous in x0..xn) with 0 <= a < l.
    ``fixed_monomial``: c.
    ``composition``: n, n0, c, h, t with sum t = h(n - n0) - n0.
    """
    if case == "h_product":
        n, n0, c = p["n"], p["n0"], p["c"]
        v, lam = tuple(p["v"]), Partition(p["lam"])
        if len(v) != n or sum(v) != sum(lam) or not lam or lam[0] <= max(v):
            raise ValueError("need |v| = |lam| and lam_1 > max v")
        N = n + 1
        X = _h_alphabet(n, n0, c)
        w = LaurentPoly.monomial((0,) + tuple(-x for x in v))
        for part in lam:
            w = w * eval_sym(h(part), X, N)
        return _D_ct(n, n0, c, w).is_zero()
    if case == "polynomial_h":
        n, n0, c, l, a = p["n"], p["n0"], p["c"], p["l"], p["a"]
        H = p["H"]
        if c < 1 or l < 1 or not 0 <= a < l:
            raise ValueError("need c, l >= 1 and 0 <= a < l")
        N = n + 1
        H = H.widen(N)
        if any(min(vec) < 0 for vec, _ in H):
            raise ValueError("H must be a polynomial")
        degs = H.total_degrees()
        if len(degs) != 1:
            raise ValueError("H must be homogeneous")
        (m,) = degs
        G = eval_sym(h(l), _h_alphabet(n, n0, c), N) * H
        facs = [QPoch(_ratio(N, 0, i), 0, a) for i in range(1, n + 1)] + D_factors(n, n0, c, 1, N)
        f = expand_qpoch_product(facs, N) * G * LaurentPoly.var(0, N, -l - m)
        return ct(f, range(N)).is_zero()
    if case == "fixed_monomial":
        c = p["c"]
        if c < 1:
            raise ValueError("need c >= 1")
        return _D_ct(4, 2, c, _monomial((0, 1, 1, -1, -1))).is_zero()
    if case == "composition":
        n, n0, c, hh, t = p["n"], p["n0"], p["c"], p["h"], tuple(p["t"])
        if not (2 <= n0 <= n - 1 and 1 <= hh <= n0 - 1):
            raise ValueError("need 2 <= n0 <= n-1 and 1 <= h <= n0-1")
        if len(t) != n or min(t) < 0 or sum(t) != hh * (n - n0) - n0:
            raise ValueError("need nonnegative t with sum h(n-n0) - n0")
        vec = [0] + [1 + t[i] if i < n0 else t[i] - hh for i in range(n)]
        return _D_ct(n, n0, c, _monomial(vec)).is_zero()
    raise ValueError(f"unknown vanishing case {case!r}")


def compositions(total: int, parts: int):
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    if total < 0:
        return
    for cut in combinations_with_replacement(range(total + 1), parts - 1):
        bounds = (0,) + cut + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


# ---------------------------------------------------------------------------
# polynomiality, roots, special points


def roots_B(n: int, n0: int, b: int, c: int, l: int, mu=()) -> dict:
    mu = Partition(mu)
    B1 = {-i * c + n0 - chi(i <= n0) * (n0 - i) - k for i in range(n) for k in range(1, b + 1)}
    B2 = set(range(l))
    B3 = {-(n - j) * c + n0 - b - k for j in range(1, len(mu) + 1) for k in range(1, mu.part(j) + 1)}
    return {"B1": B1, "B2": B2, "B3": B3}


def roots_C(n: int, n0: int, b: int, c: int, l: int, m: int) -> dict:
    C1 = {-i * c + n0 - chi(i <= n0) * (n0 - i) - k for i in range(n) for k in range(1, b + 1)}
    C3 = {-i * c + n0 - chi(i <= n0) * (n0 - i) - b - 1 for i in range(n - m, n)}
    return {"C1": C1, "C2": set(range(l)), "C3": C3}


def degree_bound(which: str, n: int, b: int, l: int, extra) -> int:
    """n b + l + |mu| for B (extra = mu) and n b + l + m for C (extra = m)."""
    if which == "B":
        return n * b + l + sum(extra)
    if which == "C":
        return n * b + l + extra
    raise ValueError("which must be 'B' or 'C'")


def values_in_a(which: str, params: dict, count: int) -> list:
    """LHS values at a = 0..count-1."""
    p = dict(params)
    p.pop("a", None)
    out = []
    for a in range(count):
        if which == "B":
            out.append(lhs_B(p["n"], p["n0"], a, p["b"], p["c"], p["l"], tuple(p.get("mu", ()))))
        else:
            out.append(lhs_C(p["n"], p["n0"], a, p["b"], p["c"], p["l"], p["m"]))
    return out


def interpolate_at(values, y: QRat) -> QRat:
    """Value at y of the polynomial through (q^i, values[i]), i = 0..len-1."""
    nodes = [qpow(i) for i in range(len(values))]
    total = QRat(0)
    for i, (yi, vi) in enumerate(zip(nodes, values)):
        if vi.is_zero():
            continue
        term = vi
        for j, yj in enumerate(nodes):
            if j != i:
                term = term * (y - yj) / (yi - yj)
        total = total + term
    return total


def _extra_of(which, params):
    return tuple(params.get("mu", ())) if which == "B" else params["m"]


def verify_polynomiality(which: str, params: dict, extra_points: int = 1, values=None) -> bool:
    """Values at a = 0..deg+extra lie on one polynomial in q^a of degree <= deg."""
    deg = degree_bound(which, params["n"], params["b"], params["l"], _extra_of(which, params))
    if values is None:
        values = values_in_a(which, params, deg + 1 + extra_points)
    base = values[: deg + 1]
    return all(interpolate_at(base, qpow(a)) == values[a] for a in range(deg + 1, len(values)))


def verify_roots(which: str, params: dict, values=None) -> bool:
    """The interpolated polynomial vanishes at q^a for every listed root a."""
    n, n0, b, c, l = params["n"], params["n0"], params["b"], params["c"], params["l"]
    if which == "B":
        mu = Partition(params.get("mu", ()))
        if c <= b + mu.part(1):
            raise ValueError("need c > b + mu_1")
        sets = roots_B(n, n0, b, c, l, mu)
    else:
        if c <= b + 1:
            raise ValueError("need c > b + 1")
        sets = roots_C(n, n0, b, c, l, params["m"])
    allr = [r for s in sets.values() for r in s]
    if len(allr) != len(set(allr)):
        return False
    deg = degree_bound(which, n, b, l, _extra_of(which, params))
    if values is None:
        values = values_in_a(which, params, deg + 1)
    base = values[: deg + 1]
    for r in allr:
        val = values[r] if 0 <= r < len(values) else interpolate_at(base, qpow(r))
        if not val.is_zero():
            return False
    return True


def extra_point_B(n: int, n0: int, b: int, c: int, l: int, mu=(), printed: bool = False, a_value=None) -> tuple:
    """(a*, closed value) for B at a* = -n0(c-1)-b-1.

    The A-value comes from rhs_A unless ``a_value`` is given. B carries
    h_l[sum (1-q^c)/(1-q) x_i], which equals (q^c)_l/(q)_l P_(l)(x; q, q^c),
    so reducing to A with mu = (l) picks up that factor. ``printed=True``
    leaves it out.
    """
    mu = Partition(mu)
    a_star = -n0 * (c - 1) - b - 1
    val = QRat(-1 if ((n0 + 1) * b) % 2 else 1)
    val = val * qpow(-comb(n0 + 1, 2) * b * (c - 1) - (n0 + 1) * comb(b + 1, 2))
    val = val * (1 - qpow((n - n0) * c)) / (1 - qpow(c))
    val = val * _qfac((n0 + 1) * (c - 1)) / _qfac(c - 1) ** (n0 + 1)
    if a_value is None:
        a_value = rhs_A(n - n0 - 1, c - b - 1, (n0 + 1) * (c - 1) + b + 1, c, mu, (l,) if l else ())
    val = val * a_value
    if not printed:
        val = val * _poch(c, l) / _qfac(l)
    return a_star, val


def extra_point_C(n: int, n0: int, b: int, c: int, l: int, m: int) -> tuple:
    """(a*, closed value) for C at a* = -(n-m-1)(c-1)-b-1."""
    a_star = -(n - m - 1) * (c - 1) - b - 1
    val = QRat(-1 if l % 2 else 1) * _scalar(h(l), _qratio(0, n * c - n0, 1))
    val = val * _poch(-(n - m - 1) * (c - 1) - b - l, l) / _poch((n - 1) * c + b - n0 + 2, l)
    for i in range(n - m):
        val = val * _qfac((i + 1) * (c - 1)) * _poch(-i * (c - 1) - b, b) / (_qfac(b + i * (c - 1)) * _qfac(c - 1))
    for j in range(1, n - n0):
        val = val * (1 - qpow((j + 1) * c))
    val = val * qpow(comb(l, 2))
    for j in range(n - m, n):
        s = chi(j > n0) * (j - n0)
        num = _poch((j - n + m + 1) * (c - 1) - b + s, (n - m) * (c - 1) + b + 1)
        num = num * _qfac((j - n + m + 1) * (c - 1) + s)
        den = _qfac(j * (c - 1) + b + 1 + s) * _qfac(c - chi(j <= n0))
        val = val * num / den
    return a_star, val


def sub_B_route(n: int, n0: int, b: int, c: int, l: int, m: int) -> QRat:
    """C at its special point through a B constant term with shifted parameters."""
    val = _poch(c, l) / _qfac(l)
    for i in range(n - m):
        val = val * _qfac((i + 1) * (c - 1)) * _poch(-i * (c - 1) - b, b) / (_qfac(b + i * (c - 1)) * _qfac(c - 1))
    mu = (l,) if l else ()
    n0p = n0 - n + m
    bp = (n - m) * (c - 1) + b + 1
    return val * ct_weighted(m, n0p, c - b - 2, bp, c, 0, _weight_B(m, n0p, c - b - 2, bp, c, 0, Partition(mu)), l)


def verify_special_points(which: str, params: dict, values=None) -> dict:
    """Compare the interpolated value at the special point with the closed forms.

    Returns a dict of named booleans. For C it includes the shifted-B route.
    """
    n, n0, b, c, l = params["n"], params["n0"], params["b"], params["c"], params["l"]
    if which == "B":
        mu = Partition(params.get("mu", ()))
        if not (len(mu) < n - n0 and c > b):
            raise ValueError("need l(mu) < n - n0 and c > b")
        a_star, closed = extra_point_B(n, n0, b, c, l, mu)
        deg = degree_bound("B", n, b, l, mu)
        if values is None:
            values = values_in_a("B", params, deg + 1)
        interp = interpolate_at(values[: deg + 1], qpow(a_star))
        out = {"interpolated_vs_closed": interp == closed}
        if n - n0 - 1 >= 1:
            ct = lhs_A(n - n0 - 1, c - b - 1, (n0 + 1) * (c - 1) + b + 1, c, mu, (l,) if l else ())
            out["interpolated_vs_ct_A"] = interp == extra_point_B(n, n0, b, c, l, mu, a_value=ct)[1]
        return out
    m = params["m"]
    if not (n - n0 <= m < n and c > b + 1):
        raise ValueError("need n - n0 <= m < n and c > b + 1")
    a_star, closed = extra_point_C(n, n0, b, c, l, m)
    deg = degree_bound("C", n, b, l, m)
    if values is None:
        values = values_in_a("C", params, deg + 1)
    interp = interpolate_at(values[: deg + 1], qpow(a_star))
    return {
        "interpolated_vs_closed": interp == closed,
        "interpolated_vs_shifted_B": interp == sub_B_route(n, n0, b, c, l, m),
    }
