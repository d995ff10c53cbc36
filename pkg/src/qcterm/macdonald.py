"""Macdonald polynomials by Gram-Schmidt in the q,t-Hall scalar product.

P_lam is the unique element with m-expansion ``m_lam + (lower terms)``
that is orthogonal to every m_mu with mu strictly below lam in dominance
order. Everything here takes the same ``t`` convention as ``symfunc``:
``None`` keeps t formal, an integer c means t = q^c.

Specialized polynomials come from the formal ones by substituting
t = q^c. ``macdonald_P(..., method="direct")`` instead runs Gram-Schmidt
at the specialization. That is a second, independent route.
"""

from __future__ import annotations

from functools import lru_cache

from .laurent import LaurentPoly, Monomial
from .partitions import Partition, conjugate, contained_in, dominance_leq, partitions_of
from .plethysm import EMPTY, GeomDiv, Minus, Plus, ScaleByLetter, alphabet_sum, eval_sym, letter
from .qfield import QRat, QTRat
from .symfunc import SymFunc, _m_to_p, _solve, convert, expand_in_vars, hall_inner, hall_weight

__all__ = [
    "macdonald_P",
    "macdonald_Q",
    "b_lambda",
    "skew_P",
    "skew_Q",
    "pieri_expand",
    "mac_eval",
    "verify_duality",
    "verify_alphabet_vanishing",
    "verify_skew_support",
    "verify_degree_bound",
    "verify_mac_vanishing",
    "verify_branching",
    "lassalle_support",
    "skew_expansion",
]


def _zero(c) -> bool:
    return not c


@lru_cache(maxsize=None)
def _gram_m(d: int, t):
    """<m_mu, m_nu> for all partitions of d."""
    parts = partitions_of(d)
    M = _m_to_p(d)
    w = {nu: hall_weight(nu, t) for nu in parts}
    G = {}
    for a in parts:
        for b in parts:
            s = QRat(0)
            for nu, ca in M[a].items():
                cb = M[b].get(nu)
                if cb is not None:
                    s = s + w[nu] * (ca * cb)
            G[a, b] = s
    return G


@lru_cache(maxsize=None)
def _gs(lam: Partition, t) -> SymFunc:
    d = sum(lam)
    G = _gram_m(d, t)
    below = [mu for mu in partitions_of(d) if mu != lam and dominance_leq(mu, lam)]
    coeffs = {lam: QRat(1)}
    if below:
        mat = [[G[mu, nu] for nu in below] for mu in below]
        rhs = [-G[lam, nu] for nu in below]
        for mu, u in zip(below, _solve(mat, rhs)):
            if not _zero(u):
                coeffs[mu] = u
    return SymFunc("m", coeffs, t)


def macdonald_P(lam, t=None, method: str = "specialize") -> SymFunc:
    """P_lam(q, t) in the monomial basis."""
    lam = Partition(lam)
    if t is None or method == "direct":
        return _gs(lam, t)
    if method != "specialize":
        raise ValueError(f"unknown method {method!r}")
    return _specialized(lam, t)


@lru_cache(maxsize=None)
def _specialized(lam: Partition, c: int) -> SymFunc:
    gen = _gs(lam, None)
    return SymFunc("m", {mu: QTRat.coerce(v).specialize_t(c) for mu, v in gen.coeffs.items()}, c)


@lru_cache(maxsize=None)
def b_lambda(lam, t=None):
    """b_lam = 1 / <P_lam, P_lam>."""
    P = macdonald_P(lam, t)
    return QRat(1) / hall_inner(P, P, t)


def macdonald_Q(lam, t=None) -> SymFunc:
    return macdonald_P(lam, t).scale(b_lambda(Partition(lam), t))


@lru_cache(maxsize=None)
def skew_P(lam, mu, t=None) -> SymFunc:
    """P_{lam/mu}, defined by <P_{lam/mu}, Q_nu> = <P_lam, Q_mu Q_nu>."""
    lam, mu = Partition(lam), Partition(mu)
    d = sum(lam) - sum(mu)
    if d < 0:
        return SymFunc("m", {}, t)
    Pl = macdonald_P(lam, t)
    Qm = macdonald_Q(mu, t)
    out = SymFunc("m", {}, t)
    for nu in partitions_of(d):
        c = hall_inner(Pl, Qm * macdonald_Q(nu, t), t)
        if not _zero(c):
            out = out + macdonald_P(nu, t).scale(c)
    return out


@lru_cache(maxsize=None)
def skew_Q(lam, mu, t=None) -> SymFunc:
    """Q_{lam/mu}, defined by <Q_{lam/mu}, P_nu> = <Q_lam, P_mu P_nu>."""
    lam, mu = Partition(lam), Partition(mu)
    d = sum(lam) - sum(mu)
    if d < 0:
        return SymFunc("m", {}, t)
    Ql = macdonald_Q(lam, t)
    Pm = macdonald_P(mu, t)
    out = SymFunc("m", {}, t)
    for nu in partitions_of(d):
        c = hall_inner(Ql, Pm * macdonald_P(nu, t), t)
        if not _zero(c):
            out = out + macdonald_Q(nu, t).scale(c)
    return out


def skew_expansion(lam, mu, t=None) -> dict:
    """Coefficients r_nu with P_{lam/mu} = sum r_nu P_nu."""
    lam, mu = Partition(lam), Partition(mu)
    d = sum(lam) - sum(mu)
    Pl, Qm = macdonald_P(lam, t), macdonald_Q(mu, t)
    out = {}
    for nu in partitions_of(d):
        c = hall_inner(Pl, Qm * macdonald_Q(nu, t), t)
        if not _zero(c):
            out[nu] = c
    return out


def pieri_expand(mu, r: int, t=None) -> list:
    """P_mu g_r = sum phi_lam P_lam, as a list of (lam, phi) pairs."""
    mu = Partition(mu)
    prod = macdonald_P(mu, t) * SymFunc.basis_element("g", (r,), t)
    out = []
    for lam in partitions_of(sum(mu) + r):
        c = hall_inner(prod, macdonald_Q(lam, t), t)
        if not _zero(c):
            out.append((lam, c))
    return out


def mac_eval(lam, X, t_spec=None, nvars: int | None = None) -> LaurentPoly:
    """P_lam[X; q, t] for an alphabet expression X."""
    return eval_sym(macdonald_P(lam, t_spec), X, nvars)


# ---------------------------------------------------------------------------
# property checks


def _swap(f: SymFunc) -> SymFunc:
    return SymFunc(f.basis, {l: QTRat.coerce(c).swap() for l, c in f.coeffs.items()}, None)


def _omega_alphabet(X):
    """((1 - q)/(t - 1)) X written as -(X - qX)/(1 - t)."""
    return Minus(EMPTY, GeomDiv(Minus(X, ScaleByLetter(Monomial.scalar(1), X)), Monomial.scalar(0, 1)))


def verify_duality(lam, mu, l: int = 2) -> bool:
    """P_{lam/mu}[(1-q)/(t-1) (m_1+..+m_l); q,t] = (-1)^{|lam|-|mu|} Q_{lam'/mu'}[m_1+..+m_l; t,q]."""
    lam, mu = Partition(lam), Partition(mu)
    if not contained_in(mu, lam):
        raise ValueError("mu must be contained in lam")
    X = alphabet_sum([letter(i) for i in range(1, l + 1)])
    N = l + 1
    lhs = eval_sym(skew_P(lam, mu), _omega_alphabet(X), N)
    rhs = eval_sym(_swap(skew_Q(conjugate(lam), conjugate(mu))), X, N)
    sign = -1 if (sum(lam) - sum(mu)) % 2 else 1
    return lhs == rhs.scale(QRat(sign))


def verify_alphabet_vanishing(lam, i: int) -> bool:
    """P_lam[(1-q)/(t-1)(m_1..m_{lam_i - 1}) + n_1..n_{i-1}] = 0."""
    lam = Partition(lam)
    li = lam.part(i)
    if li <= 0:
        raise ValueError("lam_i must be a nonzero part")
    ms = [letter(j) for j in range(1, li)]
    ns = [letter(j) for j in range(li, li + i - 1)]
    X = Plus(_omega_alphabet(alphabet_sum(ms)), alphabet_sum(ns))
    return eval_sym(macdonald_P(lam), X, li + i).is_zero()


def verify_skew_support(lam, mu, t=None) -> bool:
    """In P_{lam/mu} = sum r_nu P_nu every nu with r_nu != 0 has nu_1 >= lam_{l(mu)+1}."""
    lam, mu = Partition(lam), Partition(mu)
    if not (contained_in(mu, lam) and len(mu) < len(lam)):
        raise ValueError("need mu inside lam with l(mu) < l(lam)")
    bound = lam.part(len(mu) + 1)
    return all(nu.part(1) >= bound for nu in skew_expansion(lam, mu, t))


def verify_degree_bound(lam, u, n: int, shifts=None, t=None) -> bool:
    """deg in x_{u_s} of P_lam(x_1..x_n) after x_{u_i} -> q^{s_i} x_{u_s} is at most lam_1+..+lam_s."""
    lam = Partition(lam)
    u = list(u)
    s = len(u)
    shifts = list(range(1, s)) if shifts is None else list(shifts)
    f = expand_in_vars(macdonald_P(lam, t), n)
    for ui, sh in zip(u[:-1], shifts):
        f = f.subs_var(ui, u[-1], sh)
    if f.is_zero():
        return True
    return f.degree_in(u[-1])[1] <= sum(lam[:s])


def verify_mac_vanishing(kind: str, *args, **kw) -> bool:
    table = {"alphabet": verify_alphabet_vanishing, "skew": verify_skew_support, "degree": verify_degree_bound}
    return table[kind](*args, **kw)


def verify_branching(lam, x_letters: int = 1, y_letters: int = 1, t=None) -> bool:
    """P_lam[X+Y] = sum_{mu in lam} P_{lam/mu}[X] P_mu[Y]."""
    lam = Partition(lam)
    X = alphabet_sum([letter(i) for i in range(1, x_letters + 1)])
    Y = alphabet_sum([letter(i) for i in range(x_letters + 1, x_letters + y_letters + 1)])
    N = x_letters + y_letters + 1
    lhs = eval_sym(macdonald_P(lam, t), Plus(X, Y), N)
    rhs = LaurentPoly({}, N)
    for d in range(sum(lam) + 1):
        for mu in partitions_of(d):
            if contained_in(mu, lam):
                rhs = rhs + eval_sym(skew_P(lam, mu, t), X, N) * eval_sym(macdonald_P(mu, t), Y, N)
    return lhs == rhs


def lassalle_support(lam, t=None) -> bool:
    """P_lam lies in the span of g_mu with mu >= lam in dominance order."""
    lam = Partition(lam)
    gexp = convert(macdonald_P(lam, t), "g", t)
    return all(dominance_leq(lam, mu) for mu in gexp.coeffs)
