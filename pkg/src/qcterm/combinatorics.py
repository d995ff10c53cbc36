"""Permutation weights and the case analysis for bounded integer tuples.

Permutations are tuples ``(w(1), ..., w(s))`` of ``1..s``. The sentinel
``w(0) = 0`` is implicit everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product

import numpy as np

from .laurent import Monomial, chi
from .plethysm import EMPTY, Letter, Minus, alphabet_sum, power_sum, qratio_alphabet

__all__ = [
    "N",
    "weights",
    "eps1",
    "eps2",
    "in_S_sr",
    "eps_chain",
    "verify_monotone_lemmas",
    "KeyWitness",
    "classify_key",
    "staircase_holds",
    "T_sr",
    "subs_alphabet",
    "verify_subs_cardinality",
    "subs_witnesses",
    "specialcase_cases",
    "verify_specialcase",
]


def _at(w, j):
    return 0 if j == 0 else w[j - 1]


def _check_perm(w):
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")


def weights(w, r: int) -> list[int]:
    """The edge weights e_1..e_s of the path 0 -> w(1) -> ... -> w(s)."""
    out = []
    for j in range(1, len(w) + 1):
        prev, cur = _at(w, j - 1), _at(w, j)
        out.append(chi(prev < cur) + chi(cur > r) * chi(prev > r))
    return out


def N(w, r: int) -> int:
    w = tuple(w)
    _check_perm(w)
    if not 0 <= r < len(w):
        raise ValueError("need 0 <= r < s")
    return sum(weights(w, r))


def eps1(w, r: int) -> tuple:
    """Sort the entries <= r and the entries > r decreasingly, each within its own positions."""
    w = tuple(w)
    _check_perm(w)
    low = sorted((x for x in w if x <= r), reverse=True)
    high = sorted((x for x in w if x > r), reverse=True)
    out, li, hi = [], 0, 0
    for x in w:
        if x <= r:
            out.append(low[li])
            li += 1
        else:
            out.append(high[hi])
            hi += 1
    return tuple(out)


def in_S_sr(w, r: int) -> bool:
    return eps1(w, r) == tuple(w)


def eps2(w, r: int) -> tuple:
    w = tuple(w)
    if not in_S_sr(w, r):
        raise ValueError(f"{w} does not keep both blocks decreasing for r={r}")
    s = len(w)
    for j in range(1, s + 1):
        if w[j - 1] != s - j + 1:
            break
    else:
        return w
    t = w.index(s - j + 1) + 1
    return w[: j - 1] + (w[t - 1],) + w[j - 1 : t - 1] + w[t:]


def eps_chain(w, r: int) -> list[tuple]:
    """w, eps1(w), then eps2 repeatedly until the decreasing permutation is reached."""
    chain = [tuple(w), eps1(w, r)]
    while True:
        nxt = eps2(chain[-1], r)
        if nxt == chain[-1]:
            return chain
        chain.append(nxt)


def _d_grid(s: int, d_max: int) -> np.ndarray:
    return np.array(list(product(range(d_max + 1), repeat=s)), dtype=np.int64).reshape(-1, s)


def verify_monotone_lemmas(s_max: int, d_max: int = 2) -> bool:
    """Exhaustively check the eps1/eps2 monotonicity and the lower bounds for d-vectors."""
    for s in range(1, s_max + 1):
        top = tuple(range(s, 0, -1))
        D = _d_grid(s, d_max)
        for w in permutations(range(1, s + 1)):
            for r in range(s):
                n = N(w, r)
                w1 = eps1(w, r)
                n1 = N(w1, r)
                if n < n1:
                    return False
                strict = any(
                    (w[i - 2] <= r) == (w[i - 1] <= r) and w[i - 2] < w[i - 1] for i in range(2, s + 1)
                )
                if strict and not n > n1:
                    return False
                if in_S_sr(w, r):
                    n2 = N(eps2(w, r), r)
                    if n < n2 or (n == n2 and w[0] != s):
                        return False
                chain = eps_chain(w, r)
                if chain[-1] != top:
                    return False
                ns = [N(x, r) for x in chain]
                if any(a < b for a, b in zip(ns, ns[1:])) or ns[-1] != s - r:
                    return False
            for r in range(s + 1):
                if not _lower_bounds_ok(w, r, D):
                    return False
    return True


def _lower_bounds_ok(w, r: int, D: np.ndarray) -> bool:
    s = len(w)
    asc = np.array([_at(w, j - 1) < _at(w, j) for j in range(1, s + 1)])
    cc = np.array([chi(_at(w, j) > r) * chi(_at(w, j - 1) > r) for j in range(1, s + 1)])
    ok = np.all(D[:, asc] >= 1, axis=1)
    terms = D[ok] + cc
    tot = terms.sum(axis=1)
    if np.any(tot < s - r):
        return False
    if np.any(tot[:, None] - terms < s - r - 1):
        return False
    eq = tot == s - r
    if np.any(eq) and not (w[0] > r and np.all(D[ok][eq, 0] == 1)):
        return False
    return True


@dataclass(frozen=True)
class KeyWitness:
    """Outcome of the key case analysis.

    ``case`` is the lowest-numbered case that holds and ``cases`` all of
    them. When case 4 holds, ``w`` and ``d`` carry its data and
    ``special_index`` records an i > r with k_i = b + 1 when t = s - r.
    """

    case: int
    cases: frozenset
    k: tuple
    r: int
    w: tuple | None = None
    d: tuple | None = None
    special_index: int | None = None
    extra: dict = field(default_factory=dict, compare=False)


def _sorted_orders(k):
    """Every ordering of the indices 1..s along which k is weakly increasing."""
    groups: dict[int, list[int]] = {}
    for i, v in enumerate(k, start=1):
        groups.setdefault(v, []).append(i)
    blocks = [groups[v] for v in sorted(groups)]
    for choice in product(*(permutations(b) for b in blocks)):
        yield tuple(i for blk in choice for i in blk)


def _case4(s, b, c, r, t, k):
    for w in _sorted_orders(k):
        d, total, ok = [], 0, True
        for j in range(1, s + 1):
            prev, cur = _at(w, j - 1), _at(w, j)
            cc = chi(cur > r) * chi(prev > r)
            dj = k[cur - 1] - b if j == 1 else k[cur - 1] - k[prev - 1] - (c - 1) - cc
            if dj < 0 or (prev < cur and dj == 0):
                ok = False
                break
            d.append(dj)
            total += dj + cc
        if ok and s - r <= total <= t:
            return w, tuple(d)
    return None


def classify_key(s: int, b: int, c: int, r: int, t: int, k) -> KeyWitness:
    k = tuple(int(x) for x in k)
    if len(k) != s or s < 1 or c < 1 or b < 0 or t < 0 or not 0 <= r <= s:
        raise ValueError("parameters out of range")
    top = (s - 1) * (c - 1) + b + t
    if any(not 1 <= x <= top for x in k):
        raise ValueError(f"need 1 <= k_i <= {top}")
    cases = set()
    if any(x <= b for x in k):
        cases.add(1)
    for i in range(1, s + 1):
        for j in range(i + 1, s + 1):
            diff = k[i - 1] - k[j - 1]
            if i <= r and -c + 1 <= diff <= c - 2:
                cases.add(2)
            if i > r and -c <= diff <= c - 1:
                cases.add(3)
    found = _case4(s, b, c, r, t, k)
    w = d = special = None
    if found:
        cases.add(4)
        w, d = found
        if t == s - r and r < s:
            hits = [i for i in range(r + 1, s + 1) if k[i - 1] == b + 1]
            if not hits:
                raise AssertionError(f"case 4 without k_i = b+1 for i > r: k={k}")
            special = hits[0]
    if not cases:
        raise AssertionError(f"no case holds for s={s} b={b} c={c} r={r} t={t} k={k}")
    return KeyWitness(min(cases), frozenset(cases), k, r, w, d, special)


def staircase_holds(s: int, b: int, c: int, k) -> bool:
    """Case (1), (2), or the staircase k_i = (s-i)(c-1)+b+1 holds."""
    k = tuple(k)
    if any(1 <= x <= b for x in k):
        return True
    if any(-c + 1 <= k[i] - k[j] <= c - 2 for i in range(s) for j in range(i + 1, s)):
        return True
    return all(k[i - 1] == (s - i) * (c - 1) + b + 1 for i in range(1, s + 1))


def T_sr(s: int, r: int, b: int, c: int) -> int:
    return (s - 1) * (c - 1) + chi(s - 1 > r) * (s - r - 1) + b + 1


def subs_alphabet(s: int, b: int, c: int, r: int, frak_t: int, k) -> "Minus":
    """The x0, x_i alphabet after a = -T_sr - frak_t and x_i = q^(k_s - k_i), k_0 = 0."""
    k = (0,) + tuple(k)
    a = -T_sr(s, r, b, c) - frak_t
    pt = lambda i: Letter(Monomial.scalar(k[s] - k[i]))
    parts = [qratio_alphabet((c - b - 1, a), 1, pt(0))]
    parts += [qratio_alphabet((0, c - chi(i <= r)), 1, pt(i)) for i in range(1, s + 1)]
    return Minus(EMPTY, alphabet_sum(parts))


def verify_subs_cardinality(s: int, b: int, c: int, r: int, frak_t: int, witness: KeyWitness) -> bool:
    """The substituted alphabet is a sum of exactly ``frak_t`` distinct powers of q."""
    if witness.w is None or 4 not in witness.cases:
        raise ValueError("need a case-4 witness")
    if not 0 <= r < s:
        raise ValueError("need 0 <= r < s")
    bound = T_sr(s, r, b, c) + frak_t
    if any(not 1 <= x <= bound for x in witness.k):
        raise ValueError(f"need 1 <= k_i <= {bound}")
    X = subs_alphabet(s, b, c, r, frak_t, witness.k)
    p1 = power_sum(X, 1, 1).constant_term()
    if not p1.is_laurent():
        return False
    terms = p1.laurent_terms()
    if any(v != 1 for v in terms.values()) or len(terms) != frak_t:
        return False
    for rr in range(2, frak_t + 2):
        want = sum((Monomial.scalar(e * rr).coeff() for e in terms), start=p1 * 0)
        if power_sum(X, rr, 1).constant_term() != want:
            return False
    return True


def subs_witnesses(s: int, b: int, c: int, r: int, frak_t: int):
    """Case-4 witnesses for every k with 1 <= k_i <= T_sr + frak_t."""
    t = chi(s - 1 > r) * (s - r - 1) + 1 + frak_t
    for k in product(range(1, T_sr(s, r, b, c) + frak_t + 1), repeat=s):
        wit = classify_key(s, b, c, r, t, k)
        if 4 in wit.cases:
            yield wit


def specialcase_cases(s: int, n: int, n0: int, b: int, c: int, m: int, r: int, k) -> set:
    """Which of the cases (i)-(iv) hold, numbered 1-4."""
    k = tuple(k)
    if not (1 <= s <= n and 0 <= r <= min(s, n0)):
        raise ValueError("need 1 <= s <= n and 0 <= r <= min(s, n0)")
    if not (m == 0 or n - n0 <= m <= n):
        raise ValueError("need m = 0 or n - n0 <= m <= n")
    out = set()
    if any(1 <= x <= b for x in k):
        out.add(1)
    for i in range(1, s + 1):
        for j in range(i + 1, s + 1):
            diff = k[i - 1] - k[j - 1]
            if i <= r and -c + 1 <= diff <= c - 2:
                out.add(2)
            if i > r and -c <= diff <= c - 1:
                out.add(3)
    if m > 0 and s > n - m and any(k[i - 1] == b + 1 for i in range(n - m + 1, s + 1)):
        out.add(4)
    return out


def verify_specialcase(s: int, n: int, n0: int, b: int, c: int, m: int, r: int, k) -> bool:
    """Some case holds, and when (i)-(iii) all fail the key witness forces (iv)."""
    t = chi(s > n0 + 1) * (s - n0 - 1) + chi(s > n - m)
    top = (s - 1) * (c - 1) + b + t
    if any(not 1 <= x <= top for x in k):
        raise ValueError(f"need 1 <= k_i <= {top}")
    cases = specialcase_cases(s, n, n0, b, c, m, r, k)
    if m == 0 and 4 in cases:
        return False
    if not cases:
        return False
    if not cases & {1, 2, 3}:
        wit = classify_key(s, b, c, r, t, k)
        return wit.cases == frozenset({4}) and m > 0
    return True
