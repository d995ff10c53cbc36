"""Integer partitions and the diagram statistics used with them."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial

__all__ = [
    "Partition",
    "conjugate",
    "dominance_leq",
    "is_horizontal_strip",
    "stats",
    "partitions_of",
    "contained_in",
    "z_lambda",
    "n_stat",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition([2, 1, 0])``
    and ``Partition([2, 1])`` compare equal.
    """

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part, 1-indexed, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def to_list(self) -> list[int]:
        return list(self)


@lru_cache(maxsize=None)
def _conj(parts: tuple) -> tuple:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def conjugate(lam) -> Partition:
    return Partition(_conj(tuple(lam)))


def _prefix(parts, n):
    out, s = [], 0
    for i in range(n):
        s += parts[i] if i < len(parts) else 0
        out.append(s)
    return out


def dominance_leq(mu, lam) -> bool:
    """mu <= lam in dominance order; both must have the same size."""
    if sum(mu) != sum(lam):
        raise ValueError("dominance order compares partitions of equal size")
    n = max(len(mu), len(lam))
    return all(a <= b for a, b in zip(_prefix(mu, n), _prefix(lam, n)))


def contained_in(mu, lam) -> bool:
    """mu is a subset of lam as Young diagrams."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def is_horizontal_strip(lam, mu, r: int) -> bool:
    """lam/mu is a horizontal r-strip."""
    if not contained_in(mu, lam) or sum(lam) - sum(mu) != r:
        return False
    lc, mc = _conj(tuple(lam)), _conj(tuple(mu))
    return all(a - (mc[i] if i < len(mc) else 0) <= 1 for i, a in enumerate(lc))


def stats(lam) -> dict:
    lam = Partition(lam)
    z = 1
    for part, m in Counter(lam).items():
        z *= part ** m * factorial(m)
    return {
        "size": sum(lam),
        "length": len(lam),
        "n_stat": sum(i * p for i, p in enumerate(lam)),
        "z": z,
    }


def z_lambda(lam) -> int:
    return stats(lam)["z"]


def n_stat(lam) -> int:
    return sum(i * p for i, p in enumerate(lam))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n in reverse lexicographic order, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)
