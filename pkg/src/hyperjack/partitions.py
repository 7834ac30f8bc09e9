"""Integer partitions, dominance order, and the statistics used by the symmetric-function code."""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Partitions compare as tuples (lexicographically), which is a linear
    extension of dominance; ``sorted(..., reverse=True)`` gives the
    reverse-lexicographic order used for enumeration and serialization.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        # tolerate trailing zeros, as in (2, 1, 0)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def cells(self):
        """Cells ``(i, j)`` of the Young diagram, 1-based row/column."""
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def padded(self, n: int) -> tuple:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def to_json(self) -> list[int]:
        return list(self)


def rectangle(part: int, count: int) -> Partition:
    """The rectangular partition ``(part^count)``."""
    return Partition((part,) * count if part > 0 else ())


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominance_leq(mu: Iterable[int], lam: Iterable[int]) -> bool:
    """True iff ``mu <= lam`` in dominance order.  Weights must agree."""
    mu, lam = Partition(mu), Partition(lam)
    if mu.weight != lam.weight:
        raise ValueError(f"dominance compares equal weights only: |{mu}| != |{lam}|")
    s_mu = s_lam = 0
    for k in range(max(len(mu), len(lam))):
        s_mu += mu[k] if k < len(mu) else 0
        s_lam += lam[k] if k < len(lam) else 0
        if s_mu > s_lam:
            return False
    return True


def z_lambda(lam: Iterable[int]) -> int:
    """``prod_k k^{m_k} m_k!`` where ``m_k`` counts parts equal to ``k``."""
    out = 1
    for k, mk in Counter(Partition(lam)).items():
        out *= k**mk * math.factorial(mk)
    return out


def scale(lam: Iterable[int], k: int) -> Partition:
    return Partition(k * p for p in Partition(lam))


def enumerate_partitions(
    weight: int, max_length: int | None = None, max_part: int | None = None
) -> list[Partition]:
    """All partitions of ``weight`` within the bounds, in reverse-lexicographic order."""
    if weight < 0:
        raise ValueError("weight must be non-negative")
    max_length = weight if max_length is None else max_length
    max_part = weight if max_part is None else max_part
    return [Partition(p) for p in _partitions(weight, max_length, max_part)]


@lru_cache(maxsize=None)
def _partitions(weight: int, max_length: int, max_part: int) -> tuple:
    if weight == 0:
        return ((),)
    if max_length <= 0 or max_part <= 0:
        return ()
    out = []
    for first in range(min(weight, max_part), 0, -1):
        for rest in _partitions(weight - first, max_length - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(max_weight: int, max_length: int | None = None) -> list[Partition]:
    out = []
    for d in range(max_weight + 1):
        out.extend(enumerate_partitions(d, max_length))
    return out


def inverse_z(lam: Iterable[int]) -> Fraction:
    return Fraction(1, z_lambda(lam))
