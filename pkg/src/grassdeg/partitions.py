"""Partitions, dominance order, and highest-weight enumeration for SO_n.

Partitions compare equal up to trailing zeros, so ``Partition((1, 0))``
and ``Partition((1,))`` are the same key.
"""

from __future__ import annotations

from itertools import accumulate, zip_longest
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "SOWeight",
    "dominates",
    "enumerate_dominators",
    "enumerate_weights",
    "partitions_of",
    "staircase",
]


class Partition(tuple):
    """A weakly decreasing tuple of nonnegative integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def stripped(self) -> tuple[int, ...]:
        n = len(self)
        while n and self[n - 1] == 0:
            n -= 1
        return tuple(self[:n])

    def __eq__(self, other):
        if isinstance(other, tuple):
            return self.stripped() == Partition._strip(other)
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.stripped())

    @staticmethod
    def _strip(t: tuple) -> tuple:
        n = len(t)
        while n and t[n - 1] == 0:
            n -= 1
        return tuple(t[:n])

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self.stripped())

    def padded(self, k: int) -> "Partition":
        if self.length > k:
            raise ValueError(f"{self} has more than {k} nonzero parts")
        s = self.stripped()
        return Partition(s + (0,) * (k - len(s)))

    def __repr__(self):
        return f"Partition({tuple(self)})"


def staircase(k: int) -> Partition:
    """``(k-1, ..., 1, 0)``."""
    return Partition(range(k - 1, -1, -1))


def dominates(lhs: Iterable[int], rhs: Iterable[int]) -> bool:
    """True iff ``lhs`` and ``rhs`` have equal size and every prefix sum of
    ``lhs`` is at least the matching prefix sum of ``rhs``."""
    lhs, rhs = tuple(lhs), tuple(rhs)
    if sum(lhs) != sum(rhs):
        return False
    pairs = zip_longest(accumulate(lhs), accumulate(rhs), fillvalue=None)
    last_l = last_r = 0
    for a, b in pairs:
        last_l = last_l if a is None else a
        last_r = last_r if b is None else b
        if last_l < last_r:
            return False
    return True


def partitions_of(total: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``total`` in descending lexicographic order."""
    if max_part is None:
        max_part = total
    if max_parts is None:
        max_parts = total

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            # remaining parts are each at most `first`
            if first * slots < remaining:
                break
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    for parts in rec(total, max_part, max_parts):
        yield Partition(parts)


def enumerate_dominators(k: int) -> list[Partition]:
    """Partitions with at most ``k`` parts lying below the staircase
    ``(k-1, ..., 0)`` in dominance order, padded to ``k`` parts, descending
    lexicographic.

    These index the Jack terms of ``prod_{i<j} (x_i + x_j)``: for k = 3 they
    are (2, 1, 0) and (1, 1, 1).
    """
    if k < 1:
        raise ValueError("k must be positive")
    delta = staircase(k)
    return [p.padded(k) for p in partitions_of(delta.size, max_parts=k) if dominates(delta, p)]


class SOWeight(tuple):
    """Highest weight of an irreducible SO_n(C)-module: ``floor(n/2)``
    integer coordinates, dominant; the last may be negative when n is even."""

    def __new__(cls, coords: Iterable[int], n: int | None = None):
        coords = tuple(int(c) for c in coords)
        self = super().__new__(cls, coords)
        if n is not None:
            self.check(n)
        return self

    @property
    def norm(self) -> int:
        return sum(abs(c) for c in self)

    def check(self, n: int) -> None:
        m = n // 2
        if len(self) != m:
            raise ValueError(f"SO_{n} weights have {m} coordinates, got {tuple(self)}")
        if m == 0:
            return
        head = self[:-1] if n % 2 == 0 else self
        if any(a < b for a, b in zip(head, head[1:])):
            raise ValueError(f"weight {tuple(self)} is not dominant")
        if n % 2 == 1:
            if self[-1] < 0:
                raise ValueError(f"weight {tuple(self)} has a negative coordinate but n={n} is odd")
        elif m >= 2 and self[-2] < abs(self[-1]):
            raise ValueError(f"weight {tuple(self)} violates coords[m-2] >= |coords[m-1]|")

    def __repr__(self):
        return f"SOWeight({tuple(self)})"


def _decreasing_tuples(length: int, budget: int, cap: int, step: int = 1) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of nonnegative multiples of ``step``, each
    at most ``cap``, with sum at most ``budget``."""
    if length == 0:
        yield ()
        return
    for first in range(0, min(cap, budget) + 1):
        if first % step:
            continue
        for rest in _decreasing_tuples(length - 1, budget - first, first, step):
            yield (first,) + rest


def enumerate_weights(k: int, n: int, dmax: int) -> list[SOWeight]:
    """Highest weights of the SO_n(C)-modules in the coordinate ring of the
    Grassmannian of k-planes, with norm at most ``2 * dmax``.

    The first ``k`` coordinates are even and the rest vanish; when
    ``n = 2k`` the last coordinate may also be negative.

    Sorted by norm, then descending lexicographic.
    """
    if k < 1 or 2 * k > n:
        raise ValueError(f"need 1 <= k <= n/2, got k={k}, n={n}")
    if dmax < 0:
        raise ValueError("dmax must be nonnegative")
    m = n // 2
    bound = 2 * dmax
    out: list[tuple[int, ...]] = []
    for head in _decreasing_tuples(k, bound, bound, step=2):
        out.append(head + (0,) * (m - k))
        if 2 * k == n and head[-1] != 0:
            # unoriented planes: both signs of the last coordinate, no odd weights
            out.append(head[:-1] + (-head[-1],))
    weights = [SOWeight(c) for c in out]
    weights.sort(key=lambda w: (w.norm, tuple(-c for c in w)))
    return weights
