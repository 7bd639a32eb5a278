"""Independent route to the degree through representation theory.

The coordinate ring of the Grassmannian, filtered by polynomial degree,
decomposes into irreducible SO_n(C)-modules.  Summing Weyl dimensions
gives the Hilbert function ``F(d)``, and its ``p``-th finite difference
(``p = k(n-k)``) settles to the degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .partitions import SOWeight, enumerate_weights
from .scalar import binomial

__all__ = [
    "HilbertProfile",
    "NotStabilized",
    "degree_by_differences",
    "hilbert_profile",
    "hilbert_sum",
    "so_dim",
]

DEFAULT_BUDGET = 12


class NotStabilized(ArithmeticError):
    pass


def so_dim(n: int, lam) -> int:
    """Weyl dimension of the irreducible SO_n(C)-module with highest weight ``lam``."""
    lam = SOWeight(lam, n)
    m = n // 2
    value = Fraction(1)
    for i, j in combinations(range(1, m + 1), 2):
        a, b = lam[i - 1], lam[j - 1]
        value *= Fraction(a - b - i + j, j - i)
        value *= Fraction(a + b + n - i - j, n - i - j)
    if n % 2 == 1:
        for i in range(1, m + 1):
            value *= Fraction(2 * lam[i - 1] + n - 2 * i, n - 2 * i)
    if value.denominator != 1 or value <= 0:
        raise ArithmeticError(f"dimension formula gave {value} for n={n}, weight {tuple(lam)}")
    return value.numerator


def hilbert_sum(k: int, n: int, d: int) -> int:
    """``F(d)``: dimension of the functions of filtration degree at most ``d``."""
    return sum(so_dim(n, w) for w in enumerate_weights(k, n, d))


@dataclass(frozen=True)
class HilbertProfile:
    k: int
    n: int
    p: int
    values: tuple[tuple[int, int], ...]


def hilbert_profile(k: int, n: int, dmax: int) -> HilbertProfile:
    # a single enumeration at dmax, bucketed by norm, avoids re-enumerating for each d
    counts = [0] * (dmax + 1)
    for w in enumerate_weights(k, n, dmax):
        counts[(w.norm + 1) // 2] += so_dim(n, w)
    values = []
    running = 0
    for d, c in enumerate(counts):
        running += c
        values.append((d, running))
    return HilbertProfile(k, n, k * (n - k), tuple(values))


def _forward_difference(seq: list[int], order: int, base: int) -> int:
    return sum((-1) ** (order - j) * binomial(order, j) * seq[base + j] for j in range(order + 1))


def degree_by_differences(k: int, n: int, budget: int = DEFAULT_BUDGET, max_base: int | None = None) -> int:
    """Degree as the stabilized ``p``-th forward difference of ``F``."""
    if k < 1 or 2 * k > n:
        raise ValueError(f"need 1 <= k <= n/2, got k={k}, n={n}")
    p = k * (n - k)
    if p > budget:
        raise ValueError(f"p = k(n-k) = {p} exceeds the budget {budget}")
    if max_base is None:
        max_base = 4 * p + 8
    profile = hilbert_profile(k, n, max_base + 1 + p)
    F = [v for _, v in profile.values]
    prev = None
    for base in range(p, max_base + 1):
        cur = _forward_difference(F, p, base)
        if cur == prev:
            return cur
        prev = cur
    raise NotStabilized(f"p-th difference of F did not settle for k={k}, n={n} by base {max_base}")
