"""Degree of the Grassmannian Gr(k, R^n) in its involution model.

The main entry point is :func:`degree`, which evaluates the Jack-polynomial
sum exactly.  Closed forms for ``k <= 4``, the Pluecker degree, the
polynomial part ``P_k`` and the integral identity behind the formula live
here too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .partitions import Partition, dominates, staircase
from .scalar import (
    PiScaled,
    binomial,
    double_factorial,
    factorial,
    gamma_half,
    prod,
    to_integer,
)
from .symfunc import jack_expand, product_of_pair_sums

__all__ = [
    "DegreeBoundViolated",
    "DegreeReport",
    "DegreeTerm",
    "RationalPolynomial",
    "alpha_coefficient",
    "closed_form_degree",
    "degree",
    "degree_prefactor",
    "degree_ratio",
    "interpolate_Pk",
    "pair_sum_jack_coefficients",
    "plucker_degree",
    "selberg_lhs_monte_carlo",
    "selberg_rhs",
]


class DegreeBoundViolated(ArithmeticError):
    pass


@dataclass(frozen=True)
class DegreeTerm:
    lam: Partition
    A: PiScaled
    B: PiScaled
    C: Fraction

    @property
    def value(self) -> PiScaled:
        return self.A * self.B * self.C

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "A_coeff": str(self.A.coeff),
            "A_sqrtpi": self.A.half_pi_exp,
            "B_coeff": str(self.B.coeff),
            "B_sqrtpi": self.B.half_pi_exp,
            "C": str(self.C),
        }


@dataclass(frozen=True)
class DegreeReport:
    k: int
    n: int
    degree: int
    alpha_kn: Fraction
    terms: tuple[DegreeTerm, ...] = field(default_factory=tuple)
    method: str = "formula"

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "degree": self.degree,
            "alpha": str(self.alpha_kn),
            "terms": [t.to_json() for t in self.terms],
            "method": self.method,
        }


def _check_half(k: int, n: int) -> None:
    if k < 1 or 2 * k > n:
        raise ValueError(f"need 1 <= k <= n/2, got k={k}, n={n}; reduce k by duality first")


def _check_range(k: int, n: int) -> None:
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")


def alpha_coefficient(k: int, n: int) -> Fraction:
    """The rational prefactor in front of the Jack sum."""
    _check_half(k, n)
    if n == 2 * k:
        den = prod((j - i) * (2 * k - j - i) for i, j in combinations(range(1, k + 1), 2))
        return Fraction(2 ** (k * (k - 1) + 1), den)
    half = n // 2  # floor(n/2) also equals (n-1)/2 for odd n
    den = prod((j - i) * (n - j - i) for i in range(1, k + 1) for j in range(i + 1, half + 1))
    if n % 2 == 0:
        return Fraction(2 ** (k * (n - k - 1)), den)
    den *= prod(n - 2 * i for i in range(1, k + 1))
    return Fraction(2 ** (k * (n - k)), den)


def pair_sum_jack_coefficients(m: int, d: int = 1) -> dict[Partition, Fraction]:
    """Coefficients of ``prod_{i<j} (x_i + x_j)**d`` in the monic Jack basis
    with parameter ``2/d``, keyed by partitions padded to ``m`` parts.

    Every key is dominated by the scaled staircase ``d * (m-1, ..., 1, 0)``.
    """
    expansion = jack_expand(product_of_pair_sums(m, d), Fraction(2, d))
    top = Partition(d * p for p in staircase(m))
    out = {}
    for lam, c in expansion.coeffs.items():
        lam = lam.padded(m)
        if not dominates(top, lam):
            raise ArithmeticError(f"expansion term {tuple(lam)} is not dominated by {tuple(top)}")
        out[lam] = c
    return dict(sorted(out.items(), key=lambda kv: tuple(-p for p in kv[0])))


def _gamma_product(lam: Partition, m: int, p: int, d: int) -> tuple[PiScaled, PiScaled]:
    # all Gamma arguments are passed doubled so half-integers stay exact
    A = prod(
        (gamma_half(2 * lam[i - 1] + 2 * p + 2 + d * (m - i)) for i in range(1, m + 1)),
        PiScaled(1),
    )
    B = PiScaled(1)
    for i, j in combinations(range(1, m + 1), 2):
        gap = lam[i - 1] - lam[j - 1]
        B = B * gamma_half(2 * gap + d * (j - i + 1)) / gamma_half(2 * gap + d * (j - i))
    return A, B


def degree(k: int, n: int) -> DegreeReport:
    """Exact degree of the complex locus of Gr(k, R^n) in Sym^2(C^n)."""
    _check_range(k, n)
    if 2 * k > n:
        k = n - k
    alpha = alpha_coefficient(k, n)
    terms = []
    total = PiScaled(0)
    for lam, c in pair_sum_jack_coefficients(k).items():
        A, B = _gamma_product(lam, k, n - 2 * k, 1)
        term = DegreeTerm(lam, A, B, c)
        terms.append(term)
        total = total + term.value
    value = to_integer(total * alpha)
    return DegreeReport(k, n, value, alpha, tuple(terms), "formula")


_CLOSED_FORM_MIN_N = {1: 2, 2: 3, 3: 5, 4: 7}


def closed_form_degree(k: int, n: int) -> int:
    """Closed-form degree for ``k <= 4``; valid from n = 2, 3, 5, 7."""
    if k not in _CLOSED_FORM_MIN_N or n < _CLOSED_FORM_MIN_N[k]:
        raise ValueError(f"no closed form for k={k}, n={n}")
    if k == 1:
        return 2 ** (n - 1)
    if k == 2:
        return 2 * binomial(2 * n - 4, n - 2)
    if k == 3:
        value = Fraction((8 * n - 25) * double_factorial(2 * n - 9) * 2 ** (2 * n - 6), factorial(n - 2))
    else:
        value = Fraction(
            (32 * n * n - 288 * n + 634) * double_factorial(2 * n - 13) * double_factorial(2 * n - 9) * 2 ** (2 * n - 6),
            factorial(n - 2) * factorial(n - 4),
        )
    assert value.denominator == 1, (k, n, value)
    return value.numerator


def plucker_degree(k: int, n: int) -> int:
    """Degree of Gr(k, n) under the Pluecker embedding."""
    _check_range(k, n)
    # j (j+1) ... (j+n-k-1) = (j+n-k-1)! / (j-1)!
    den = prod(factorial(j + n - k - 1) // factorial(j - 1) for j in range(1, k + 1))
    num = factorial(k * (n - k))
    assert num % den == 0
    return num // den


def degree_ratio(k: int, n: int) -> Fraction:
    return Fraction(degree(k, n).degree, plucker_degree(k, n))


def degree_prefactor(k: int, n: int) -> Fraction:
    """Everything in front of ``P_k(n)``: the alpha coefficient times the
    factorials, double factorials and power of two that the Gamma
    products collapse to."""
    _check_half(k, n)
    h = k // 2
    num = prod(factorial(n - 2 * k + 2 * j) for j in range((k - 1) // 2 + 1))
    num *= prod(double_factorial(2 * (n - 2 * k + 2 * j) - 1) for j in range(1, h + 1))
    return alpha_coefficient(k, n) * Fraction(num, 2 ** (h * (n - 2 * k + h - 1)))


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial with rational coefficients, lowest degree first."""

    coeffs: tuple[Fraction, ...]

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @property
    def degree(self) -> int:
        nz = [i for i, c in enumerate(self.coeffs) if c]
        return nz[-1] if nz else -1

    def __str__(self):
        parts = [f"{c}*n^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(reversed(parts)) or "0"


def _interpolate(points: list[tuple[int, Fraction]]) -> RationalPolynomial:
    size = len(points)
    coeffs = [Fraction(0)] * size
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        for t, b in enumerate(basis):
            coeffs[t] += yi * b / denom
    return RationalPolynomial(tuple(coeffs))


def pk_degree_bound(k: int) -> int:
    return binomial(k, 2) - sum(i // 2 for i in range(1, k + 1))


def interpolate_Pk(k: int, extra: int = 2) -> RationalPolynomial:
    """Interpolate ``P_k`` from ``d_{k,n}``, n = 2k, 2k+1, ...

    Uses ``bound + 1`` seed values and checks ``extra`` further values
    against the interpolant; raises :class:`DegreeBoundViolated` if they
    disagree.
    """
    if k < 1:
        raise ValueError("k must be positive")
    bound = pk_degree_bound(k)
    values = []
    for n in range(2 * k, 2 * k + bound + 1 + extra):
        values.append((n, Fraction(degree(k, n).degree) / degree_prefactor(k, n)))
    poly = _interpolate(values[: bound + 1])
    for n, v in values[bound + 1 :]:
        if poly(n) != v:
            raise DegreeBoundViolated(f"P_{k}({n}) = {v} does not fit a polynomial of degree <= {bound}")
    return poly


def selberg_rhs(m: int, p: int, d: int) -> Fraction:
    """Closed-form value of the integral of ``prod x_i^p prod (x_i^2 - x_j^2)^d``
    over ``{x_1 >= ... >= x_m >= 0, sum x <= 1}``."""
    if min(m, p, d) < 1:
        raise ValueError("m, p, d must be positive")
    total = PiScaled(0)
    for lam, c in pair_sum_jack_coefficients(m, d).items():
        A, B = _gamma_product(lam, m, p, d)
        total = total + A * B * c
    value = total / factorial(m * (p + 1 + d * (m - 1)))
    if value.half_pi_exp != 0:
        raise ArithmeticError(f"sqrt(pi) did not cancel: {value}")
    return value.coeff


def selberg_lhs_monte_carlo(m: int, p: int, d: int, samples: int, seed: int, chunk: int = 1_000_000):
    """Monte Carlo estimate of the same integral: uniform points in the unit
    cube, integrand zeroed outside the ordered simplex.

    Returns ``(estimate, standard_error)``.
    """
    rng = np.random.default_rng(seed)
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < samples:
        size = min(chunk, samples - done)
        x = rng.random((size, m))
        inside = x.sum(axis=1) <= 1.0
        if m > 1:
            inside &= np.all(x[:, :-1] >= x[:, 1:], axis=1)
        f = np.prod(x, axis=1) ** p
        for i, j in combinations(range(m), 2):
            f = f * (x[:, i] ** 2 - x[:, j] ** 2) ** d
        f = np.where(inside, f, 0.0)
        total += f.sum()
        total_sq += (f * f).sum()
        done += size
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0)
    return mean, (var / samples) ** 0.5
