"""Exact scalars: rationals and Gamma values at positive half-integers.

Every Gamma value that shows up in the degree formula has the form
``q * pi**(e/2)`` with ``q`` rational, so we carry the rational part and
the exponent of ``sqrt(pi)`` separately and never touch floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, factorial
import operator

Rational = Fraction

__all__ = [
    "NonIntegral",
    "PiScaled",
    "Rational",
    "binomial",
    "double_factorial",
    "factorial",
    "gamma_half",
    "prod",
    "to_integer",
]


class NonIntegral(ArithmeticError):
    """Raised when a value expected to be an integer is not."""

    def __init__(self, value: "PiScaled"):
        self.value = value
        super().__init__(f"value {value} is not an integer")


def prod(values, start=1):
    """Product of an iterable; the empty product is ``start``."""
    return reduce(operator.mul, values, start)


def double_factorial(m: int) -> int:
    """``m!! = m (m-2) (m-4) ...``; ``0!! = (-1)!! = 1``."""
    if m < -1:
        raise ValueError(f"double factorial undefined for {m}")
    return prod(range(m, 0, -2))


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class PiScaled:
    """The number ``coeff * pi**(half_pi_exp / 2)``."""

    coeff: Fraction
    half_pi_exp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0:
            object.__setattr__(self, "half_pi_exp", 0)

    def __mul__(self, other):
        if isinstance(other, PiScaled):
            return PiScaled(self.coeff * other.coeff, self.half_pi_exp + other.half_pi_exp)
        if isinstance(other, (int, Fraction)):
            return PiScaled(self.coeff * other, self.half_pi_exp)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiScaled):
            return PiScaled(self.coeff / other.coeff, self.half_pi_exp - other.half_pi_exp)
        if isinstance(other, (int, Fraction)):
            return PiScaled(self.coeff / other, self.half_pi_exp)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PiScaled(other)
        if not isinstance(other, PiScaled):
            return NotImplemented
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.half_pi_exp != other.half_pi_exp:
            raise ValueError(
                f"cannot add values with sqrt(pi) exponents {self.half_pi_exp} and {other.half_pi_exp}"
            )
        return PiScaled(self.coeff + other.coeff, self.half_pi_exp)

    __radd__ = __add__

    @property
    def is_integral(self) -> bool:
        return self.half_pi_exp == 0 and self.coeff.denominator == 1

    def __float__(self):
        import math

        return float(self.coeff) * math.pi ** (self.half_pi_exp / 2)

    def __str__(self):
        if self.half_pi_exp == 0:
            return str(self.coeff)
        return f"{self.coeff}*sqrt(pi)^{self.half_pi_exp}"


def gamma_half(twice_arg: int) -> PiScaled:
    """Exact ``Gamma(twice_arg / 2)`` for a positive integer ``twice_arg``.

    >>> gamma_half(7)
    PiScaled(coeff=Fraction(15, 8), half_pi_exp=1)
    """
    if not isinstance(twice_arg, int) or twice_arg <= 0:
        raise ValueError(f"gamma_half needs a positive integer, got {twice_arg!r}")
    if twice_arg % 2 == 0:
        return PiScaled(Fraction(factorial(twice_arg // 2 - 1)), 0)
    # Gamma(m + 1/2) = (2m-1)!! sqrt(pi) / 2^m
    m = twice_arg // 2
    return PiScaled(Fraction(double_factorial(2 * m - 1), 2**m), 1)


def to_integer(value: PiScaled) -> int:
    if not value.is_integral:
        raise NonIntegral(value)
    return value.coeff.numerator
