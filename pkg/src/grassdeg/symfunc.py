"""Symmetric polynomials in the monomial basis and Jack polynomials.

Jack polynomials are computed in the monic normalization (coefficient of
``m_lambda`` equal to 1) as eigenfunctions of the Laplace-Beltrami type
operator

    D = (alpha/2) sum_i x_i^2 d_i^2 + sum_{i != j} x_i^2 / (x_i - x_j) d_i,

which is triangular on monomial symmetric polynomials with respect to
dominance.  Its off-diagonal part sends ``m_nu`` to a combination of
``m_mu`` with ``mu < nu``; collecting the terms that land on a fixed
``m_mu`` gives the recurrence used in :func:`jack_P`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from types import MappingProxyType
from typing import Iterable, Mapping

from .partitions import Partition, dominates, partitions_of

__all__ = [
    "JackExpansion",
    "NotInSpan",
    "SymPoly",
    "elementary",
    "jack_P",
    "jack_expand",
    "product_of_pair_sums",
]


class NotInSpan(ArithmeticError):
    pass


def _key(parts: Iterable[int]) -> Partition:
    return Partition(Partition(parts).stripped())


def _orbit(parts: tuple[int, ...]) -> set[tuple[int, ...]]:
    return set(permutations(parts))


@dataclass(frozen=True)
class SymPoly:
    """``sum_lambda c_lambda m_lambda(x_1, ..., x_m)`` with ``m = num_vars``."""

    num_vars: int
    terms: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("num_vars must be positive")
        clean = {}
        for lam, c in self.terms.items():
            key = _key(lam)
            if key.length > self.num_vars:
                raise ValueError(f"{tuple(lam)} has more parts than {self.num_vars} variables")
            c = Fraction(c)
            if c:
                clean[key] = clean.get(key, Fraction(0)) + c
        object.__setattr__(self, "terms", MappingProxyType({k: v for k, v in clean.items() if v}))

    @classmethod
    def monomial(cls, lam: Iterable[int], num_vars: int) -> "SymPoly":
        return cls(num_vars, {_key(lam): Fraction(1)})

    @classmethod
    def from_polynomial(cls, poly: Mapping[tuple[int, ...], Fraction], num_vars: int) -> "SymPoly":
        """Read off monomial-basis coefficients from a symmetric polynomial
        given as ``{exponent tuple: coefficient}``; symmetry is trusted."""
        terms = {}
        for exps, c in poly.items():
            if c and all(a >= b for a, b in zip(exps, exps[1:])):
                terms[_key(exps)] = c
        return cls(num_vars, terms)

    def to_polynomial(self) -> dict[tuple[int, ...], Fraction]:
        out: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
        for lam, c in self.terms.items():
            for exps in _orbit(lam.padded(self.num_vars)):
                out[exps] += c
        return dict(out)

    def _check(self, other: "SymPoly"):
        if self.num_vars != other.num_vars:
            raise ValueError("polynomials live in different numbers of variables")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, Fraction(0)) + c
        return SymPoly(self.num_vars, terms)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.num_vars, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def scale(self, c) -> "SymPoly":
        c = Fraction(c)
        return SymPoly(self.num_vars, {lam: c * v for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        self._check(other)
        # coefficient of m_nu: count pairs of monomials summing to the sorted exponent nu
        out: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
        for lam, a in self.terms.items():
            lam_orbit = _orbit(lam.padded(self.num_vars))
            for mu, b in other.terms.items():
                mu_orbit = _orbit(mu.padded(self.num_vars))
                for u in lam_orbit:
                    for v in mu_orbit:
                        w = tuple(x + y for x, y in zip(u, v))
                        if all(p >= q for p, q in zip(w, w[1:])):
                            out[w] += a * b
        return SymPoly(self.num_vars, out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def leading(self) -> Partition:
        """Lexicographically largest key; it is maximal for dominance."""
        return max(self.terms, key=lambda p: p.stripped())


def elementary(r: int, num_vars: int) -> SymPoly:
    return SymPoly.monomial((1,) * r, num_vars)


def _expand_product(factors: Iterable[Mapping[tuple[int, ...], int]], num_vars: int) -> dict:
    poly: dict[tuple[int, ...], int] = {(0,) * num_vars: 1}
    for f in factors:
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for e1, c1 in poly.items():
            for e2, c2 in f.items():
                nxt[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        poly = nxt
    return poly


def product_of_pair_sums(k: int, power: int = 1) -> SymPoly:
    """``prod_{i<j} (x_i + x_j)**power`` in ``k`` variables."""
    if k < 1:
        raise ValueError("k must be positive")
    factors = []
    for i, j in combinations(range(k), 2):
        ei = tuple(int(t == i) for t in range(k))
        ej = tuple(int(t == j) for t in range(k))
        factors.extend([{ei: 1, ej: 1}] * power)
    poly = _expand_product(factors, k)
    return SymPoly.from_polynomial({e: Fraction(c) for e, c in poly.items()}, k)


def _eigen_shift(mu: tuple[int, ...], alpha: Fraction) -> Fraction:
    # eigenvalue of D on m_mu, up to a term that only depends on |mu| and N
    return alpha / 2 * sum(p * p for p in mu) - sum(i * p for i, p in enumerate(mu, start=1))


@lru_cache(maxsize=None)
def _jack_coefficients(lam: tuple[int, ...], alpha: Fraction, num_vars: int) -> dict:
    below = [mu.stripped() for mu in partitions_of(sum(lam), max_parts=num_vars) if dominates(lam, mu)]
    # descending lex is a linear extension of dominance: every raise of mu is already done
    coeffs: dict[tuple[int, ...], Fraction] = {lam: Fraction(1)}
    e_lam = _eigen_shift(lam, alpha)
    for mu in below:
        if mu == lam:
            continue
        total = Fraction(0)
        for j in range(1, len(mu)):
            for i in range(j):
                for t in range(1, mu[j] + 1):
                    raised = list(mu)
                    raised[i] += t
                    raised[j] -= t
                    nu = tuple(sorted((p for p in raised if p), reverse=True))
                    c = coeffs.get(nu)
                    if c:
                        total += (mu[i] - mu[j] + 2 * t) * c
        if total:
            coeffs[mu] = total / (e_lam - _eigen_shift(mu, alpha))
    return coeffs


def jack_P(lam: Iterable[int], alpha, num_vars: int) -> SymPoly:
    """Monic Jack polynomial ``P_lambda^(alpha)`` in ``num_vars`` variables."""
    lam = _key(lam)
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if lam.length > num_vars:
        raise ValueError(f"{tuple(lam)} has more parts than {num_vars} variables")
    return _jack_poly(lam.stripped(), alpha, num_vars)


@lru_cache(maxsize=None)
def _jack_poly(lam: tuple[int, ...], alpha: Fraction, num_vars: int) -> SymPoly:
    return SymPoly(num_vars, _jack_coefficients(lam, alpha, num_vars))


@dataclass(frozen=True)
class JackExpansion:
    alpha: Fraction
    num_vars: int
    coeffs: Mapping[Partition, Fraction]

    def reconstruct(self) -> SymPoly:
        total = SymPoly(self.num_vars)
        for lam, c in self.coeffs.items():
            total = total + jack_P(lam, self.alpha, self.num_vars).scale(c)
        return total


def jack_expand(f: SymPoly, alpha) -> JackExpansion:
    """Coefficients of ``f`` in the monic Jack basis, by peeling off the
    dominance-leading term until nothing is left."""
    alpha = Fraction(alpha)
    maximal = [lam for lam in f.terms if not any(mu != lam and dominates(mu, lam) for mu in f.terms)]
    residual = f
    coeffs: dict[Partition, Fraction] = {}
    while residual:
        lead = residual.leading()
        if not any(dominates(top, lead) for top in maximal):
            raise NotInSpan(f"residual term {tuple(lead)} lies outside the dominance ideal of the input")
        c = residual.terms[lead]
        coeffs[lead] = c
        residual = residual - jack_P(lead, alpha, f.num_vars).scale(c)
        if lead in residual.terms:
            raise NotInSpan(f"leading term {tuple(lead)} did not cancel")
    return JackExpansion(alpha, f.num_vars, MappingProxyType(coeffs))
