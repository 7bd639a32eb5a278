"""Exact membership tests for the Grassmannian and its projective closure.

Points live in ``P(Sym^2(C^n) + C)`` and are written ``[X : t]``.  All
arithmetic is over the Gaussian rationals Q(i); the only radicals that
show up (in the epsilon-degeneration of boundary points) are handled one
2x2 block at a time in a quadratic extension of Q(i).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm

import numpy as np

__all__ = [
    "EpsilonReport",
    "GRMatrix",
    "GaussianRational",
    "MatrixParseError",
    "ProjPoint",
    "affine_member",
    "boundary_generator",
    "canonical_blocks",
    "degeneration_error",
    "epsilon_family_check",
    "orbit_dimension",
    "parse_gaussian",
    "parse_matrix",
    "projective_member",
    "rank_exact",
]


class GaussianRational:
    """``re + im*i`` with rational ``re`` and ``im``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        if isinstance(x, complex):
            return GaussianRational(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, str):
            return parse_gaussian(x)
        raise TypeError(f"cannot convert {x!r} to a Gaussian rational")

    def __add__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        nrm = other.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * other.conjugate()
        return GaussianRational(num.re / nrm, num.im / nrm)

    def __rtruediv__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = "" if abs(self.im) == 1 else f"{abs(self.im)}*"
        if not self.re:
            return f"{'-' if self.im < 0 else ''}{im}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}i"


def _maybe(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return None


I_UNIT = GaussianRational(0, 1)
ZERO = GaussianRational(0)
ONE = GaussianRational(1)


# ---------------------------------------------------------------- parsing

class MatrixParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


_RAT = r"\d+(?:/\d+)?"
_ENTRY = re.compile(
    rf"""^\s*(?:
        (?P<re>[+-]?{_RAT})
        (?:\s*(?P<sign>[+-])\s*(?P<im1>{_RAT})?\s*\*?\s*i)?
      | (?P<imsign>[+-]?)\s*(?P<im2>{_RAT})?\s*\*?\s*i
    )\s*$""",
    re.VERBOSE,
)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse ``a/b+c/d*i`` style strings: ``"3"``, ``"-1/2"``, ``"2*i"``,
    ``"-i"``, ``"1/2-3/4*i"``."""
    match = _ENTRY.match(text)
    if not match:
        raise ValueError(f"not a Gaussian rational: {text!r}")
    if match.group("re") is not None:
        re_part = Fraction(match.group("re"))
        if match.group("sign") is None:
            return GaussianRational(re_part)
        im = Fraction(match.group("im1") or 1)
        return GaussianRational(re_part, -im if match.group("sign") == "-" else im)
    im = Fraction(match.group("im2") or 1)
    return GaussianRational(0, -im if match.group("imsign") == "-" else im)


_DIAG = re.compile(r"^\s*diag\s*\((.*)\)\s*$", re.DOTALL)


def parse_matrix(text: str) -> "GRMatrix":
    """Read a matrix from JSON (array of arrays of strings or numbers) or
    from the shorthand ``diag(a, b, ...)``."""
    diag = _DIAG.match(text)
    if diag:
        body = diag.group(1)
        items = [s for s in body.split(",")]
        values = []
        for pos, item in enumerate(items):
            try:
                values.append(parse_gaussian(item))
            except ValueError as exc:
                raise MatrixParseError(f"diag entry {pos + 1}: {exc}") from None
        n = len(values)
        return GRMatrix.from_rows([[values[r] if r == c else ZERO for c in range(n)] for r in range(n)])
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"malformed matrix JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(data, list) or not data or not all(isinstance(row, list) for row in data):
        raise MatrixParseError("matrix must be a non-empty JSON array of arrays")
    rows = []
    for r, row in enumerate(data):
        parsed = []
        for c, item in enumerate(row):
            try:
                if isinstance(item, bool):
                    raise ValueError(f"boolean entry {item!r}")
                if isinstance(item, int):
                    parsed.append(GaussianRational(item))
                elif isinstance(item, str):
                    parsed.append(parse_gaussian(item))
                else:
                    raise ValueError(f"unsupported entry {item!r}; use a string like \"1/2+3*i\"")
            except ValueError as exc:
                raise MatrixParseError(f"entry [{r}][{c}]: {exc}") from None
        rows.append(parsed)
    try:
        return GRMatrix.from_rows(rows)
    except ValueError as exc:
        raise MatrixParseError(str(exc)) from None


# ----------------------------------------------------------------- matrices

@dataclass(frozen=True)
class GRMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[GaussianRational, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "GRMatrix":
        entries = tuple(tuple(GaussianRational.coerce(x) for x in row) for row in rows)
        if not entries or any(len(row) != len(entries[0]) for row in entries) or not entries[0]:
            raise ValueError("matrix rows must be non-empty and of equal length")
        return cls(len(entries), len(entries[0]), entries)

    @classmethod
    def identity(cls, n: int) -> "GRMatrix":
        return cls.from_rows([[ONE if r == c else ZERO for c in range(n)] for r in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "GRMatrix":
        cols = rows if cols is None else cols
        return cls.from_rows([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def diag(cls, values) -> "GRMatrix":
        values = [GaussianRational.coerce(v) for v in values]
        n = len(values)
        return cls.from_rows([[values[r] if r == c else ZERO for c in range(n)] for r in range(n)])

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __add__(self, other: "GRMatrix") -> "GRMatrix":
        self._same_shape(other)
        return GRMatrix.from_rows(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "GRMatrix":
        return GRMatrix.from_rows([[-a for a in row] for row in self.entries])

    def __sub__(self, other: "GRMatrix") -> "GRMatrix":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GRMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
            cols = list(zip(*other.entries))
            return GRMatrix.from_rows(
                [[sum((a * b for a, b in zip(row, col)), ZERO) for col in cols] for row in self.entries]
            )
        scalar = _maybe(other)
        if scalar is None:
            return NotImplemented
        return GRMatrix.from_rows([[scalar * a for a in row] for row in self.entries])

    __matmul__ = __mul__

    def __rmul__(self, other):
        scalar = _maybe(other)
        if scalar is None:
            return NotImplemented
        return self * scalar

    def transpose(self) -> "GRMatrix":
        return GRMatrix.from_rows(list(zip(*self.entries)))

    @property
    def T(self) -> "GRMatrix":
        return self.transpose()

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def trace(self) -> GaussianRational:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), ZERO)

    def is_zero(self) -> bool:
        return not any(a for row in self.entries for a in row)

    def direct_sum(self, other: "GRMatrix") -> "GRMatrix":
        rows = [list(row) + [ZERO] * other.cols for row in self.entries]
        rows += [[ZERO] * self.cols + list(row) for row in other.entries]
        return GRMatrix.from_rows(rows)

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def to_strings(self) -> list[list[str]]:
        return [[str(a) for a in row] for row in self.entries]

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(a) for a in row] for row in self.entries], dtype=complex)


def _block_diag(blocks: list[GRMatrix]) -> GRMatrix:
    out = blocks[0]
    for b in blocks[1:]:
        out = out.direct_sum(b)
    return out


# -------------------------------------------------------------------- rank

def _gauss_int_rows(M: GRMatrix) -> list[list[tuple[int, int]]]:
    rows = []
    for row in M.entries:
        scale = lcm(*(x.re.denominator for x in row), *(x.im.denominator for x in row))
        rows.append([(int(x.re * scale), int(x.im * scale)) for x in row])
    return rows


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gdiv_exact(a, b):
    nrm = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    if re % nrm or im % nrm:
        raise ArithmeticError("inexact division in Bareiss elimination")
    return (re // nrm, im // nrm)


def rank_exact(M: GRMatrix) -> int:
    """Rank over Q(i) by fraction-free (Bareiss) elimination.

    Rows are first scaled to Gaussian integers; every update
    ``(a*p - b*c) / prev`` then divides exactly in Z[i].
    """
    A = _gauss_int_rows(M)
    nrows, ncols = M.rows, M.cols
    prev = (1, 0)
    rank = 0
    for step in range(min(nrows, ncols)):
        pivot = next(
            ((r, c) for c in range(step, ncols) for r in range(step, nrows) if A[r][c] != (0, 0)),
            None,
        )
        if pivot is None:
            break
        r, c = pivot
        A[step], A[r] = A[r], A[step]
        if c != step:
            for row in A:
                row[step], row[c] = row[c], row[step]
        p = A[step][step]
        for i in range(step + 1, nrows):
            lead = A[i][step]
            for j in range(step + 1, ncols):
                a = _gmul(A[i][j], p)
                b = _gmul(lead, A[step][j])
                A[i][j] = _gdiv_exact((a[0] - b[0], a[1] - b[1]), prev)
            A[i][step] = (0, 0)
        prev = p
        rank += 1
    return rank


# ---------------------------------------------------------------- membership

def _require_symmetric(X: GRMatrix) -> None:
    if not X.is_symmetric():
        raise ValueError("X must be a square symmetric matrix")


def affine_member(X: GRMatrix, k: int) -> bool:
    """True iff ``X^2 = I`` and ``tr X = 2k - n``."""
    _require_symmetric(X)
    n = X.rows
    return X * X == GRMatrix.identity(n) and X.trace() == 2 * k - n


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """``[X : t]`` in ``P(Sym^2(C^n) + C)``; equality ignores scaling."""

    X: GRMatrix
    t: GaussianRational = field(default_factory=lambda: ONE)

    def __post_init__(self):
        object.__setattr__(self, "t", GaussianRational.coerce(self.t))
        _require_symmetric(self.X)
        if self.X.is_zero() and not self.t:
            raise ValueError("[0 : 0] is not a projective point")

    def _coords(self):
        return [a for row in self.X.entries for a in row] + [self.t]

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        u, v = self._coords(), other._coords()
        if len(u) != len(v):
            return False
        # proportional iff every 2x2 minor of the pair vanishes
        pivot = next(i for i, a in enumerate(u) if a)
        return all(u[pivot] * b == v[pivot] * a for a, b in zip(u, v))

    def __hash__(self):
        return hash(self.X.rows)


def projective_member(pt: ProjPoint, k: int) -> bool:
    """Membership in the projective closure: ``X^2 = t^2 I``,
    ``rank(X + tI) <= k`` and ``rank(X - tI) <= n - k``."""
    X, t = pt.X, pt.t
    n = X.rows
    tI = GRMatrix.identity(n) * t
    if X * X != GRMatrix.identity(n) * (t * t):
        return False
    return rank_exact(X + tI) <= k and rank_exact(X - tI) <= n - k


# --------------------------------------------------------------- boundary

S_BLOCK = GRMatrix.from_rows([[GaussianRational(0, Fraction(1, 2)), Fraction(1, 2)],
                              [Fraction(1, 2), GaussianRational(0, Fraction(-1, 2))]])


def boundary_generator(n: int, d: int) -> GRMatrix:
    """``diag(S, ..., S, 0, ..., 0)`` with ``d`` copies of
    ``S = [[i, 1], [1, -i]] / 2``; a base point of the stratum of rank-d
    points at infinity."""
    if not 1 <= d <= n // 2:
        raise ValueError(f"need 1 <= d <= n/2, got n={n}, d={d}")
    blocks = [S_BLOCK] * d
    if n > 2 * d:
        blocks.append(GRMatrix.zeros(n - 2 * d))
    return _block_diag(blocks)


def orbit_dimension(n: int, d: int) -> int:
    """Dimension of the O_n(C)-conjugation orbit of the rank-d boundary point,
    computed as the rank of ``A -> AX - XA`` on antisymmetric ``A``."""
    X = boundary_generator(n, d)
    columns = []
    for p, q in combinations(range(n), 2):
        A = [[ZERO] * n for _ in range(n)]
        A[p][q] = ONE
        A[q][p] = -ONE
        A = GRMatrix.from_rows(A)
        image = A * X - X * A
        columns.append([a for row in image.entries for a in row])
    return rank_exact(GRMatrix.from_rows(columns))


def canonical_blocks(q: int) -> tuple[GRMatrix, GRMatrix, GRMatrix]:
    """Exchange matrix ``J_q``, nilpotent shift ``N_q`` and the symmetric
    nilpotent ``S_q = (I - iJ) N (I + iJ) / 2``."""
    if q < 1:
        raise ValueError("q must be positive")
    J = GRMatrix.from_rows([[ONE if r + c == q - 1 else ZERO for c in range(q)] for r in range(q)])
    N = GRMatrix.from_rows([[ONE if c == r + 1 else ZERO for c in range(q)] for r in range(q)])
    I = GRMatrix.identity(q)
    S = (I - J * I_UNIT) * N * (I + J * I_UNIT) * GaussianRational(Fraction(1, 2))
    return J, N, S


# ------------------------------------------------------ epsilon degeneration

class _Quad:
    """``a + b*r`` with ``r**2 = square``; ``a``, ``b`` and ``square`` in Q(i)."""

    __slots__ = ("a", "b", "square")

    def __init__(self, a, b, square):
        self.a = GaussianRational.coerce(a)
        self.b = GaussianRational.coerce(b)
        self.square = square

    def __add__(self, other):
        other = self._lift(other)
        return _Quad(self.a + other.a, self.b + other.b, self.square)

    __radd__ = __add__

    def __neg__(self):
        return _Quad(-self.a, -self.b, self.square)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        return _Quad(
            self.a * other.a + self.b * other.b * self.square,
            self.a * other.b + self.b * other.a,
            self.square,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        return self.a == other.a and self.b == other.b

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def _lift(self, x):
        if isinstance(x, _Quad):
            if x.square != self.square:
                raise ValueError("elements of different quadratic extensions")
            return x
        return _Quad(x, 0, self.square)


def _mm2(A, B):
    return [[A[r][0] * B[0][c] + A[r][1] * B[1][c] for c in range(2)] for r in range(2)]


def _is_scalar2(M, value) -> bool:
    return M[0][0] == value and M[1][1] == value and not M[0][1] and not M[1][0]


@dataclass(frozen=True)
class EpsilonReport:
    """Outcome of :func:`epsilon_family_check`; truthy iff every identity holds."""

    identities: dict

    def __bool__(self):
        return all(self.identities.values())

    @property
    def failed(self) -> list[str]:
        return [name for name, ok in self.identities.items() if not ok]


def epsilon_family_check(n: int, k: int, d: int, eps) -> EpsilonReport:
    """Verify the algebraic identities behind the curve of Grassmannian
    points degenerating to the rank-d boundary point.

    With ``s**2 = 2*eps*i`` and ``u**2 = eps*(eps + 2i)``:

    * ``S_eps = [[eps+i, 1], [1, -(eps+i)]] / 2`` and
      ``T_eps = [[eps, s], [s, -eps]] / 2`` square to ``u**2/4 * I`` and are
      traceless;
    * ``X_d(eps) = diag(S_eps x d, T_eps x (k-d), u/2 * I_(n-2k))`` therefore
      satisfies ``X^2 = t^2 I`` and ``tr X = (n-2k) u/2 = (2k-n) t`` for
      ``t = -u/2``, and ``rank(X + tI) = k``, ``rank(X - tI) = n-k``;
    * the orthogonal degeneration matrices ``C_eps``, ``D_eps`` (the 2x2
      matrices above divided by ``u``) square to the identity.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if not 1 <= d <= k <= n // 2:
        raise ValueError(f"need 1 <= d <= k <= n/2, got n={n}, k={k}, d={d}")
    half = Fraction(1, 2)
    e = GaussianRational(eps)
    u_sq = e * (e + 2 * I_UNIT)  # u**2
    s_sq = 2 * eps * I_UNIT  # s**2
    quarter_u_sq = u_sq * GaussianRational(Fraction(1, 4))

    S_eps = [[(e + I_UNIT) * half, GaussianRational(half)], [GaussianRational(half), -(e + I_UNIT) * half]]
    s = _Quad(0, 1, s_sq)
    T_eps = [[_Quad(e * half, 0, s_sq), s * half], [s * half, _Quad(-e * half, 0, s_sq)]]

    checks: dict[str, bool] = {}
    checks["S_eps^2 = u^2/4 I"] = _is_scalar2(_mm2(S_eps, S_eps), quarter_u_sq)
    checks["T_eps^2 = u^2/4 I"] = _is_scalar2(_mm2(T_eps, T_eps), _Quad(quarter_u_sq, 0, s_sq))
    checks["tr S_eps = 0"] = not (S_eps[0][0] + S_eps[1][1])
    checks["tr T_eps = 0"] = not (T_eps[0][0] + T_eps[1][1])
    checks["S_eps - S = eps/2 diag(1, -1)"] = (
        S_eps[0][0] - S_BLOCK[0, 0] == e * half
        and S_eps[1][1] - S_BLOCK[1, 1] == -e * half
        and S_eps[0][1] == S_BLOCK[0, 1]
        and S_eps[1][0] == S_BLOCK[1, 0]
    )
    # trace of X_d(eps) as (part in Q(i)[s]) + (coefficient of u)
    trace_rational = (S_eps[0][0] + S_eps[1][1]) * d + (T_eps[0][0] + T_eps[1][1]) * (k - d)
    trace_u_coeff = Fraction(1, 2) * (n - 2 * k)  # from the (u/2) I_(n-2k) block
    checks["tr X_d(eps) = (n-2k) u/2"] = not trace_rational and trace_u_coeff == Fraction(n - 2 * k, 2)
    # homogenized trace equation with t = -u/2: u-coefficient of tr X - (2k-n) t
    checks["tr X - (2k-n) t = 0 at t = -u/2"] = trace_u_coeff - (2 * k - n) * Fraction(-1, 2) == 0
    # X_d(eps)^2 = t^2 I blockwise: the S and T blocks above, and (u/2)^2 = u^2/4 on the rest
    checks["X_d(eps)^2 = t^2 I"] = checks["S_eps^2 = u^2/4 I"] and checks["T_eps^2 = u^2/4 I"]
    # traceless 2x2 B with det B = -u^2/4 has eigenvalues +-u/2, so B +- (u/2) I has rank 1
    # provided the off-diagonal entry is nonzero; the last block contributes 0 to
    # rank(X - (u/2) I) and n-2k to rank(X + (u/2) I)
    det_S = S_eps[0][0] * S_eps[1][1] - S_eps[0][1] * S_eps[1][0]
    det_T = T_eps[0][0] * T_eps[1][1] - T_eps[0][1] * T_eps[1][0]
    blocks_ok = (
        det_S == -quarter_u_sq
        and det_T == _Quad(-quarter_u_sq, 0, s_sq)
        and bool(S_eps[0][1])
        and bool(T_eps[0][1])
    )
    rank_plus_t = k if blocks_ok else None  # rank(X + tI) = rank(X - (u/2) I)
    rank_minus_t = k + (n - 2 * k) if blocks_ok else None
    checks["rank(X + tI) <= k"] = rank_plus_t is not None and rank_plus_t <= k
    checks["rank(X - tI) <= n-k"] = rank_minus_t is not None and rank_minus_t <= n - k

    M_C = [[e + I_UNIT, ONE], [ONE, -(e + I_UNIT)]]
    checks["(eps+i)^2 + 1 = eps(eps+2i)"] = (e + I_UNIT) * (e + I_UNIT) + 1 == u_sq
    checks["C_eps^2 = I"] = _is_scalar2(_mm2(M_C, M_C), u_sq)
    M_D = [[_Quad(e, 0, s_sq), s], [s, _Quad(-e, 0, s_sq)]]
    checks["D_eps^2 = I"] = _is_scalar2(_mm2(M_D, M_D), _Quad(u_sq, 0, s_sq))
    checks["C_eps, D_eps symmetric"] = M_C[0][1] == M_C[1][0] and M_D[0][1] == M_D[1][0]
    return EpsilonReport(checks)


def degeneration_point(n: int, k: int, d: int, eps: float) -> tuple[np.ndarray, complex]:
    """Floating-point ``(X_d(eps), t)`` with ``t = -u/2``."""
    u = np.sqrt(eps * (eps + 2j))
    s = np.sqrt(2j * eps)
    S_eps = 0.5 * np.array([[eps + 1j, 1], [1, -(eps + 1j)]])
    T_eps = 0.5 * np.array([[eps, s], [s, -eps]])
    X = np.zeros((n, n), dtype=complex)
    pos = 0
    for block in [S_eps] * d + [T_eps] * (k - d):
        X[pos : pos + 2, pos : pos + 2] = block
        pos += 2
    X[pos:, pos:] = 0.5 * u * np.eye(n - pos)
    return X, -u / 2


def degeneration_error(n: int, k: int, d: int, eps: float) -> float:
    """Max-entry distance between ``X_d(eps)`` and the boundary generator."""
    X, _ = degeneration_point(n, k, d, eps)
    return float(np.max(np.abs(X - boundary_generator(n, d).to_numpy())))
