import random
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grassdeg.closure import (
    GaussianRational as G,
    GRMatrix,
    MatrixParseError,
    ProjPoint,
    affine_member,
    boundary_generator,
    canonical_blocks,
    degeneration_error,
    degeneration_point,
    epsilon_family_check,
    orbit_dimension,
    parse_gaussian,
    parse_matrix,
    projective_member,
    rank_exact,
)

SEED = 20240611
HEIGHT = 100


def rand_rational(rng, height=HEIGHT):
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def rand_gaussian(rng, height=HEIGHT, real=False):
    return G(rand_rational(rng, height), 0 if real else rand_rational(rng, height))


def rand_matrix(rng, rows, cols, zero_rate=0.3):
    return GRMatrix.from_rows(
        [[G(0) if rng.random() < zero_rate else rand_gaussian(rng) for _ in range(cols)] for _ in range(rows)]
    )


def det_leibniz(rows):
    n = len(rows)
    total = G(0)
    for perm in permutations(range(n)):
        sign = 1
        for i, j in combinations(range(n), 2):
            if perm[i] > perm[j]:
                sign = -sign
        term = G(sign)
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term
    return total


def naive_rank(M: GRMatrix) -> int:
    """Largest size of a nonzero minor."""
    for size in range(min(M.rows, M.cols), 0, -1):
        for rs in combinations(range(M.rows), size):
            for cs in combinations(range(M.cols), size):
                if det_leibniz([[M[r, c] for c in cs] for r in rs]):
                    return size
    return 0


def diag_pm(k, n):
    return GRMatrix.diag([1] * k + [-1] * (n - k))


def signed_permutation(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return GRMatrix.from_rows([[rng.choice([1, -1]) if perm[r] == c else 0 for c in range(n)] for r in range(n)])


# ----------------------------------------------------------------- scalars

def test_gaussian_field_ops():
    a, b = G(1, 2), G(Fraction(1, 3), -1)
    assert a * b == G(Fraction(1, 3) + 2, -1 + Fraction(2, 3))
    assert (a / b) * b == a
    assert a.conjugate() == G(1, -2)
    assert a.norm() == 5
    assert a - a == 0
    assert G(3) == 3
    with pytest.raises(ZeroDivisionError):
        a / G(0)


@pytest.mark.parametrize(
    "text,value",
    [
        ("3", G(3)),
        ("-1/2", G(Fraction(-1, 2))),
        ("i", G(0, 1)),
        ("-i", G(0, -1)),
        ("2*i", G(0, 2)),
        ("1/2-3/4*i", G(Fraction(1, 2), Fraction(-3, 4))),
        ("  5 + 1/7*i ", G(5, Fraction(1, 7))),
        ("-3/2i", G(0, Fraction(-3, 2))),
    ],
)
def test_parse_gaussian(text, value):
    assert parse_gaussian(text) == value


@pytest.mark.parametrize("bad", ["", "1/", "i*i", "x", "1//2", "1+"])
def test_parse_gaussian_rejects(bad):
    with pytest.raises(ValueError):
        parse_gaussian(bad)


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_gaussian_str_round_trip(re, im):
    x = G(re, im)
    assert parse_gaussian(str(x).replace(" ", "")) == x


# ----------------------------------------------------------------- parsing

def test_parse_matrix_json_and_diag():
    M = parse_matrix('[["1", "1/2*i"], ["1/2*i", -1]]')
    assert M[0, 1] == G(0, Fraction(1, 2)) and M[1, 1] == -1
    assert parse_matrix("diag(1, 1, -1)") == GRMatrix.diag([1, 1, -1])


@pytest.mark.parametrize(
    "text,line,column",
    [('[["1", "2"],\n ["3" "4"]]', 2, 7), ('[["1",', 1, 7), ("", 1, 1)],
)
def test_parse_matrix_reports_position(text, line, column):
    with pytest.raises(MatrixParseError) as info:
        parse_matrix(text)
    assert (info.value.line, info.value.column) == (line, column)


@pytest.mark.parametrize("text", ['[["1", "2"], ["3"]]', "[]", '{"a": 1}', '[["1.5"]]', "[[1.5]]", "[[true]]", "diag(1, x)"])
def test_parse_matrix_rejects(text):
    with pytest.raises(MatrixParseError):
        parse_matrix(text)


# -------------------------------------------------------------------- rank

def test_rank_examples():
    assert rank_exact(boundary_generator(2, 1)) == 1
    for n in range(1, 7):
        assert rank_exact(GRMatrix.identity(n)) == n
        J, _, _ = canonical_blocks(n)
        assert rank_exact(J) == n
    assert rank_exact(GRMatrix.zeros(3, 4)) == 0


def test_rank_against_minors_random():
    rng = random.Random(SEED)
    for _ in range(120):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        M = rand_matrix(rng, rows, cols, zero_rate=rng.choice([0.0, 0.3, 0.7]))
        assert rank_exact(M) == naive_rank(M)


def test_rank_of_low_rank_products():
    rng = random.Random(SEED + 1)
    for _ in range(40):
        r = rng.randint(1, 3)
        A = rand_matrix(rng, 5, r, zero_rate=0)
        B = rand_matrix(rng, r, 4, zero_rate=0)
        assert rank_exact(A * B) == naive_rank(A * B) <= r


def test_rank_transpose_invariant():
    rng = random.Random(SEED + 2)
    for _ in range(30):
        M = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        assert rank_exact(M) == rank_exact(M.T)


# -------------------------------------------------------------- membership

@pytest.mark.parametrize("n", range(2, 9))
def test_standard_point_is_member(n):
    for k in range(1, n):
        X = diag_pm(k, n)
        assert affine_member(X, k)
        assert projective_member(ProjPoint(X, 1), k)
        assert not affine_member(X, k - 1 if k > 1 else k + 1)


def test_identity_fails_trace():
    assert not affine_member(GRMatrix.identity(4), 2)


def test_householder_reflection():
    v = [Fraction(1), Fraction(2), Fraction(2)]
    vv = sum(x * x for x in v)
    X = GRMatrix.from_rows([[(1 if r == c else 0) - 2 * v[r] * v[c] / vv for c in range(3)] for r in range(3)])
    assert affine_member(X, 2)
    assert projective_member(ProjPoint(X, 1), 2)


def test_non_symmetric_rejected():
    with pytest.raises(ValueError):
        affine_member(GRMatrix.from_rows([[1, 1], [0, -1]]), 1)
    with pytest.raises(ValueError):
        ProjPoint(GRMatrix.from_rows([[1, 2]]), 1)


def test_zero_point_rejected():
    with pytest.raises(ValueError):
        ProjPoint(GRMatrix.zeros(3), 0)


def test_projective_equality_is_scaling_invariant():
    X = diag_pm(1, 3)
    assert ProjPoint(X, 1) == ProjPoint(X * G(2, 3), G(2, 3))
    assert ProjPoint(X, 1) != ProjPoint(X, -1)
    assert ProjPoint(X, 1) != ProjPoint(diag_pm(1, 4), 1)


def test_boundary_points():
    S = boundary_generator(2, 1)
    assert S == GRMatrix.from_rows([["1/2*i", "1/2"], ["1/2", "-1/2*i"]])
    assert projective_member(ProjPoint(S.direct_sum(GRMatrix.zeros(3)), 0), 1)
    assert not projective_member(ProjPoint(GRMatrix.identity(4), 0), 2)


@pytest.mark.parametrize("n,d,rank", [(2, 1, 1), (4, 2, 2), (5, 1, 1), (7, 3, 3)])
def test_boundary_generator_shape(n, d, rank):
    X = boundary_generator(n, d)
    assert (X.rows, X.cols) == (n, n)
    assert X.is_symmetric()
    assert (X * X).is_zero()
    assert X.trace() == 0
    assert rank_exact(X) == rank


def test_boundary_generator_range():
    for n, d in [(4, 0), (4, 3), (1, 1)]:
        with pytest.raises(ValueError):
            boundary_generator(n, d)


@pytest.mark.parametrize("n", range(2, 9))
def test_boundary_stratum_membership_follows_rank(n):
    for d in range(1, n // 2 + 1):
        pt = ProjPoint(boundary_generator(n, d), 0)
        for k in range(1, n):
            assert projective_member(pt, k) == (d <= min(k, n - k))


def test_signed_permutation_invariance():
    rng = random.Random(SEED + 3)
    for _ in range(40):
        n = rng.randint(2, 7)
        d = rng.randint(1, n // 2)
        k = rng.randint(1, n - 1)
        Q = signed_permutation(rng, n)
        X = boundary_generator(n, d)
        Y = Q * X * Q.T
        assert Y.is_symmetric()
        assert projective_member(ProjPoint(Y, 0), k) == projective_member(ProjPoint(X, 0), k)
        Z = Q * diag_pm(k, n) * Q.T
        assert affine_member(Z, k)


def random_symmetric(rng, n):
    rows = [[G(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rand_gaussian(rng, real=rng.random() < 0.5)
    return GRMatrix.from_rows(rows)


def test_random_symmetric_are_not_involutions():
    rng = random.Random(SEED + 4)
    for _ in range(100):
        n = rng.randint(1, 8)
        X = random_symmetric(rng, n)
        if X * X == GRMatrix.identity(n):
            continue
        for k in range(0, n + 1):
            assert not affine_member(X, k)


def test_affine_implies_projective_on_conjugates():
    # rational orthogonal conjugates of diag(I_k, -I_(n-k)) via Householder reflections
    rng = random.Random(SEED + 5)
    for _ in range(25):
        n = rng.randint(2, 6)
        k = rng.randint(1, n - 1)
        v = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
        if not any(v):
            continue
        vv = sum(x * x for x in v)
        H = GRMatrix.from_rows([[(1 if r == c else 0) - 2 * v[r] * v[c] / vv for c in range(n)] for r in range(n)])
        X = H * diag_pm(k, n) * H
        assert affine_member(X, k)
        for t in (G(1), G(3, -2)):
            assert projective_member(ProjPoint(X * t, t), k)


# ------------------------------------------------------------------ orbits

@pytest.mark.parametrize("n", range(2, 9))
def test_orbit_dimension(n):
    for d in range(1, n // 2 + 1):
        assert orbit_dimension(n, d) == d * (n - d)


@pytest.mark.parametrize("n,d,dim", [(2, 1, 1), (4, 2, 4), (7, 3, 12)])
def test_orbit_dimension_examples(n, d, dim):
    assert orbit_dimension(n, d) == dim


# --------------------------------------------------------- canonical blocks

def test_canonical_blocks_small():
    J, N, S = canonical_blocks(2)
    assert S == boundary_generator(2, 1)
    _, N1, S1 = canonical_blocks(1)
    assert S1.is_zero() and N1.is_zero()


@pytest.mark.parametrize("q", range(1, 7))
def test_canonical_block_nilpotency_index(q):
    J, N, S = canonical_blocks(q)
    assert J * J == GRMatrix.identity(q)
    assert S.is_symmetric()
    power = GRMatrix.identity(q)
    for _ in range(q - 1):
        power = power * S
        assert not power.is_zero()
    assert (power * S).is_zero()


# --------------------------------------------------------- epsilon family

@pytest.mark.parametrize("n,k,d,eps", [(5, 2, 1, 1), (4, 2, 2, Fraction(1, 3)), (6, 3, 3, 2)])
def test_epsilon_examples(n, k, d, eps):
    report = epsilon_family_check(n, k, d, eps)
    assert report
    assert report.failed == []
    assert "C_eps^2 = I" in report.identities and "D_eps^2 = I" in report.identities


def test_epsilon_preconditions():
    for args in [(5, 3, 1, 1), (5, 2, 3, 1), (5, 2, 0, 1), (5, 2, 1, 0), (5, 2, 1, -1)]:
        with pytest.raises(ValueError):
            epsilon_family_check(*args)


def test_epsilon_at_one_is_exact_in_gaussian_rationals():
    # at eps = 1, s = 1 + i; evaluate T_1 numerically-free and check its square
    s = G(1, 1)
    assert s * s == G(0, 2)
    T = GRMatrix.from_rows([[G(Fraction(1, 2)), s * Fraction(1, 2)], [s * Fraction(1, 2), G(Fraction(-1, 2))]])
    assert T * T == GRMatrix.identity(2) * G(Fraction(1, 4), Fraction(1, 2))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(
    st.just(n),
    st.integers(1, n // 2).flatmap(lambda k: st.tuples(st.just(k), st.integers(1, k))),
    st.builds(Fraction, st.integers(1, 50), st.integers(1, 50)),
)))
def test_epsilon_identities_hold(args):
    n, (k, d), eps = args
    assert epsilon_family_check(n, k, d, eps)


@pytest.mark.parametrize("n,k,d", [(5, 2, 1), (4, 2, 2), (6, 3, 1), (8, 4, 2), (7, 3, 3)])
def test_degeneration_float(n, k, d):
    errs = [degeneration_error(n, k, d, eps) for eps in (1e-1, 1e-2, 1e-3)]
    assert errs[0] > errs[1] > errs[2]
    for eps, err in zip((1e-1, 1e-2, 1e-3), errs):
        assert err <= 2 * eps**0.5


@pytest.mark.parametrize("n,k,d", [(5, 2, 1), (6, 3, 2), (4, 2, 2)])
def test_degeneration_point_lies_on_the_cone(n, k, d):
    for eps in (1e-1, 1e-2, 1.0):
        X, t = degeneration_point(n, k, d, eps)
        assert np.allclose(X, X.T)
        assert np.allclose(X @ X, t * t * np.eye(n))
        assert np.isclose(np.trace(X), (2 * k - n) * t)
        assert np.linalg.matrix_rank(X + t * np.eye(n), tol=1e-9) <= k
        assert np.linalg.matrix_rank(X - t * np.eye(n), tol=1e-9) <= n - k
