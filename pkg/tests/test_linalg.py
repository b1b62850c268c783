import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polysolve.errors import (DimensionMismatch, NotUnitTriangular,
                              SingularMatrix)
from polysolve.field import PrimeField
from polysolve.linalg import (KrylovStats, MatMulConfig, Matrix,
                              binary_power_table, block_echelon,
                              krylov_columns, mat_mul)


def _random_matrix(field, r, c, rng):
    return Matrix.from_rows(field, [[rng.randrange(field.p) for _ in range(c)]
                                    for _ in range(r)])


def _naive_mul(a: Matrix, b: Matrix) -> Matrix:
    p = a.field.p
    out = [[sum(a[i, k] * b[k, j] for k in range(a.ncols)) % p
            for j in range(b.ncols)] for i in range(a.nrows)]
    return Matrix.from_rows(a.field, out)


def test_matrix_construction_and_access(f7):
    m = Matrix.from_rows(f7, [[1, 9], [-1, 3]])
    assert m.tolist() == [[1, 2], [6, 3]]  # entries normalized mod 7
    assert m[1, 0] == 6
    assert list(m.row(0)) == [1, 2]
    assert list(m.column(1)) == [2, 3]
    assert m.shape == (2, 2)
    assert Matrix.identity(f7, 3).tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert Matrix.zeros(f7, 2, 3).tolist() == [[0, 0, 0], [0, 0, 0]]


def test_matrix_ring_ops(f7):
    a = Matrix.from_rows(f7, [[1, 2], [3, 4]])
    b = Matrix.from_rows(f7, [[5, 6], [0, 1]])
    assert (a + b).tolist() == [[6, 1], [3, 5]]
    assert (a - b).tolist() == [[3, 3], [3, 3]]
    assert (-a).tolist() == [[6, 5], [4, 3]]
    assert a.scale(3).tolist() == [[3, 6], [2, 5]]
    assert a.transpose().tolist() == [[1, 3], [2, 4]]
    assert mat_mul(a, b).tolist() == [[5, 1], [1, 1]]


def test_mat_mul_matches_naive_random():
    rng = random.Random(3)
    for p in (7, 101, 65521):
        field = PrimeField(p)
        for _ in range(5):
            r, k, c = rng.randrange(1, 9), rng.randrange(1, 9), rng.randrange(1, 9)
            a = _random_matrix(field, r, k, rng)
            b = _random_matrix(field, k, c, rng)
            assert mat_mul(a, b) == _naive_mul(a, b)


def test_strassen_matches_classical():
    rng = random.Random(5)
    field = PrimeField(65521)
    cfg = MatMulConfig(use_strassen=True, strassen_threshold=8)
    for size in (9, 16, 33):
        a = _random_matrix(field, size, size, rng)
        b = _random_matrix(field, size, size, rng)
        assert mat_mul(a, b, cfg) == mat_mul(a, b)


def test_mat_mul_shape_check(f7):
    a = Matrix.zeros(f7, 2, 3)
    with pytest.raises(DimensionMismatch):
        mat_mul(a, a)


def test_apply(f7):
    m = Matrix.from_rows(f7, [[1, 2], [3, 4]])
    assert list(m.apply([1, 1])) == [3, 0]
    assert list(m.apply(np.array([0, 2]))) == [4, 1]


def test_rref_and_rank(f7):
    m = Matrix.from_rows(f7, [[2, 4, 6], [1, 2, 3], [0, 1, 1]])
    r = m.rref()
    assert r.tolist() == [[1, 0, 1], [0, 1, 1], [0, 0, 0]]
    assert m.rank() == 2
    assert r.rref() == r  # idempotent
    assert Matrix.identity(f7, 4).rank() == 4
    assert Matrix.zeros(f7, 3, 3).rank() == 0


def test_inverse(f101):
    rng = random.Random(11)
    m = f101.random_nonsingular_matrix(5, rng)
    assert mat_mul(m, m.inverse()) == Matrix.identity(f101, 5)
    assert mat_mul(m.inverse(), m) == Matrix.identity(f101, 5)
    singular = Matrix.from_rows(f101, [[1, 2], [2, 4]])
    with pytest.raises(SingularMatrix):
        singular.inverse()


def test_density(f7):
    m = Matrix.from_rows(f7, [[0, 1], [0, 0]])
    assert m.density() == 0.25
    assert Matrix.zeros(f7, 2, 2).density() == 0.0


def test_binary_power_table(f7):
    t = Matrix.from_rows(f7, [[2]])
    table = binary_power_table(t, 2)
    assert [m.tolist() for m in table] == [[[2]], [[4]], [[2]]]  # 2, 4, 16 mod 7
    rng = random.Random(2)
    m = _random_matrix(PrimeField(101), 4, 4, rng)
    table = binary_power_table(m, 3)
    assert len(table) == 4
    assert table[2] == mat_mul(table[1], table[1])
    assert table[3] == mat_mul(table[2], table[2])


def test_block_echelon_solves_the_block_identity():
    # new rows [T | B | C] reduced against prior rows [0 | Id | D]:
    # the returned X satisfies T X = C - B D.
    rng = random.Random(9)
    field = PrimeField(101)
    for s, m, w in ((3, 2, 4), (5, 5, 2), (70, 3, 5)):
        t = np.triu(np.array([[rng.randrange(101) for _ in range(s)] for _ in range(s)],
                             dtype=np.int64), 1)
        np.fill_diagonal(t, 1)
        tm = Matrix(field, t)
        b = _random_matrix(field, s, m, rng)
        c = _random_matrix(field, s, w, rng)
        d = _random_matrix(field, m, w, rng)
        x = block_echelon(tm, b, c, d)
        assert mat_mul(tm, x) == (c - mat_mul(b, d))


def test_block_echelon_rejects_bad_pivot_block(f7):
    bad = Matrix.from_rows(f7, [[1, 0], [1, 1]])  # lower entry nonzero
    eye = Matrix.identity(f7, 2)
    with pytest.raises(NotUnitTriangular):
        block_echelon(bad, eye, eye, eye)
    with pytest.raises(NotUnitTriangular):
        block_echelon(Matrix.zeros(f7, 2, 3), eye, eye, eye)


def _naive_krylov(t: Matrix, r, width: int) -> Matrix:
    p = t.field.p
    cols = [np.asarray(r, dtype=np.int64) % p]
    for _ in range(2 * width - 1):
        cols.append(t.a @ cols[-1] % p)
    return Matrix(t.field, np.stack(cols, axis=1))


def test_krylov_matches_naive_and_counts_products():
    rng = random.Random(4)
    field = PrimeField(65521)
    for dim in (2, 3, 5, 8, 16, 64):
        t = _random_matrix(field, dim, dim, rng)
        r = field.random_vector(dim, rng)
        stats = KrylovStats()
        fast = krylov_columns(t, r, dim, stats=stats)
        assert fast == _naive_krylov(t, r, dim)
        k = max(1, math.ceil(math.log2(2 * dim)))
        assert stats.square_mults == k
        assert stats.rect_mults == k


def test_krylov_rejects_non_square(f7):
    with pytest.raises(DimensionMismatch):
        krylov_columns(Matrix.zeros(f7, 2, 3), [1, 1], 2)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=2 ** 30))
def test_krylov_columns_are_iterated_images(dim, seed):
    rng = random.Random(seed)
    field = PrimeField(101)
    t = _random_matrix(field, dim, dim, rng)
    r = field.random_vector(dim, rng)
    k = krylov_columns(t, r, dim)
    assert k.ncols == 2 * dim
    for j in range(1, k.ncols):
        assert list(k.column(j)) == list(t.apply(k.column(j - 1)))
