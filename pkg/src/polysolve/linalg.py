"""Dense exact linear algebra over a prime field.

Matrices hold canonical residues in C-contiguous int64 numpy arrays.  All
paths are exact: the float64 BLAS fast path for multiplication is only taken
when ``inner_dim * (p-1)^2 < 2^53``, in which case every product and partial
sum is exactly representable; otherwise an int64 path (chunked if even that
could overflow) is used.  Strassen multiplication exists behind a config
switch and is bit-for-bit equal to the classical product.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotUnitTriangular, SingularMatrix
from .field import PrimeField

_FLOAT_EXACT = 1 << 53
_INT64_SAFE = (1 << 63) - 1


@dataclass
class MatMulConfig:
    """Multiplication strategy knobs.  Strassen is off by default; when on it
    kicks in once every dimension exceeds the threshold."""

    use_strassen: bool = False
    strassen_threshold: int = 64


DEFAULT_MATMUL = MatMulConfig()


@dataclass
class KrylovStats:
    """Operation counts for the doubling Krylov construction."""

    square_mults: int = 0
    rect_mults: int = 0


@dataclass
class OpCounter:
    """Explicit field-operation instrumentation for paths whose claim is
    that they do no arithmetic at all (copies and sign flips only)."""

    muls: int = 0
    adds: int = 0

    def is_zero(self) -> bool:
        return self.muls == 0 and self.adds == 0


def _as_array(rows) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d array, got shape {a.shape}")
    return a


def _mul_arrays(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact (a @ b) mod p for canonical int64 inputs."""
    k = a.shape[1]
    if k == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    worst = k * (p - 1) * (p - 1)
    if worst < _FLOAT_EXACT:
        prod = a.astype(np.float64) @ b.astype(np.float64)
        return prod.astype(np.int64) % p
    if worst <= _INT64_SAFE:
        return (a @ b) % p
    # chunk the inner dimension so partial int64 sums cannot overflow
    step = max(1, _INT64_SAFE // ((p - 1) * (p - 1)))
    acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i in range(0, k, step):
        acc = (acc + a[:, i:i + step] @ b[i:i + step, :]) % p
    return acc


def _strassen(a: np.ndarray, b: np.ndarray, p: int, threshold: int) -> np.ndarray:
    m, k = a.shape
    n = b.shape[1]
    if min(m, k, n) <= threshold:
        return _mul_arrays(a, b, p)
    mm, kk, nn = m + (m & 1), k + (k & 1), n + (n & 1)
    if (mm, kk, nn) != (m, k, n):
        ap = np.zeros((mm, kk), dtype=np.int64)
        bp = np.zeros((kk, nn), dtype=np.int64)
        ap[:m, :k] = a
        bp[:k, :n] = b
        return _strassen(ap, bp, p, threshold)[:m, :n]
    h, hk, hn = m // 2, k // 2, n // 2
    a11, a12, a21, a22 = a[:h, :hk], a[:h, hk:], a[h:, :hk], a[h:, hk:]
    b11, b12, b21, b22 = b[:hk, :hn], b[:hk, hn:], b[hk:, :hn], b[hk:, hn:]

    def add(x, y):
        return (x + y) % p

    def sub(x, y):
        return (x - y) % p

    m1 = _strassen(add(a11, a22), add(b11, b22), p, threshold)
    m2 = _strassen(add(a21, a22), b11, p, threshold)
    m3 = _strassen(a11, sub(b12, b22), p, threshold)
    m4 = _strassen(a22, sub(b21, b11), p, threshold)
    m5 = _strassen(add(a11, a12), b22, p, threshold)
    m6 = _strassen(sub(a21, a11), add(b11, b12), p, threshold)
    m7 = _strassen(sub(a12, a22), add(b21, b22), p, threshold)
    c = np.empty((m, n), dtype=np.int64)
    c[:h, :hn] = (m1 + m4 - m5 + m7) % p
    c[:h, hn:] = (m3 + m5) % p
    c[h:, :hn] = (m2 + m4) % p
    c[h:, hn:] = (m1 - m2 + m3 + m6) % p
    return c


def _rref_arrays(a: np.ndarray, p: int):
    """In-place reduced row echelon form; returns the pivot column list."""
    rows, cols = a.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return pivots


class Matrix:
    """An exact matrix over F_p."""

    __slots__ = ("field", "a")

    def __init__(self, field: PrimeField, array: np.ndarray):
        self.field = field
        self.a = array

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, field: PrimeField, rows) -> "Matrix":
        return cls(field, _as_array(rows) % field.p)

    @classmethod
    def zeros(cls, field: PrimeField, r: int, c: int) -> "Matrix":
        return cls(field, np.zeros((r, c), dtype=np.int64))

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int64))

    # -- shape / access ----------------------------------------------------

    @property
    def nrows(self) -> int:
        return self.a.shape[0]

    @property
    def ncols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    def __getitem__(self, idx) -> int:
        return int(self.a[idx])

    def row(self, i: int) -> np.ndarray:
        return self.a[i].copy()

    def column(self, j: int) -> np.ndarray:
        return self.a[:, j].copy()

    def tolist(self):
        return self.a.tolist()

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.a.copy())

    # -- arithmetic --------------------------------------------------------

    def _check_same_field(self, other: "Matrix"):
        if self.field.p != other.field.p:
            raise DimensionMismatch("matrices over different fields")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.field, (self.a + other.a) % self.field.p)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(self.field, (self.a - other.a) % self.field.p)

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, (-self.a) % self.field.p)

    def scale(self, c: int) -> "Matrix":
        return Matrix(self.field, self.a * (c % self.field.p) % self.field.p)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, np.ascontiguousarray(self.a.T))

    def apply(self, v) -> np.ndarray:
        """Matrix-vector product, returning a canonical int64 vector."""
        vec = np.asarray(v, dtype=np.int64).reshape(-1, 1)
        if vec.shape[0] != self.ncols:
            raise DimensionMismatch(f"vector of length {vec.shape[0]} against {self.shape}")
        return _mul_arrays(self.a, vec, self.field.p).ravel()

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.field.p == self.field.p
            and self.shape == other.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __hash__(self):
        return hash((self.field.p, self.a.tobytes()))

    def __repr__(self):
        return f"Matrix(p={self.field.p}, {self.a.tolist()})"

    # -- elimination -------------------------------------------------------

    def rref(self) -> "Matrix":
        work = self.a % self.field.p
        work = work.copy()
        _rref_arrays(work, self.field.p)
        return Matrix(self.field, work)

    def rank(self) -> int:
        work = self.a % self.field.p
        work = work.copy()
        return len(_rref_arrays(work, self.field.p))

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise DimensionMismatch("inverse of a non-square matrix")
        aug = np.hstack([self.a % self.field.p, np.eye(n, dtype=np.int64)])
        pivots = _rref_arrays(aug, self.field.p)
        if pivots != list(range(n)):
            raise SingularMatrix("matrix is singular")
        return Matrix(self.field, np.ascontiguousarray(aug[:, n:]))

    def density(self) -> float:
        """Fraction of nonzero entries."""
        total = self.a.size
        return float(np.count_nonzero(self.a)) / total if total else 0.0


def mat_mul(a: Matrix, b: Matrix, config: MatMulConfig | None = None) -> Matrix:
    a._check_same_field(b)
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    cfg = config or DEFAULT_MATMUL
    if cfg.use_strassen and min(a.nrows, a.ncols, b.ncols) > cfg.strassen_threshold:
        out = _strassen(a.a, b.a, a.field.p, cfg.strassen_threshold)
    else:
        out = _mul_arrays(a.a, b.a, a.field.p)
    return Matrix(a.field, out)


def binary_power_table(t: Matrix, k: int) -> list[Matrix]:
    """[T, T^2, T^4, ..., T^(2^k)] by k repeated squarings."""
    if t.nrows != t.ncols:
        raise DimensionMismatch("powers of a non-square matrix")
    table = [t]
    for _ in range(k):
        table.append(mat_mul(table[-1], table[-1]))
    return table


def _unit_ut_solve(t: np.ndarray, rhs: np.ndarray, p: int) -> np.ndarray:
    """Solve T X = R for unit upper-triangular T, blocked so the work is
    matmul-dominated."""
    s = t.shape[0]
    if s <= 64:
        x = rhs % p
        for i in range(s - 2, -1, -1):
            row = t[i, i + 1:]
            x[i] = (x[i] - _mul_arrays(row[None, :], x[i + 1:], p)[0]) % p
        return x
    h = s // 2
    x2 = _unit_ut_solve(t[h:, h:], rhs[h:], p)
    r1 = (rhs[:h] - _mul_arrays(t[:h, h:], x2, p)) % p
    x1 = _unit_ut_solve(t[:h, :h], r1, p)
    return np.vstack([x1, x2])


def block_echelon(t: Matrix, b: Matrix, c: Matrix, d: Matrix,
                  config: MatMulConfig | None = None) -> Matrix:
    """Reduced rows of a block [T | B | C] against prior rows [0 | Id | D].

    T must be unit upper triangular.  The returned block is
    T^(-1) (C - B D), i.e. the trailing columns of the new rows once the
    combined matrix is brought to reduced row echelon form.
    """
    p = t.field.p
    ta = t.a
    if ta.shape[0] != ta.shape[1]:
        raise NotUnitTriangular("pivot block is not square")
    if not (np.all(np.diagonal(ta) == 1) and np.all(np.tril(ta, -1) == 0)):
        raise NotUnitTriangular("pivot block is not unit upper triangular")
    if b.ncols != d.nrows or t.nrows != b.nrows or c.nrows != t.nrows or c.ncols != d.ncols:
        raise DimensionMismatch("inconsistent block shapes")
    rhs = (c.a - mat_mul(b, d, config).a) % p
    return Matrix(t.field, _unit_ut_solve(ta, rhs, p))


def krylov_columns(t: Matrix, r, width: int, config: MatMulConfig | None = None,
                   stats: KrylovStats | None = None) -> Matrix:
    """Columns [r | Tr | T^2 r | ... | T^(2*width-1) r] by doubling.

    Uses the binary power table of T and at each step multiplies the
    already-built block of columns by the next stored power, so the number
    of matrix products is logarithmic in ``width``, not linear.
    """
    if t.nrows != t.ncols:
        raise DimensionMismatch("Krylov iteration needs a square matrix")
    dim = t.nrows
    total = 2 * width
    if total < 1:
        raise DimensionMismatch("need a positive number of columns")
    k = max(1, (total - 1).bit_length())  # ceil(log2(total)) for total >= 2
    table = binary_power_table(t, k)
    if stats is not None:
        stats.square_mults += k
    cols = np.zeros((dim, total), dtype=np.int64)
    cols[:, 0] = np.asarray(r, dtype=np.int64) % t.field.p
    have = 1
    j = 0
    while have < total:
        need = min(1 << j, total - have)
        block = _mul_arrays(table[j].a, cols[:, :need], t.field.p)
        cols[:, have:have + need] = block
        if stats is not None:
            stats.rect_mults += 1
        have += need
        j += 1
    return Matrix(t.field, cols)
