"""Change of ordering by linear recurrences.

Given the multiplication matrix of the last variable on a D-dimensional
quotient, a random linear form r yields the scalar sequence
S_j = r(x_n^j mod I).  Its minimal linear recurrence is the minimal
polynomial h_n of x_n; when deg h_n = D the ideal is in shape position and
every other variable satisfies x_i = h_i(x_n) with h_i recovered from one
Hankel system (or, for variables that are themselves leading terms of the
input basis, by a linear recombination of already-known parametrizations).

The whole transcript of S and of the right-hand sides is read off a single
Krylov matrix built with O(log D) matrix products; no further products of
full matrices are needed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import ChangeOrderingFailed
from .field import PrimeField
from .gb import GroebnerBasis
from .linalg import KrylovStats, Matrix, MatMulConfig, OpCounter, krylov_columns
from .poly import Monomial, Polynomial
from .quotient import QuotientStructure
from .recur import berlekamp_massey, hankel_solve


def _trim(coeffs: list[int]) -> list[int]:
    """Drop trailing zeros: canonical ascending coefficient list."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ascending-coefficient a modulo monic ascending m."""
    r = [c % p for c in a]
    d = len(m) - 1
    while len(r) > d:
        lead = r.pop()
        if lead:
            for k in range(d):
                r[len(r) - d + k] = (r[len(r) - d + k] - lead * m[k]) % p
    return r


@dataclass
class UnivariateRep:
    """Shape-position description of a zero-dimensional ideal.

    ``coeffs[i]`` (i < n-1) is the ascending coefficient list of h_i, the
    parametrization x_{i+1} = h_i(x_n); ``coeffs[n-1]`` is the monic minimal
    polynomial h_n of the last variable, of degree D.  All lists are
    canonical (no trailing zeros).
    """

    field: PrimeField
    n: int
    coeffs: list[list[int]]

    def __post_init__(self):
        self.coeffs = [_trim(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        return len(self.coeffs[-1]) - 1

    def polynomials(self) -> list[Polynomial]:
        """The shape system {x_1 - h_1, ..., x_{n-1} - h_{n-1}, h_n}."""
        last = self.n - 1
        out = []
        for i in range(last):
            h = Polynomial.univariate(self.field, self.n, last, self.coeffs[i])
            out.append(Polynomial.variable(self.field, self.n, i) - h)
        out.append(Polynomial.univariate(self.field, self.n, last, self.coeffs[last]))
        return out

    def point_for_root(self, z: int) -> tuple[int, ...]:
        """The solution (h_1(z), ..., h_{n-1}(z), z) attached to a root z of h_n."""
        p = self.field.p
        vals = []
        for i in range(self.n - 1):
            acc = 0
            for c in reversed(self.coeffs[i]):
                acc = (acc * z + c) % p
            vals.append(acc)
        vals.append(z % p)
        return tuple(vals)


@dataclass
class ChangeOrderStats:
    krylov: KrylovStats = dc_field(default_factory=KrylovStats)
    extract_ops: OpCounter = dc_field(default_factory=OpCounter)
    bm_degree: int = 0
    hankel_solves: int = 0
    hankel_method: str = "dense"


def change_ordering(tn: Matrix, gb: GroebnerBasis, quotient: QuotientStructure,
                    rng, hankel_method: str = "auto",
                    config: MatMulConfig | None = None) -> tuple[UnivariateRep, ChangeOrderStats]:
    """Shape-position representation from the last multiplication matrix.

    Raises ChangeOrderingFailed when the minimal recurrence of the random
    sequence has degree < D; callers retry with a new random form and, if
    that keeps failing, conclude the ideal is not in shape position for
    this coordinate choice.
    """
    if hasattr(tn, "matrix"):  # accept the annotated wrapper or a bare Matrix
        tn = tn.matrix
    fld = quotient.field
    p = fld.p
    n = quotient.n
    D = quotient.dimension
    stats = ChangeOrderStats()
    stats.hankel_method = ("levinson" if hankel_method == "levinson"
                           or (hankel_method == "auto" and D >= 64) else "dense")
    r = fld.random_vector(D, rng)
    # One Krylov sweep gives every projection the rest of the algorithm
    # reads: row psi(1) is S itself, row psi(x_i) is the Hankel right-hand
    # side for x_i.  Row extraction costs no field operations.
    K = krylov_columns(tn.transpose(), r, D, config, stats.krylov)
    S = [int(v) for v in K.a[quotient.psi(Monomial.one(n))]]
    mu = berlekamp_massey(S, fld)
    stats.bm_degree = len(mu) - 1
    if stats.bm_degree < D:
        raise ChangeOrderingFailed(stats.bm_degree, D)

    coeffs: list[list[int] | None] = [None] * n
    coeffs[n - 1] = mu
    seq = S[: 2 * D - 1]
    lm_to_poly = dict(zip(gb.leading_monomials, gb.polys))
    deferred = []
    for i in range(n - 1):
        xi = Monomial.variable(n, i)
        if xi in quotient.index:
            b = [int(v) for v in K.a[quotient.psi(xi), :D]]
            coeffs[i] = _trim(hankel_solve(seq, b, fld, method=hankel_method))
            stats.hankel_solves += 1
        else:
            deferred.append(i)
    # Variables that are themselves leading terms: the basis contains
    # x_i + (linear tail in standard monomials), so h_i is minus the tail
    # with every standard variable replaced by its parametrization.
    for i in deferred:
        xi = Monomial.variable(n, i)
        g = lm_to_poly[xi]
        total = [0] * D
        for m, cval in g.terms.items():
            if m == xi:
                continue
            if m.is_one():
                total[0] = (total[0] - cval) % p
                continue
            j = m.support()[0]
            part = _poly_mod([0, 1], mu, p) if j == n - 1 else coeffs[j]
            for k, a in enumerate(part):
                total[k] = (total[k] - cval * a) % p
        coeffs[i] = _trim(total)
    return UnivariateRep(fld, n, coeffs), stats


# -- verification against the original system ------------------------------


@dataclass
class VerifyResult:
    ok: bool
    points_checked: int

    def __bool__(self) -> bool:
        return self.ok


def _horner_vec(coeffs: list[int], xs: np.ndarray, p: int) -> np.ndarray:
    acc = np.zeros_like(xs)
    for c in reversed(coeffs):
        acc = (acc * xs + c) % p
    return acc


def _powmod_vec(base: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(base)
    b = base % p
    while e:
        if e & 1:
            out = out * b % p
        b = b * b % p
        e >>= 1
    return out


def verify_rep(rep: UnivariateRep, system: list[Polynomial],
               sample_budget: int = 1 << 20, rng=None) -> VerifyResult:
    """Check that every root of h_n in the base field maps to a common zero
    of the given system.

    For moduli up to ``sample_budget`` the whole field is scanned, so every
    rational root is certified.  For larger fields ``sample_budget`` random
    points are screened instead; only the roots found among them are
    certified (possibly none — the result is then vacuously true, with
    ``points_checked`` saying how many were certified)."""
    p = rep.field.p
    if p <= sample_budget:
        xs = np.arange(p, dtype=np.int64)
    else:
        if rng is None:
            rng = random.Random(0)
        xs = np.fromiter((rng.randrange(p) for _ in range(sample_budget)),
                         dtype=np.int64, count=sample_budget)
    roots = np.unique(xs[_horner_vec(rep.coeffs[-1], xs, p) == 0])
    if roots.size == 0:
        return VerifyResult(True, 0)
    coords = np.empty((rep.n, roots.size), dtype=np.int64)
    for i in range(rep.n - 1):
        coords[i] = _horner_vec(rep.coeffs[i], roots, p)
    coords[rep.n - 1] = roots
    for f in system:
        acc = np.zeros(roots.size, dtype=np.int64)
        for mono, c in f.terms.items():
            term = np.full(roots.size, c, dtype=np.int64)
            for i, e in enumerate(mono.exps):
                if e:
                    term = term * _powmod_vec(coords[i], e, p) % p
            acc = (acc + term) % p
        if np.any(acc):
            return VerifyResult(False, int(roots.size))
    return VerifyResult(True, int(roots.size))
