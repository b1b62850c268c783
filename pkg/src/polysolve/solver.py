"""End-to-end pipelines.

``solve_deterministic``: basis in the degree order, multiplication matrix of
the last variable by the degree-by-degree builder, then the recurrence-based
change of ordering (retried with fresh random vectors a few times before
concluding the ideal is not in shape position for these coordinates).

``solve_lasvegas``: draw an invertible change of variables g, compute the
transformed ideal's basis, and insist on reading the last multiplication
matrix for free; restart with a new g whenever reading or the ordering
change fails.  Output is always correct when produced — failure is only
ever reported as ExhaustedRestarts with diagnostics.

Also: the closed-form success-probability lower bound for a random g, and a
brute-force rational-solution oracle used by the cross-checking tests.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .change_order import (ChangeOrderStats, UnivariateRep, _horner_vec,
                           _powmod_vec, change_ordering)
from .errors import (BudgetExceeded, ChangeOrderingFailed, ExhaustedRestarts,
                     NotReadable, NotShapePosition, NotZeroDimensional)
from .field import PrimeField
from .gb import GroebnerBasis, buchberger, groebner_from_matrices, is_zero_dimensional
from .linalg import MatMulConfig, Matrix, OpCounter
from .poly import Polynomial, TermOrder, apply_change_of_variables
from .quotient import (QuotientStructure, build_matrices_echelon, compute_basis,
                       compute_frontier, try_read_Tn)


@dataclass
class SolveConfig:
    max_restarts: int = 8          # fresh g draws in the Las Vegas loop
    r_retries: int = 4             # fresh random vectors per ordering change
    hankel_method: str = "auto"
    gb_matrix_threshold: int = 48  # above this dimension the transformed
    #                                basis is derived from multiplication
    #                                matrices instead of rerunning Buchberger
    root_scan_limit: int = 1 << 20
    matmul: MatMulConfig | None = None


@dataclass
class StageTimes:
    gb: float = 0.0
    matrices: float = 0.0
    change_order: float = 0.0
    total: float = 0.0


@dataclass
class SolveStats:
    n: int
    D: int
    nf_type2_total: int            # normal forms computed while acquiring T_n here
    nf_type2_tn: int               # classical per-T_n normal-form count of this ideal
    tn_density: float
    read_ops: OpCounter
    retries: int                   # fresh random vectors consumed beyond the first
    restarts: int                  # g draws beyond the first (always 0 deterministic)
    times: StageTimes
    chord: ChangeOrderStats | None = None
    prep_nf_total: int = 0         # matrix-route preparation normal forms (Las Vegas)


@dataclass
class SolveReport:
    pipeline: str                  # "deterministic" | "las_vegas"
    g: Matrix | None
    rep: UnivariateRep
    stats: SolveStats
    system: list[Polynomial]
    transformed_system: list[Polynomial] | None = None


def _require_system(F: list[Polynomial]) -> tuple[PrimeField, int]:
    if not F:
        raise ValueError("empty system")
    return F[0].field, F[0].n


def solve_deterministic(F: list[Polynomial], rng=None,
                        config: SolveConfig | None = None) -> SolveReport:
    """Shape-position representation without changing coordinates."""
    cfg = config or SolveConfig()
    rng = rng or random.Random(0)
    fld, n = _require_system(F)
    t0 = time.perf_counter()
    gbd = buchberger(F, TermOrder.drl(n), field=fld)
    t_gb = time.perf_counter() - t0
    if gbd.contains_one():
        raise NotZeroDimensional("the ideal contains 1; the system has no solutions")
    if not is_zero_dimensional(gbd):
        raise NotZeroDimensional("some variable has no pure-power leading term")
    t1 = time.perf_counter()
    Q = compute_basis(gbd)
    frontier = compute_frontier(Q, gbd)
    mats, bstats = build_matrices_echelon(Q, gbd, frontier, variables=[n - 1],
                                          config=cfg.matmul)
    tn = mats[0]
    t_mat = time.perf_counter() - t1

    t2 = time.perf_counter()
    rep = None
    cstats = None
    retries = 0
    last = None
    for _ in range(cfg.r_retries):
        try:
            rep, cstats = change_ordering(tn, gbd, Q, rng,
                                          hankel_method=cfg.hankel_method,
                                          config=cfg.matmul)
            break
        except ChangeOrderingFailed as exc:
            retries += 1
            last = exc
    if rep is None:
        raise NotShapePosition(
            f"minimal recurrence degree stayed at {last.degree} < {last.expected} "
            f"after {cfg.r_retries} random vectors")
    t_chord = time.perf_counter() - t2
    stats = SolveStats(n=n, D=Q.dimension,
                       nf_type2_total=bstats.type2_nf,
                       nf_type2_tn=frontier.type2_for_var(n - 1),
                       tn_density=tn.matrix.density(),
                       read_ops=OpCounter(), retries=retries, restarts=0,
                       times=StageTimes(t_gb, t_mat, t_chord,
                                        time.perf_counter() - t0),
                       chord=cstats)
    return SolveReport("deterministic", None, rep, stats, list(F))


def _transformed_gb_from_matrices(gb0: GroebnerBasis, Q0: QuotientStructure,
                                  mats0: list[np.ndarray], g: Matrix,
                                  cfg: SolveConfig) -> GroebnerBasis:
    """Reduced basis of the transformed ideal without a second Buchberger run.

    Under the substitution X -> g X the quotient rings are isomorphic, and
    multiplication by x_j on the transformed side acts on the original
    coordinates as sum_k (g^-1)[j,k] T_k.  Enumerating monomials against
    those matrices reproduces the transformed ideal's reduced basis exactly.
    """
    fld = gb0.field
    p = fld.p
    n = gb0.n
    ginv = g.inverse().a
    mats = []
    for j in range(n):
        acc = np.zeros_like(mats0[0])
        for k in range(n):
            c = int(ginv[j, k])
            if c:
                acc = (acc + c * mats0[k] % p) % p
        mats.append(Matrix(fld, acc))
    return groebner_from_matrices(mats, fld, n, TermOrder.drl(n))


def solve_lasvegas(F: list[Polynomial], rng=None, max_restarts: int | None = None,
                   config: SolveConfig | None = None,
                   first_transform: Matrix | None = None) -> SolveReport:
    """Random change of variables until the last multiplication matrix can
    be read for free; the returned representation describes the transformed
    system, with ``g`` attached (original solutions are {g v})."""
    cfg = config or SolveConfig()
    if max_restarts is not None:
        cfg = SolveConfig(max_restarts=max_restarts, r_retries=cfg.r_retries,
                          hankel_method=cfg.hankel_method,
                          gb_matrix_threshold=cfg.gb_matrix_threshold,
                          root_scan_limit=cfg.root_scan_limit, matmul=cfg.matmul)
    rng = rng or random.Random(0)
    fld, n = _require_system(F)
    t0 = time.perf_counter()
    times = StageTimes()

    gb0 = buchberger(F, TermOrder.drl(n), field=fld)
    if gb0.contains_one():
        raise NotZeroDimensional("the ideal contains 1; the system has no solutions")
    if not is_zero_dimensional(gb0):
        raise NotZeroDimensional("some variable has no pure-power leading term")
    Q0 = compute_basis(gb0)
    D = Q0.dimension
    prep_nf = 0
    mats0 = None
    if D > cfg.gb_matrix_threshold:
        mats_full, bstats0 = build_matrices_echelon(Q0, gb0, config=cfg.matmul)
        mats0 = [m.matrix.a for m in mats_full]
        prep_nf = bstats0.type2_nf
    times.gb += time.perf_counter() - t0

    read_failures = 0
    chord_failures = 0
    retries = 0
    for attempt in range(cfg.max_restarts):
        g = first_transform if (attempt == 0 and first_transform is not None) \
            else fld.random_nonsingular_matrix(n, rng)
        t1 = time.perf_counter()
        if mats0 is not None:
            gbT = _transformed_gb_from_matrices(gb0, Q0, mats0, g, cfg)
        else:
            FT = [apply_change_of_variables(f, g) for f in F]
            gbT = buchberger(FT, TermOrder.drl(n), field=fld)
        QT = compute_basis(gbT)
        times.gb += time.perf_counter() - t1

        t2 = time.perf_counter()
        counter = OpCounter()
        try:
            tn = try_read_Tn(QT, gbT, counter)
        except NotReadable:
            read_failures += 1
            times.matrices += time.perf_counter() - t2
            continue
        times.matrices += time.perf_counter() - t2

        t3 = time.perf_counter()
        rep = None
        cstats = None
        for _ in range(cfg.r_retries):
            try:
                rep, cstats = change_ordering(tn, gbT, QT, rng,
                                              hankel_method=cfg.hankel_method,
                                              config=cfg.matmul)
                break
            except ChangeOrderingFailed:
                retries += 1
        times.change_order += time.perf_counter() - t3
        if rep is None:
            chord_failures += 1
            continue

        times.total = time.perf_counter() - t0
        stats = SolveStats(n=n, D=D, nf_type2_total=0,
                           nf_type2_tn=0,
                           tn_density=tn.matrix.density(),
                           read_ops=counter, retries=retries, restarts=attempt,
                           times=times, chord=cstats, prep_nf_total=prep_nf)
        FT = [apply_change_of_variables(f, g) for f in F]
        return SolveReport("las_vegas", g, rep, stats, list(F), FT)
    raise ExhaustedRestarts(cfg.max_restarts, read_failures, chord_failures)


# -- solution recovery ------------------------------------------------------


def rational_solutions(report: SolveReport, limit: int = 1 << 20) -> list[tuple[int, ...]]:
    """All F_p-rational solutions of the ORIGINAL system, recovered from the
    representation by scanning for roots of h_n (transformed points are
    mapped back through g).  Refuses fields larger than ``limit``."""
    rep = report.rep
    p = rep.field.p
    if p > limit:
        raise BudgetExceeded(f"root scan over {p} points exceeds limit {limit}")
    xs = np.arange(p, dtype=np.int64)
    roots = xs[_horner_vec(rep.coeffs[-1], xs, p) == 0]
    pts = []
    for z in roots.tolist():
        v = rep.point_for_root(z)
        if report.g is not None:
            v = tuple(int(c) for c in report.g.apply(list(v)))
        pts.append(v)
    return sorted(pts)


def enumerate_rational_solutions(F: list[Polynomial],
                                 p_limit: int = 1 << 22) -> list[tuple[int, ...]]:
    """Brute-force oracle: every point of F_p^n zeroing the whole system."""
    fld, n = _require_system(F)
    p = fld.p
    if p ** n > p_limit:
        raise BudgetExceeded(f"{p}^{n} grid points exceed limit {p_limit}")
    axes = np.meshgrid(*([np.arange(p, dtype=np.int64)] * n), indexing="ij")
    coords = np.stack([a.ravel() for a in axes])
    alive = np.ones(coords.shape[1], dtype=bool)
    for f in F:
        acc = np.zeros(coords.shape[1], dtype=np.int64)
        for mono, c in f.terms.items():
            term = np.full(coords.shape[1], c, dtype=np.int64)
            for i, e in enumerate(mono.exps):
                if e:
                    term = term * _powmod_vec(coords[i], e, p) % p
            acc = (acc + term) % p
        alive &= acc == 0
    return sorted(tuple(int(v) for v in coords[:, j]) for j in np.nonzero(alive)[0])


# -- success probability of a random change of variables --------------------


@dataclass
class ProbabilityBound:
    n: int
    q: int
    degrees: tuple[int, ...]
    D: int
    bound: Fraction
    vacuous: bool
    char_condition_ok: bool        # q exceeds the degree bound delta

    def __float__(self) -> float:
        return float(self.bound)


def probability_bound(n: int, q: int, degrees, D: int | None = None) -> ProbabilityBound:
    """Lower bound on the probability that a uniformly random change of
    variables yields a radical-preserving, separating last coordinate:
    1 - (D(D-1)/2 + delta (C(sum d_i + 1, n) - D)) / q with
    delta = sum (d_i - 1) + 1, clamped into [0, 1]."""
    degrees = tuple(int(d) for d in degrees)
    if len(degrees) != n:
        raise ValueError(f"expected {n} degrees, got {len(degrees)}")
    if D is None:
        D = math.prod(degrees)
    delta = sum(d - 1 for d in degrees) + 1
    total = sum(degrees)
    bad = Fraction(D * (D - 1), 2) + delta * (math.comb(total + 1, n) - D)
    bound = 1 - bad / q
    vacuous = bound <= 0
    if vacuous:
        bound = Fraction(0)
    elif bound > 1:
        bound = Fraction(1)
    return ProbabilityBound(n, q, degrees, D, bound, vacuous, q > delta)
