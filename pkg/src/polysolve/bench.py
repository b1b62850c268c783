"""Worst-case benchmark family and the statistics table.

The family: f_i = x_i^2 + (random combination of every monomial strictly
below x_i^2 in the degree order, pure squares excluded) for i = 1..n over
F_65521.  The leading terms are the squares x_i^2, which are pairwise
coprime and whose tails are standard monomials, so the input is already a
reduced basis in the degree order, the quotient has dimension D = 2^n
(squarefree monomials), and the frontier is as large as it gets: building
T_n column by column costs 2^(n-1) - 1 computed normal forms, while after a
random change of variables the last matrix can typically be read off with
zero arithmetic (and comes out sparser, too).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, asdict
from itertools import combinations

from .field import DEFAULT_PRIME, PrimeField
from .poly import Monomial, Polynomial, TermOrder
from .solver import SolveConfig, SolveReport, solve_deterministic, solve_lasvegas


def appendix_family(n: int, field: PrimeField | None = None, seed: int = 0) -> list[Polynomial]:
    """n quadrics f_i = x_i^2 + random lower-order tail, seed-reproducible.

    Tail support: the squarefree quadratic monomials below x_i^2 in the
    degree order, all variables, and 1.  (For the last variable the square
    is the smallest degree-2 monomial, so that tail is purely linear.)
    """
    field = field or PrimeField(DEFAULT_PRIME)
    rng = random.Random(seed)
    order = TermOrder.drl(n)
    quads = []
    for j, k in combinations(range(n), 2):
        e = [0] * n
        e[j] = 1
        e[k] = 1
        quads.append(Monomial(tuple(e)))
    polys = []
    for i in range(n):
        sq = [0] * n
        sq[i] = 2
        lead = Monomial(tuple(sq))
        pairs = [(lead, 1)]
        for m in quads:
            if order.greater(lead, m):
                pairs.append((m, rng.randrange(field.p)))
        for j in range(n):
            pairs.append((Monomial.variable(n, j), rng.randrange(field.p)))
        pairs.append((Monomial.one(n), rng.randrange(field.p)))
        polys.append(Polynomial.from_terms(field, n, pairs))
    return polys


@dataclass
class StatsRecord:
    n: int
    D: int
    pipeline: str
    gb_time: float
    matrix_time: float
    chord_time: float
    nf_count: int
    density: float
    total_time: float

    def to_dict(self) -> dict:
        return asdict(self)


def record_from_report(report: SolveReport) -> StatsRecord:
    s = report.stats
    return StatsRecord(n=s.n, D=s.D, pipeline=report.pipeline,
                       gb_time=s.times.gb, matrix_time=s.times.matrices,
                       chord_time=s.times.change_order,
                       nf_count=s.nf_type2_tn if report.pipeline == "deterministic" else 0,
                       density=s.tn_density, total_time=s.times.total)


def run_bench(n: int, seed: int = 0, with_fglm: bool = False,
              config: SolveConfig | None = None) -> list[StatsRecord]:
    """Both pipelines on the same seed-fixed instance; optionally also time
    the column-by-column builder for reference."""
    F = appendix_family(n, seed=seed)
    rng_det = random.Random(seed + 1)
    rng_lv = random.Random(seed + 2)
    records = [record_from_report(solve_deterministic(F, rng_det, config))]
    records.append(record_from_report(solve_lasvegas(F, rng_lv, config=config)))
    if with_fglm:
        from .gb import buchberger
        from .poly import TermOrder
        from .quotient import build_matrices_fglm, compute_basis, compute_frontier

        gbd = buchberger(F, TermOrder.drl(n))
        Q = compute_basis(gbd)
        fr = compute_frontier(Q, gbd)
        t0 = time.perf_counter()
        mats, stats = build_matrices_fglm(Q, gbd, fr)
        dt = time.perf_counter() - t0
        records.append(StatsRecord(n=n, D=Q.dimension, pipeline="fglm-builder",
                                   gb_time=0.0, matrix_time=dt, chord_time=0.0,
                                   nf_count=stats.type2_nf,
                                   density=mats[n - 1].matrix.density(),
                                   total_time=dt))
    return records


def format_table(records: list[StatsRecord]) -> str:
    headers = ["pipeline", "n", "D", "gb_time", "matrix_time", "chord_time",
               "nf_count", "density", "total_time"]
    rows = [[r.pipeline, str(r.n), str(r.D), f"{r.gb_time:.3f}",
             f"{r.matrix_time:.3f}", f"{r.chord_time:.3f}", str(r.nf_count),
             f"{r.density:.4f}", f"{r.total_time:.3f}"] for r in records]
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(headers)]
    def fmt(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths))
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines.extend(fmt(row) for row in rows)
    return "\n".join(lines)
