"""Groebner bases via Buchberger's algorithm.

The engine uses the normal selection strategy (smallest lcm first), the
coprime leading-term criterion and the chain criterion for pair pruning, and
always returns the unique reduced basis (monic, inter-reduced, sorted by
ascending leading monomial).

Also here: a linear-algebra path (`groebner_from_matrices`) that rebuilds the
reduced basis of an ideal from its multiplication matrices by incremental
dependence testing.  The solver uses it when a basis for a linear change of
coordinates of an already-understood ideal is needed at scales where term
rewriting is hopeless; its output is bit-identical to Buchberger's by
uniqueness of the reduced basis.
"""

from __future__ import annotations

import heapq

import numpy as np

from .errors import NotShapePosition, NotZeroDimensional
from .field import PrimeField
from .linalg import Matrix, _mul_arrays
from .poly import Monomial, Polynomial, TermOrder, _Reducer, _reduce_prepped, s_polynomial


class GroebnerBasis:
    """A reduced Groebner basis together with its order."""

    __slots__ = ("field", "n", "order", "polys", "leading_monomials")

    def __init__(self, field: PrimeField, n: int, order: TermOrder, polys: list[Polynomial]):
        self.field = field
        self.n = n
        self.order = order
        self.polys = polys
        self.leading_monomials = [g.leading_monomial(order) for g in polys]

    def leading_set(self) -> set[Monomial]:
        return set(self.leading_monomials)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def contains_one(self) -> bool:
        return any(m.is_one() for m in self.leading_monomials)

    def __repr__(self):
        return f"GroebnerBasis({self.order.kind}, {len(self.polys)} polynomials)"


def _interreduce(polys: list[Polynomial], order: TermOrder) -> list[Polynomial]:
    """Minimalize and tail-reduce, yielding the reduced basis."""
    polys = [g for g in polys if not g.is_zero()]
    # minimal generators: drop anyone whose leading monomial is a multiple
    polys = sorted(polys, key=lambda g: order.key(g.leading_monomial(order)))
    minimal: list[Polynomial] = []
    kept_lms: list[Monomial] = []
    for g in polys:
        lm = g.leading_monomial(order)
        if not any(other.divides(lm) for other in kept_lms):
            minimal.append(g)
            kept_lms.append(lm)
    reduced = []
    for i, g in enumerate(minimal):
        others = [_Reducer(h, order) for j, h in enumerate(minimal) if j != i]
        r = _reduce_prepped(g, others, order).monic(order)
        reduced.append(r)
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return reduced


def buchberger(polys, order: TermOrder, field: PrimeField | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``polys``."""
    inputs = [f for f in polys if not f.is_zero()]
    if not inputs:
        if field is None:
            raise ValueError("cannot infer the field from an empty generating set")
        return GroebnerBasis(field, order.n, order, [])
    field = inputs[0].field
    n = inputs[0].n
    if n != order.n:
        raise ValueError(f"order on {order.n} variables, polynomials on {n}")

    basis = [f.monic(order) for f in inputs]
    lms = [f.leading_monomial(order) for f in basis]
    reducers = [_Reducer(f, order) for f in basis]

    pairs: list[tuple[tuple, int, int]] = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            heapq.heappush(pairs, (order.key(lms[i].lcm(lms[j])), i, j))
    done: set[tuple[int, int]] = set()

    while pairs:
        _, i, j = heapq.heappop(pairs)
        if (i, j) in done:
            continue
        done.add((i, j))
        li, lj = lms[i], lms[j]
        if li.is_coprime_with(lj):
            continue
        lcm = li.lcm(lj)
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not lms[k].divides(lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                skip = True
                break
        if skip:
            continue
        h = _reduce_prepped(s_polynomial(basis[i], basis[j], order), reducers, order)
        if h.is_zero():
            continue
        h = h.monic(order)
        t = len(basis)
        basis.append(h)
        lms.append(h.leading_monomial(order))
        reducers.append(_Reducer(h, order))
        for i2 in range(t):
            heapq.heappush(pairs, (order.key(lms[i2].lcm(lms[t])), i2, t))

    return GroebnerBasis(field, n, order, _interreduce(basis, order))


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """True iff every variable has a pure power among the leading monomials."""
    if gb.contains_one():
        return False
    for i in range(gb.n):
        if not any(m.exps[i] and m.support() == [i] for m in gb.leading_monomials):
            return False
    return True


def degree(gb: GroebnerBasis) -> int:
    """Vector-space dimension of the quotient ring."""
    from .quotient import compute_basis

    return len(compute_basis(gb).basis)


def lex_oracle(polys, n: int, field: PrimeField | None = None):
    """Direct LEX route: Buchberger under LEX, reshaped to the univariate
    representation.  Serves as the independent cross-check for the
    Krylov/structured pipeline."""
    gb = buchberger(polys, TermOrder.lex(n), field=field)
    return shape_rep_from_lex(gb)


def shape_rep_from_lex(gb: GroebnerBasis):
    """Reshape a reduced LEX basis {x_1 - h_1(x_n), ..., h_n(x_n)} into a
    UnivariateRep; raises NotShapePosition if the basis has any other form."""
    from .change_order import UnivariateRep

    n = gb.n
    last = n - 1
    if not is_zero_dimensional(gb):
        raise NotZeroDimensional("shape inspection needs a zero-dimensional ideal")
    if len(gb.polys) != n:
        raise NotShapePosition(f"LEX basis has {len(gb.polys)} elements, expected {n}")
    # ascending LEX order puts the univariate h_n first, then x_{n-1}, ... x_1
    hn = gb.polys[0]
    if not hn.is_univariate_in(last):
        raise NotShapePosition("smallest basis element is not univariate in the last variable")
    d = hn.total_degree()
    coeffs = [None] * n
    coeffs[last] = hn.univariate_coeffs(last)
    for pos, g in enumerate(gb.polys[1:]):
        var = n - 2 - pos  # ascending leading terms: x_{n-1} up to x_1
        lm = g.leading_monomial(gb.order)
        if lm != Monomial.variable(n, var):
            raise NotShapePosition(f"expected leading term {'x%d' % (var + 1)}")
        tail = Polynomial.variable(gb.field, n, var) - g
        if not tail.is_univariate_in(last):
            raise NotShapePosition("parametrization is not univariate in the last variable")
        if tail.total_degree() >= d:
            raise NotShapePosition("parametrization degree exceeds the minimal polynomial's")
        coeffs[var] = tail.univariate_coeffs(last)
    return UnivariateRep(gb.field, n, [list(c) for c in coeffs])


def groebner_from_matrices(mats: list[Matrix], field: PrimeField, n: int,
                           order: TermOrder, one_vector=None) -> GroebnerBasis:
    """Reduced Groebner basis from multiplication matrices.

    ``mats[i]`` must represent multiplication by (the image of) x_i on a
    D-dimensional quotient, in a basis whose coordinate vector for 1 is
    ``one_vector`` (default: first unit vector).  Candidate monomials are
    enumerated in increasing order; each one's coordinate vector is obtained
    with a single matrix-vector product from its parent, and linear
    dependence on the kept (standard) monomials yields exactly the reduced
    basis elements.
    """
    if not mats:
        raise ValueError("need at least one multiplication matrix")
    p = field.p
    dim = mats[0].nrows
    # float64 residency: products below 2^53 are exact, and BLAS-backed
    # matvecs avoid per-candidate dtype conversions of the big arrays
    use_float = dim * (p - 1) * (p - 1) < (1 << 53)
    dtype = np.float64 if use_float else np.int64
    mats_arr = [m.a.astype(dtype) for m in mats]
    if one_vector is None:
        one_vector = np.zeros(dim, dtype=dtype)
        one_vector[0] = 1
    else:
        one_vector = (np.asarray(one_vector, dtype=np.int64) % p).astype(dtype)

    kept_monos: list[Monomial] = []
    kept_vecs = np.zeros((dim, dim), dtype=dtype)
    rref = np.zeros((dim, dim), dtype=dtype)   # RREF of kept vectors
    transform = np.zeros((dim, dim), dtype=dtype)  # rref row = transform row . kept_vecs
    piv_cols: list[int] = []
    lead_monos: list[Monomial] = []
    out_polys: list[Polynomial] = []

    one = Monomial.one(n)
    heap: list[tuple[tuple, Monomial, int, int]] = [(order.key(one), one, -1, -1)]
    seen = {one}

    while heap:
        _, m, parent_idx, via_var = heapq.heappop(heap)
        if any(lm.divides(m) for lm in lead_monos):
            continue
        if parent_idx < 0:
            vec = one_vector.copy()
        elif use_float:
            vec = mats_arr[via_var] @ kept_vecs[parent_idx] % p
        else:
            vec = _mul_arrays(mats_arr[via_var], kept_vecs[parent_idx][:, None], p).ravel()
        k = len(kept_monos)
        if k:
            coeffs = vec[piv_cols]
            if use_float:
                red = (vec - coeffs @ rref[:k] % p) % p
                expr = coeffs @ transform[:k, :k] % p
            else:
                red = (vec - _mul_arrays(coeffs[None, :], rref[:k], p).ravel()) % p
                expr = _mul_arrays(coeffs[None, :], transform[:k, :k], p).ravel()
        else:
            red = vec % p
            expr = np.zeros(0, dtype=dtype)
        nz = np.nonzero(red)[0]
        if nz.size == 0:
            # dependent: m - sum(expr_j * kept_j) is a reduced basis element
            tail = [(kept_monos[j], (-int(expr[j])) % p) for j in range(k) if expr[j]]
            out_polys.append(Polynomial.from_terms(field, n, [(m, 1)] + tail))
            lead_monos.append(m)
            continue
        # independent: m is a standard monomial
        pc = int(nz[0])
        inv = pow(int(red[pc]), -1, p)
        new_row = red * inv % p
        new_tr = np.zeros(dim, dtype=dtype)
        new_tr[:k] = (-expr) % p
        new_tr[k] = 1
        new_tr = new_tr * inv % p
        if k:
            col = rref[:k, pc].copy()
            mask = col != 0
            if mask.any():
                rref[:k][mask] = (rref[:k][mask] - np.outer(col[mask], new_row)) % p
                transform[:k][mask] = (transform[:k][mask] - np.outer(col[mask], new_tr)) % p
        kept_vecs[k] = vec
        rref[k] = new_row
        transform[k] = new_tr
        piv_cols.append(pc)
        kept_monos.append(m)
        for i in range(n):
            child = m.mul_var(i)
            if child not in seen:
                seen.add(child)
                heapq.heappush(heap, (order.key(child), child, k, i))

    if len(kept_monos) != dim:
        raise NotZeroDimensional(
            f"multiplication matrices span a {len(kept_monos)}-dimensional quotient, expected {dim}")
    out_polys.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return GroebnerBasis(field, n, order, out_polys)
