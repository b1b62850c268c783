import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_zero_dim_system, shape_instance
from polysolve.errors import NotShapePosition, NotZeroDimensional
from polysolve.field import PrimeField
from polysolve.gb import (buchberger, degree, groebner_from_matrices,
                          is_zero_dimensional, lex_oracle, shape_rep_from_lex)
from polysolve.poly import (Monomial, Polynomial, TermOrder, normal_form,
                            s_polynomial)
from polysolve.quotient import build_matrices_echelon, compute_basis


def _xy(field):
    return (Polynomial.variable(field, 2, 0), Polynomial.variable(field, 2, 1))


def test_worked_example_drl_basis(f7):
    x, y = _xy(f7)
    gb = buchberger([x - y * y, y ** 3 - Polynomial.constant(f7, 2, 2)],
                    TermOrder.drl(2))
    # reduced basis, ascending by leading term: {y^2 - x, xy + 5, x^2 + 5y}
    assert [g.leading_monomial(gb.order) for g in gb.polys] == \
        [Monomial((0, 2)), Monomial((1, 1)), Monomial((2, 0))]
    assert gb.polys[0] == y * y - x
    assert gb.polys[1] == x * y + Polynomial.constant(f7, 2, 5)
    assert gb.polys[2] == x * x + y.scale(5)
    assert gb.leading_set() == {Monomial((0, 2)), Monomial((1, 1)), Monomial((2, 0))}


def test_worked_example_lex_basis(f7):
    x, y = _xy(f7)
    gb = buchberger([x - y * y, y ** 3 - Polynomial.constant(f7, 2, 2)],
                    TermOrder.lex(2))
    assert len(gb) == 2
    assert gb.polys[0] == y ** 3 + Polynomial.constant(f7, 2, 5)
    assert gb.polys[1] == x - y * y


def test_reduced_basis_properties():
    rng = random.Random(21)
    field = PrimeField(101)
    order = TermOrder.drl(2)
    for _ in range(10):
        _, gb = random_zero_dim_system(field, 2, (2, 2), rng)
        lms = [g.leading_monomial(order) for g in gb.polys]
        for i, g in enumerate(gb.polys):
            assert g.leading_coefficient(order) == 1  # monic
            for m, _c in g.terms.items():
                for j, lm in enumerate(lms):
                    if i != j or m != lms[i]:
                        assert not lm.divides(m)  # fully interreduced
        # ascending order of leading terms
        for a, b in zip(lms, lms[1:]):
            assert order.greater(b, a)


def test_s_polynomials_reduce_to_zero():
    rng = random.Random(33)
    field = PrimeField(101)
    order = TermOrder.drl(3)
    _, gb = random_zero_dim_system(field, 3, (2, 2, 2), rng)
    for i in range(len(gb.polys)):
        for j in range(i + 1, len(gb.polys)):
            s = s_polynomial(gb.polys[i], gb.polys[j], order)
            assert normal_form(s, gb.polys, order).is_zero()


def test_ideal_membership_of_inputs():
    rng = random.Random(8)
    field = PrimeField(101)
    order = TermOrder.drl(2)
    system, gb = random_zero_dim_system(field, 2, (2, 3), rng)
    for f in system:
        assert normal_form(f, gb.polys, order).is_zero()


def test_contains_one(f7):
    x, y = _xy(f7)
    one = Polynomial.constant(f7, 2, 1)
    gb = buchberger([x, x + one], TermOrder.drl(2))
    assert gb.contains_one()
    assert not is_zero_dimensional(gb)
    gb2 = buchberger([x - y, y * y - y], TermOrder.drl(2))
    assert not gb2.contains_one()


def test_zero_dimensionality_detection(f7):
    x, y = _xy(f7)
    curve = buchberger([x * y], TermOrder.drl(2))  # positive-dimensional
    assert not is_zero_dimensional(curve)
    pts = buchberger([x * x - y, y * y - Polynomial.constant(f7, 2, 1)], TermOrder.drl(2))
    assert is_zero_dimensional(pts)
    assert degree(pts) == 4


def test_buchberger_infers_field_and_checks_input(f7):
    with pytest.raises(ValueError):
        buchberger([], TermOrder.drl(2))
    x, y = _xy(f7)
    gb = buchberger([x, y], TermOrder.drl(2))
    assert gb.field.p == 7 and len(gb) == 2


def test_lex_oracle_worked_example(f7):
    x, y = _xy(f7)
    rep = lex_oracle([x - y * y, y ** 3 - Polynomial.constant(f7, 2, 2)], 2)
    assert rep.coeffs == [[0, 0, 1], [5, 0, 0, 1]]
    assert rep.degree == 3


def test_shape_rep_from_lex_rejections(f7):
    x, y = _xy(f7)
    # (x^2 - y, y^2 - 1) is zero-dimensional but not in shape position
    gb = buchberger([x * x - y, y * y - Polynomial.constant(f7, 2, 1)], TermOrder.lex(2))
    with pytest.raises(NotShapePosition):
        shape_rep_from_lex(gb)
    with pytest.raises(NotZeroDimensional):
        shape_rep_from_lex(buchberger([x * y], TermOrder.lex(2)))


def test_groebner_from_matrices_matches_buchberger():
    rng = random.Random(14)
    field = PrimeField(101)
    for n, degs in ((2, (2, 2)), (2, (2, 3)), (3, (2, 2, 2))):
        _, gb = random_zero_dim_system(field, n, degs, rng)
        quotient = compute_basis(gb)
        mats, _stats = build_matrices_echelon(quotient, gb)
        rebuilt = groebner_from_matrices([m.matrix for m in mats], field, n,
                                         TermOrder.drl(n))
        assert rebuilt.polys == gb.polys


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 30))
def test_disguised_generators_reproduce_the_basis(seed):
    # scrambling a generating set with invertible operations never changes
    # the reduced basis
    rng = random.Random(seed)
    field = PrimeField(101)
    system, rep = shape_instance(field, 2, rng.randrange(2, 7), rng)
    gb = buchberger(system, TermOrder.drl(2))
    gb2 = buchberger(rep.polynomials(), TermOrder.drl(2))
    assert gb.polys == gb2.polys
