import random

import pytest
from hypothesis import given, settings, strategies as st

from polysolve.errors import NonPrimeModulus, ZeroInverse
from polysolve.field import PrimeField, is_prime


def test_is_prime_small_cases():
    primes = {2, 3, 5, 7, 11, 101, 65521}
    for k in range(2, 120):
        assert is_prime(k) == all(k % d for d in range(2, k)), k
    for p in primes:
        assert is_prime(p)
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(65521 * 65521)


@pytest.mark.parametrize("bad", [1, 4, 6, 91, 65520])
def test_non_prime_modulus_rejected(bad):
    with pytest.raises(NonPrimeModulus):
        PrimeField(bad)


def test_basic_arithmetic(f7):
    assert f7.add(5, 4) == 2
    assert f7.sub(2, 5) == 4
    assert f7.mul(3, 5) == 1
    assert f7.neg(0) == 0
    assert f7.neg(3) == 4
    assert f7.pow(3, 6) == 1  # Fermat
    assert f7.reduce(-1) == 6


def test_inverse(f101):
    for a in range(1, 101):
        assert f101.mul(a, f101.inv(a)) == 1
    with pytest.raises(ZeroInverse):
        f101.inv(0)


def test_field_elements(f7):
    a = f7.element(3)
    b = f7.element(5)
    assert (a + b).value == 1
    assert (a - b).value == 5
    assert (a * b).value == 1
    assert (a / b).value == f7.mul(3, f7.inv(5))
    assert (-a).value == 4
    assert (a ** 6).value == 1
    assert a.inverse().value == 5
    assert bool(f7.zero()) is False and bool(f7.one()) is True


def test_equality_and_hash():
    assert PrimeField(7) == PrimeField(7)
    assert PrimeField(7) != PrimeField(101)
    assert len({PrimeField(7), PrimeField(7), PrimeField(101)}) == 2


@settings(max_examples=50, deadline=None)
@given(st.integers(), st.integers())
def test_reduce_is_a_ring_hom(x, y):
    f = PrimeField(101)
    assert f.add(f.reduce(x), f.reduce(y)) == f.reduce(x + y)
    assert f.mul(f.reduce(x), f.reduce(y)) == f.reduce(x * y)


def test_random_vector_and_matrices(f101):
    rng = random.Random(0)
    v = f101.random_vector(5, rng)
    assert len(v) == 5 and all(0 <= x < 101 for x in v)
    m = f101.random_nonsingular_matrix(4, rng)
    assert m.rank() == 4
    # seeded rng makes the draw reproducible
    assert f101.random_vector(5, random.Random(1)) == f101.random_vector(5, random.Random(1))
