import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from polysolve.field import PrimeField


@pytest.fixture(scope="session")
def f7():
    return PrimeField(7)


@pytest.fixture(scope="session")
def f101():
    return PrimeField(101)


@pytest.fixture(scope="session")
def f65521():
    return PrimeField(65521)
