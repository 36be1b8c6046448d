import pytest

from patsemi.oracle import enumerate_semigroups


@pytest.fixture(scope="session")
def universe10():
    """Every numerical semigroup of genus at most 10."""
    return enumerate_semigroups(10)


@pytest.fixture(scope="session")
def universe8():
    return enumerate_semigroups(8)
