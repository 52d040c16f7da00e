"""
Shared fixtures for all linper tests
"""

from fractions import Fraction

import pytest

from linper.models import PoleParity, Segment
from linper.universe import Universe, default_universe


@pytest.fixture
def universe() -> Universe:
    """The built-in universe: triv, rho2, chi, chibar"""
    return default_universe()


@pytest.fixture
def swapped_universe(universe) -> Universe:
    """Built-in lines under the other parity convention"""
    return universe.with_parity(PoleParity.ODD_SYMMETRIC)


@pytest.fixture
def seg():
    """Segment builder accepting ints, Fractions or "p/q" strings"""
    def make(a, b, line="rho2") -> Segment:
        return Segment(line, Fraction(a), Fraction(b))
    return make
