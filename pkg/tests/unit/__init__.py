"""
Unit tests for linper

Unit tests are fast, isolated tests of one module each. Shared fixtures
live in tests/conftest.py.
"""

from fractions import Fraction

from linper.models import Segment
from linper.multiseg import LadderRep


def ladder(*bounds, line="triv") -> LadderRep:
    """
    Build a ladder from (a, b) pairs

    Args:
        *bounds: (a, b) pairs; ints, Fractions or "p/q" strings
        line: Line id shared by all segments

    Returns:
        LadderRep: The ladder
    """
    return LadderRep(tuple(Segment(line, Fraction(a), Fraction(b)) for a, b in bounds))


def bounds_of(L) -> list[tuple[Fraction, Fraction]]:
    """(a, b) pairs of a ladder or multisegment, in stored order"""
    return [(s.a, s.b) for s in L.segments]
