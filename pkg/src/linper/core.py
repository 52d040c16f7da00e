'''
Operations on cuspidal points and segments: duality, linkage, precedence.
'''

from __future__ import annotations

from .models import CuspidalPoint, Segment, is_integral
from .universe import Universe


def dual_point(pt: CuspidalPoint, universe: Universe) -> CuspidalPoint:
    '''
    Contragredient of nu^x rho: the point -x on the dual line.

    Args:
        pt: The point.
        universe: Registry resolving the dual line.

    Returns:
        CuspidalPoint: The dual point.
    '''
    line = universe.line(pt.line)
    return CuspidalPoint(line.dual_id, -pt.exponent)


def dual_segment(s: Segment, universe: Universe) -> Segment:
    '''
    [a, b] on rho maps to [-b, -a] on the dual of rho. Empty segments map
    to empty segments.
    '''
    line = universe.line(s.line)
    return Segment(line.dual_id, -s.b, -s.a)


def segment_degree(s: Segment, universe: Universe) -> int:
    return universe.degree(s)


def _same_line(s1: Segment, s2: Segment) -> bool:
    # same symbolic line and an integral offset between the two point sets
    return s1.line == s2.line and is_integral(s1.a - s2.a)


def is_linked(s1: Segment, s2: Segment) -> bool:
    '''
    True iff the union of the two segments is a segment and neither
    contains the other.
    '''
    if s1.is_empty or s2.is_empty or not _same_line(s1, s2):
        return False
    # union is a segment: no gap between them
    if s1.a > s2.b + 1 or s2.a > s1.b + 1:
        return False
    s1_in_s2 = s2.a <= s1.a and s1.b <= s2.b
    s2_in_s1 = s1.a <= s2.a and s2.b <= s1.b
    return not (s1_in_s2 or s2_in_s1)


def precedes(s1: Segment, s2: Segment) -> bool:
    '''
    s1 precedes s2 iff they are linked and s2 begins a positive integral
    number of steps above s1.

    Under this direction a ladder listed by decreasing beginnings is in
    standard order.
    '''
    return is_linked(s1, s2) and s2.a > s1.a
