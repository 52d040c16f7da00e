"""
Unit tests for linper.core

Tests point and segment duality, linkage and precedence.
"""

import random
from fractions import Fraction

import pytest

from linper.core import dual_point, dual_segment, is_linked, precedes, segment_degree
from linper.errors import UnknownLineError
from linper.models import CuspidalPoint, Segment


class TestDuality:
    """Test contragredients of points and segments"""

    def test_point_on_self_dual_line(self, universe):
        """Test exponent negation on rho2"""
        pt = CuspidalPoint("rho2", Fraction(3, 2))
        assert dual_point(pt, universe) == CuspidalPoint("rho2", Fraction(-3, 2))

    def test_point_on_paired_line(self, universe):
        """Test that chi maps to chibar"""
        assert dual_point(CuspidalPoint("chi", Fraction(0)), universe) == CuspidalPoint("chibar", Fraction(0))

    def test_point_involution(self, universe):
        """Test double duality on random points"""
        rng = random.Random(7)
        for _ in range(100):
            pt = CuspidalPoint(rng.choice(["triv", "rho2", "chi", "chibar"]), Fraction(rng.randint(-20, 20), rng.randint(1, 4)))
            assert dual_point(dual_point(pt, universe), universe) == pt

    def test_segment_reflection(self, universe, seg):
        """Test [0,2]@rho2 -> [-2,0]@rho2 and [1,1]@chi -> [-1,-1]@chibar"""
        assert dual_segment(seg(0, 2), universe) == seg(-2, 0)
        assert dual_segment(seg(1, 1, "chi"), universe) == seg(-1, -1, "chibar")

    def test_empty_segment_maps_to_empty(self, universe, seg):
        """Test that [a,a-1] maps to [1-a,-a]"""
        d = dual_segment(seg(3, 2), universe)
        assert d.is_empty
        assert d == seg(-2, -3)

    def test_unknown_line(self, universe, seg):
        """Test a segment on an undefined line"""
        with pytest.raises(UnknownLineError):
            dual_segment(seg(0, 0, "rho9"), universe)

    def test_degree(self, universe, seg):
        """Test d * length"""
        assert segment_degree(seg(0, 1), universe) == 4
        assert segment_degree(seg(0, 1, "triv"), universe) == 2


class TestLinkage:
    """Test is_linked and precedes"""

    def test_overlapping_segments_are_linked(self, seg):
        """Test [0,1] and [1,2]"""
        assert is_linked(seg(0, 1), seg(1, 2))

    def test_juxtaposed_segments_are_linked(self, seg):
        """Test [0,1] and [2,3]"""
        assert is_linked(seg(0, 1), seg(2, 3))

    def test_containment_is_not_linkage(self, seg):
        """Test [0,2] and [1,1]"""
        assert not is_linked(seg(0, 2), seg(1, 1))

    def test_gap_is_not_linkage(self, seg):
        """Test [0,1] and [3,4]"""
        assert not is_linked(seg(0, 1), seg(3, 4))

    def test_different_lines(self, seg):
        """Test segments on different lines"""
        assert not is_linked(seg(0, 1, "chi"), seg(1, 2, "chibar"))

    def test_non_integral_offset(self, seg):
        """Test segments on different twists of a line"""
        assert not is_linked(seg(0, 1), seg(Fraction(1, 2), Fraction(3, 2)))

    def test_precedes_direction(self, seg):
        """Test that the lower segment precedes the higher one"""
        assert precedes(seg(0, 1), seg(1, 2))
        assert not precedes(seg(1, 2), seg(0, 1))

    def test_unlinked_never_precedes(self, seg):
        """Test precedence requires linkage"""
        assert not precedes(seg(0, 1), seg(3, 4))
