"""
Unit tests for linper.search

Tests the segment and Speh product necessity searches.
"""

from fractions import Fraction

import pytest

from linper.errors import SizeMismatchError
from linper.models import DistinctionContext as Ctx
from linper.multiseg import SpehDatum, make_speh
from linper.search import (
    SegmentSearch,
    SpehProductSearch,
    VerdictStatus,
    nec_search_segments,
    nec_search_speh_products,
)
from linper.structure import kernel_products


F = Fraction


class TestSegmentSearch:
    """Test nec_search_segments"""

    def test_single_distinguished_segment(self, universe, seg):
        """Test [0,0]@rho2 at (1,1,0) ends in case B2"""
        verdict = nec_search_segments([seg(0, 0)], Ctx(1, 1), universe)
        assert verdict.status is VerdictStatus.POSSIBLE
        assert [step.case for step in verdict.trace] == ["B2"]

    def test_kernel_factor_impossible(self, universe, seg):
        """Test K_1 of Sp([0,1]@rho2,2) at (4,4,0)"""
        prod = [seg(F(-1, 2), F(3, 2)), seg(F(1, 2), F(1, 2))]
        assert nec_search_segments(prod, Ctx(4, 4), universe).status is VerdictStatus.IMPOSSIBLE

    def test_dual_pair(self, universe, seg):
        """Test [0,1]@chi x [-1,0]@chibar cancels through case C"""
        verdict = nec_search_segments([seg(0, 1, "chi"), seg(-1, 0, "chibar")], Ctx(2, 2), universe)
        assert verdict.possible
        assert verdict.trace[0].case == "C"
        assert verdict.trace[0].factor == "[-1,0]@chibar"

    def test_non_self_dual_alone(self, universe, seg):
        """Test a single segment on chi"""
        assert not nec_search_segments([seg(F(-1, 2), F(1, 2), "chi")], Ctx(1, 1), universe).possible

    def test_character_factor(self, universe, seg):
        """Test nu^{1/2} at (1,0,1/2)"""
        verdict = nec_search_segments([seg(F(1, 2), F(1, 2), "triv")], Ctx(1, 0, F(1, 2)), universe)
        assert verdict.possible
        assert verdict.trace[0].case == "B1"

    def test_empty_product(self, universe):
        """Test the trivial representation of G_0"""
        assert nec_search_segments([], Ctx(0, 0), universe).possible

    def test_size_mismatch(self, universe, seg):
        """Test a wrong context size"""
        with pytest.raises(SizeMismatchError):
            nec_search_segments([seg(0, 0)], Ctx(2, 2), universe)

    def test_agrees_with_sqint_on_single_segments(self, universe, seg):
        """Test that a single centered rho2 segment is possible exactly when distinguished"""
        from linper.distinction import is_dist_sqint
        search = SegmentSearch(universe)
        for m in range(1, 5):
            half = F(m - 1, 2)
            s = seg(-half, half)
            assert search.run([s], Ctx(m, m)).possible == is_dist_sqint(s, Ctx(m, m), universe)

    def test_speh_kernels_impossible(self, universe, seg):
        """Test every kernel product of a distinguished rho2 Speh"""
        for k in (2, 3):
            L = make_speh(SpehDatum(seg(0, 0), k))
            for prod in kernel_products(L):
                if prod is None:
                    continue
                assert not nec_search_segments(list(prod), Ctx(k, k), universe).possible


class TestSpehProductSearch:
    """Test nec_search_speh_products"""

    def test_distinguished_speh(self, universe, seg):
        """Test Sp(St(rho2,1),2) at (2,2,0) through case B"""
        verdict = nec_search_speh_products([make_speh(SpehDatum(seg(0, 0), 2))], Ctx(2, 2), universe)
        assert verdict.possible
        assert verdict.trace[0].case == "B"

    def test_dual_pair(self, universe, seg):
        """Test Sp(chi) x Sp(chibar) through case C"""
        prod = [make_speh(SpehDatum(seg(0, 0, "chi"), 2)), make_speh(SpehDatum(seg(0, 0, "chibar"), 2))]
        verdict = nec_search_speh_products(prod, Ctx(2, 2), universe)
        assert verdict.possible
        assert verdict.trace[0].case == "C"

    def test_non_self_dual_alone(self, universe, seg):
        """Test a single Speh on chi"""
        prod = [make_speh(SpehDatum(seg(0, 0, "chi"), 2))]
        assert nec_search_speh_products(prod, Ctx(1, 1), universe).status is VerdictStatus.IMPOSSIBLE

    def test_memo_reused(self, universe, seg):
        """Test that a search object answers repeated queries consistently"""
        search = SpehProductSearch(universe)
        prod = [make_speh(SpehDatum(seg(0, 0), 2))]
        assert search.run(prod, Ctx(2, 2)) == search.run(prod, Ctx(2, 2))

    def test_size_mismatch(self, universe, seg):
        """Test a wrong context size"""
        with pytest.raises(SizeMismatchError):
            nec_search_speh_products([make_speh(SpehDatum(seg(0, 0), 2))], Ctx(1, 1), universe)
