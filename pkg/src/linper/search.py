'''
Necessity searches driven by the geometric lemma.

Both engines peel off the last factor of a product, branch over the orbits
of the maximal parabolic and the Jacquet data of that factor, and recurse
on what remains. A Possible verdict carries the branch that reached a
satisfied leaf; Impossible means no branch did. The engines only propagate
necessary conditions and never prove distinction.
'''

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import dual_point, dual_segment
from .distinction import is_dist_sqint, leaf_screen
from .errors import SizeMismatchError
from .models import DistinctionContext, Segment, format_rat
from .multiseg import LadderRep, dual_ladder, multiseg_degree
from .orbits import enumerate_orbits, general_orbit_exponents
from .structure import divisions
from .universe import Universe

log = logging.getLogger(__name__)


class VerdictStatus(str, Enum):
    IMPOSSIBLE = "Impossible"
    POSSIBLE = "Possible"


@dataclass(frozen=True)
class TraceStep:
    case: str
    factor: str
    cut: str | None
    context: DistinctionContext


@dataclass(frozen=True)
class SearchVerdict:
    status: VerdictStatus
    trace: tuple[TraceStep, ...] = ()

    @property
    def possible(self) -> bool:
        return self.status is VerdictStatus.POSSIBLE


Trace = tuple[TraceStep, ...]


class SegmentSearch:
    '''
    Case analysis for products of segments Delta_1 x ... x Delta_t.

    For the last segment and a cut c, [a_t, c] must be distinguished at the
    orbit's second context and, when the cut leaves a top part, that part's
    dual must be the lower part [a_i, c_i] of an earlier segment, which is
    then replaced by [c_i + 1, b_i].
    '''

    def __init__(self, universe: Universe):
        self.universe = universe
        self._memo: dict[tuple[tuple[Segment, ...], DistinctionContext], Trace | None] = {}

    def run(self, prod: Sequence[Segment], ctx: DistinctionContext) -> SearchVerdict:
        segs = tuple(s for s in prod if not s.is_empty)
        n = sum(self.universe.degree(s) for s in segs)
        if n != ctx.size:
            raise SizeMismatchError(f"Context {ctx} does not fit a product of degree {n}")
        trace = self._search(segs, ctx)
        if trace is None:
            return SearchVerdict(VerdictStatus.IMPOSSIBLE)
        return SearchVerdict(VerdictStatus.POSSIBLE, trace)

    def _quick_filter(self, segs: tuple[Segment, ...], ctx: DistinctionContext) -> bool:
        last = segs[-1]
        if self.universe.degree(last) == 1 and self.universe.line(last.line).trivial:
            if ctx.p >= 1 and last.a == ctx.a + Fraction(ctx.q - ctx.p + 1, 2):
                return True
            if ctx.q >= 1 and last.a == -ctx.a + Fraction(ctx.p - ctx.q + 1, 2):
                return True
        target = dual_point(last.end, self.universe)
        return any(s.begin == target for s in segs)

    def _search(self, segs: tuple[Segment, ...], ctx: DistinctionContext) -> Trace | None:
        key = (segs, ctx)
        if key in self._memo:
            return self._memo[key]
        result = self._explore(segs, ctx)
        self._memo[key] = result
        return result

    def _explore(self, segs: tuple[Segment, ...], ctx: DistinctionContext) -> Trace | None:
        if not segs:
            return () if ctx.p == 0 and ctx.q == 0 else None
        if not self._quick_filter(segs, ctx):
            log.debug("no duality for the end of %s at %s", segs[-1], ctx)
            return None

        u = self.universe
        last, rest = segs[-1], segs[:-1]
        line_degree = u.line(last.line).degree
        k = ctx.size - u.degree(last)
        orbits = enumerate_orbits(k, ctx.p, ctx.q)

        c = last.a - 1
        while c <= last.b:
            lower = Segment(last.line, last.a, c)
            upper = Segment(last.line, c + 1, last.b)
            defect = line_degree * upper.length
            case = self._case_label(last, c)
            for orbit in orbits:
                if orbit.defect != defect:
                    continue
                ocx = general_orbit_exponents(orbit.r, orbit.s, k, ctx.p, ctx.q, ctx.a)
                if lower.is_empty:
                    if ocx.rho4.p or ocx.rho4.q:
                        continue
                elif not is_dist_sqint(lower, ocx.rho4, u):
                    continue
                step = TraceStep(case, str(last), format_rat(c), ctx)
                for residual in self._residuals(rest, upper):
                    sub = self._search(residual, ocx.rho1)
                    if sub is not None:
                        log.debug("case %s at %s for %s", case, ctx, last)
                        return (step, *sub)
            c += 1
        return None

    def _case_label(self, last: Segment, c: Fraction) -> str:
        if c == last.a - 1:
            return "C"
        if c == last.b:
            return "B1" if self.universe.degree(last) == 1 else "B2"
        return "A1" if c == last.a and self.universe.line(last.line).degree == 1 else "A2"

    def _residuals(self, rest: tuple[Segment, ...], upper: Segment) -> list[tuple[Segment, ...]]:
        if upper.is_empty:
            return [rest]
        want = dual_segment(upper, self.universe)
        out = []
        for i, s in enumerate(rest):
            if s.line != want.line or s.a != want.a or want.b > s.b:
                continue
            replaced = Segment(s.line, want.b + 1, s.b)
            out.append(tuple(x for x in (*rest[:i], replaced, *rest[i + 1:]) if not x.is_empty))
        return out


class SpehProductSearch:
    '''
    Case analysis for products of ladders pi_1 x ... x pi_t.

    The last ladder is divided as pi_t' |_| pi_t''. Case A keeps a proper
    nonempty left part, Case B the whole ladder, Case C nothing: the left
    part must pass the leaf screen and the dual of the right part must be
    the left part of a division of an earlier factor.
    '''

    def __init__(self, universe: Universe):
        self.universe = universe
        self._memo: dict[tuple[tuple[LadderRep, ...], DistinctionContext], Trace | None] = {}

    def run(self, prod: Sequence[LadderRep], ctx: DistinctionContext) -> SearchVerdict:
        factors = tuple(L for L in prod if L.segments)
        n = sum(multiseg_degree(L, self.universe) for L in factors)
        if n != ctx.size:
            raise SizeMismatchError(f"Context {ctx} does not fit a product of degree {n}")
        trace = self._search(factors, ctx)
        if trace is None:
            return SearchVerdict(VerdictStatus.IMPOSSIBLE)
        return SearchVerdict(VerdictStatus.POSSIBLE, trace)

    def _search(self, factors: tuple[LadderRep, ...], ctx: DistinctionContext) -> Trace | None:
        key = (factors, ctx)
        if key in self._memo:
            return self._memo[key]
        result = self._explore(factors, ctx)
        self._memo[key] = result
        return result

    def _explore(self, factors: tuple[LadderRep, ...], ctx: DistinctionContext) -> Trace | None:
        if not factors:
            return () if ctx.p == 0 and ctx.q == 0 else None

        u = self.universe
        last, rest = factors[-1], factors[:-1]
        k = ctx.size - multiseg_degree(last, u)
        orbits = enumerate_orbits(k, ctx.p, ctx.q)

        for div in divisions(last, u):
            defect = div.right_degree(u)
            left, right = div.left, div.right
            if not left.segments:
                case = "C"
            elif not right.segments:
                case = "B"
            else:
                case = "A"
            residuals = None
            for orbit in orbits:
                if orbit.defect != defect:
                    continue
                ocx = general_orbit_exponents(orbit.r, orbit.s, k, ctx.p, ctx.q, ctx.a)
                if not leaf_screen(left, ocx.rho4, u):
                    continue
                if residuals is None:
                    residuals = self._residuals(rest, right)
                step = TraceStep(case, str(last), str(div), ctx)
                for residual in residuals:
                    sub = self._search(residual, ocx.rho1)
                    if sub is not None:
                        log.debug("case %s at %s for %s", case, ctx, last)
                        return (step, *sub)
        return None

    def _residuals(self, rest: tuple[LadderRep, ...], right: LadderRep) -> list[tuple[LadderRep, ...]]:
        if not right.segments:
            return [rest]
        want = dual_ladder(right, self.universe)
        out = []
        for i, L in enumerate(rest):
            if L.line != want.line or L.height < want.height:
                continue
            for div in divisions(L, self.universe):
                if div.left == want:
                    kept = (*rest[:i], div.right, *rest[i + 1:])
                    out.append(tuple(x for x in kept if x.segments))
        return out


def nec_search_segments(prod: Sequence[Segment], ctx: DistinctionContext, universe: Universe) -> SearchVerdict:
    return SegmentSearch(universe).run(prod, ctx)


def nec_search_speh_products(prod: Sequence[LadderRep], ctx: DistinctionContext, universe: Universe) -> SearchVerdict:
    return SpehProductSearch(universe).run(prod, ctx)
