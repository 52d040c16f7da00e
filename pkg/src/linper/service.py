'''
Service layer for linper.

LinperService holds the loaded universe and turns expression text into
calls on the library. The CLI talks only to this class; every method
returns library objects and leaves serialization to the caller.
'''

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .core import dual_segment
from .distinction import (
    Form1,
    Form2,
    TadicFactor,
    UnitaryRep,
    arthur_order,
    as_one_dimensional,
    decide_ess_speh,
    is_dist_one_dimensional,
    is_dist_sqint,
    is_dist_unitary,
    leaf_screen,
    pole_set_transfer_check,
    shape_classify,
)
from .enumeration import CrosscheckReport, crosscheck
from .errors import DomainError, InvalidInputError
from .expr import (
    ContextExpr,
    Expr,
    ProductExpr,
    SpehTerm,
    Term,
    expr_factors,
    expr_ladder,
    expr_ladders,
    format_expr,
    parse,
)
from .models import HALF, DistinctionContext, RatLike, Segment, as_rat
from .multiseg import (
    LadderRep,
    Multisegment,
    SpehDatum,
    central_exponent,
    dual_multisegment,
    is_ess_speh,
    is_ladder,
    is_left_aligned,
    is_right_aligned,
    is_self_dual_rep,
    make_speh,
    multiseg_degree,
    speh_datum_of,
)
from .orbits import AdmissibleDatum, OrbitDatum, admissible_exponents, enumerate_admissible, enumerate_orbits
from .search import SearchVerdict, nec_search_segments, nec_search_speh_products
from .structure import (
    Division,
    MatMatrix,
    commutes,
    derivative,
    divisions,
    highest_derivative_speh,
    jacquet_ladder,
    kernel_products,
    mat_matrices,
)
from .universe import Universe

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShapeReport:
    degree: int
    ladder: bool
    left_aligned: bool
    right_aligned: bool
    ess_speh: bool
    self_dual: bool
    central_exponent: Fraction


@dataclass(frozen=True)
class SpehReport:
    datum: SpehDatum
    ladder: LadderRep
    degree: int
    derivative_shift: Fraction
    derivative: SpehDatum | None


@dataclass(frozen=True)
class DistinctionResult:
    distinguished: bool
    complete: bool
    method: str
    context: DistinctionContext


@dataclass(frozen=True)
class CertifyResult:
    engine: str
    verdict: SearchVerdict


class LinperService:
    '''
    Facade over the library for one universe.

    Methods accept expression text as typed on the command line.
    '''
    def __init__(self, universe: Universe):
        self.universe = universe

    # ------------------------------------------------------------------
    # parsing helpers
    # ------------------------------------------------------------------

    def parse(self, text: str) -> Expr:
        return parse(text, self.universe)

    def normalize(self, text: str) -> str:
        return format_expr(self.parse(text))

    def ladder(self, text: str) -> LadderRep:
        return expr_ladder(self.parse(text))

    def _speh_datum(self, t: Term) -> SpehDatum:
        if isinstance(t, SpehTerm):
            if t.alpha is not None:
                raise InvalidInputError("Expected a Speh term, got a complementary series")
            return t.datum
        d = speh_datum_of(t)
        if d is None:
            raise InvalidInputError(f"{format_expr(t)} is not essentially Speh")
        return d

    def _single_term(self, text: str) -> Term:
        factors = expr_factors(self.parse(text))
        if len(factors) != 1:
            raise InvalidInputError("Expected a single term, got a product")
        return factors[0]

    # ------------------------------------------------------------------
    # combinatorics
    # ------------------------------------------------------------------

    def dual(self, text: str) -> Expr:
        expr = self.parse(text)
        if isinstance(expr, ContextExpr):
            return ContextExpr(expr.context.twisted_dual())
        if isinstance(expr, ProductExpr):
            return ProductExpr(tuple(self._dual_term(t) for t in expr.factors))
        return self._dual_term(expr)

    def _dual_term(self, t: Term) -> Term:
        if isinstance(t, SpehTerm):
            return SpehTerm(SpehDatum(dual_segment(t.datum.delta, self.universe), t.datum.k), t.alpha)
        return dual_multisegment(t, self.universe)

    def shapes(self, text: str) -> ShapeReport:
        t = self._single_term(text)
        m = t if isinstance(t, Multisegment) else Multisegment(tuple(s for L in t.ladders() for s in L.segments))
        return ShapeReport(
            degree=multiseg_degree(m, self.universe),
            ladder=is_ladder(m),
            left_aligned=is_left_aligned(m),
            right_aligned=is_right_aligned(m),
            ess_speh=is_ess_speh(m),
            self_dual=is_self_dual_rep(m, self.universe),
            central_exponent=central_exponent(m, self.universe),
        )

    def speh(self, text: str) -> SpehReport:
        d = self._speh_datum(self._single_term(text))
        L = make_speh(d)
        shift, lower = highest_derivative_speh(d)
        return SpehReport(d, L, multiseg_degree(L, self.universe), shift, lower)

    def jacquet(self, text: str, k: int) -> list[tuple[LadderRep, LadderRep]]:
        return jacquet_ladder(self.ladder(text), k, self.universe)

    def divisions(self, text: str) -> list[Division]:
        return divisions(self.ladder(text), self.universe)

    def derivative(self, text: str, k: int) -> LadderRep | None:
        return derivative(self.ladder(text), k, self.universe)

    def kernel(self, text: str) -> list[tuple[Segment, ...] | None]:
        return kernel_products(self.ladder(text))

    def orbits(self, k: int, p: int, q: int) -> list[OrbitDatum]:
        return enumerate_orbits(k, p, q)

    def admissible(self, nbar: Sequence[int], p: int, q: int) -> list[tuple[AdmissibleDatum, dict[str, Fraction]]]:
        return [(d, admissible_exponents(d, nbar)) for d in enumerate_admissible(nbar, p, q)]

    def mat(self, alpha: Sequence[int], beta: Sequence[int]) -> list[MatMatrix]:
        return mat_matrices(alpha, beta)

    def commutes(self, first: str, second: str) -> bool:
        d = self._speh_datum(self._single_term(first))
        return commutes(d, self.ladder(second))

    # ------------------------------------------------------------------
    # distinction
    # ------------------------------------------------------------------

    def unitary(self, text: str) -> UnitaryRep:
        factors = []
        for t in expr_factors(self.parse(text)):
            if isinstance(t, SpehTerm):
                factors.append(TadicFactor(t.datum, t.alpha))
            else:
                factors.append(TadicFactor(self._speh_datum(t)))
        return UnitaryRep(tuple(factors))

    def distinguished(self, text: str, ctx: DistinctionContext | None = None) -> DistinctionResult:
        '''
        Decide distinction with the strongest procedure that applies.

        Args:
            text: A representation expression.
            ctx: The context; None means the unitary classification at (n, n, 0).

        Returns:
            DistinctionResult: The value, whether it is exact, and the
            procedure used.
        '''
        expr = self.parse(text)
        factors = expr_factors(expr)
        single = len(factors) == 1 and not (isinstance(factors[0], SpehTerm) and factors[0].alpha is not None)
        if ctx is None or not single:
            u = self.unitary(text)
            n = u.degree(self.universe)
            if ctx is not None and (ctx.p != ctx.q or ctx.a != 0 or ctx.size != n):
                raise DomainError(f"Products are only decided at ({n // 2},{n // 2},0), got {ctx}")
            value = is_dist_unitary(u, self.universe)
            return DistinctionResult(value, True, "unitary", DistinctionContext(n // 2, n // 2))

        t = factors[0]
        if isinstance(t, SpehTerm):
            dec = decide_ess_speh(t.datum, ctx, self.universe)
            return DistinctionResult(dec.distinguished, dec.complete, "speh", ctx)
        if len(t.segments) == 1:
            value = is_dist_sqint(t.segments[0], ctx, self.universe)
            return DistinctionResult(value, ctx.a == 0 or not value, "square-integrable", ctx)
        if not is_ladder(t):
            raise DomainError(f"No decision procedure for {format_expr(t)}")
        L = LadderRep.from_multisegment(t)
        char = as_one_dimensional(L, self.universe)
        if char is not None:
            return DistinctionResult(is_dist_one_dimensional(char, ctx, self.universe), True, "character", ctx)
        d = speh_datum_of(L)
        if d is not None:
            dec = decide_ess_speh(d, ctx, self.universe)
            return DistinctionResult(dec.distinguished, dec.complete, "speh", ctx)
        value = leaf_screen(L, ctx, self.universe)
        return DistinctionResult(value, not value, "ladder-screen", ctx)

    def certify(self, text: str, ctx: DistinctionContext) -> CertifyResult:
        '''
        Run the necessity search: the segment engine when every factor is a
        single segment, the product engine otherwise.
        '''
        expr = self.parse(text)
        factors = expr_factors(expr)
        if all(isinstance(t, Multisegment) and len(t.segments) == 1 for t in factors):
            segs = [t.segments[0] for t in factors]
            return CertifyResult("segments", nec_search_segments(segs, ctx, self.universe))
        return CertifyResult("speh-products", nec_search_speh_products(expr_ladders(expr), ctx, self.universe))

    def certify_unitary(self, text: str) -> CertifyResult:
        u = self.unitary(text)
        n = u.degree(self.universe)
        if n % 2:
            raise DomainError(f"Unitary classification needs even degree, got {n}")
        ctx = DistinctionContext(n // 2, n // 2)
        return CertifyResult("speh-products", nec_search_speh_products(arthur_order(u, self.universe), ctx, self.universe))

    def shape(self, text: str) -> Form1 | Form2 | None:
        return shape_classify(self.ladder(text), self.universe)

    def poleset(self, text: str, a: RatLike) -> tuple[bool, list[Fraction]]:
        L = self.ladder(text)
        if L.segments and self.universe.line(L.segments[0].line).trivial:
            poles = sorted({s.a - HALF for s in L.segments})
        else:
            poles = []
        return pole_set_transfer_check(L, as_rat(a), self.universe), poles

    def crosscheck(self, max_degree: int, include_complementary: bool = True) -> CrosscheckReport:
        log.info("crosscheck up to degree %d over %d lines", max_degree, len(self.universe.lines))
        return crosscheck(self.universe, max_degree, include_complementary)
