'''
Decision procedures for (H_{p,q}, mu_a)-distinction.

Base predicates for characters, square-integrable and essentially Speh
representations, the classification of distinguished unitary
representations through their Tadic decomposition, the shape test for
right aligned ladders over a character, and the pole-set check that
transfers distinction between twists.
'''

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .core import dual_point, dual_segment
from .errors import DomainError, InvariantError, SizeMismatchError
from .models import HALF, DistinctionContext, RatLike, Segment, as_rat, format_rat
from .multiseg import (
    LadderRep,
    Shaped,
    SpehDatum,
    is_left_aligned,
    is_right_aligned,
    is_self_dual_rep,
    make_speh,
    multiseg_degree,
    speh_datum_of,
)
from .universe import Universe

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OneDimensional:
    '''The character (chi nu^exponent) o det of G_n, chi the base point of a degree-1 line.'''
    line: str
    exponent: Fraction
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", as_rat(self.exponent))
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise InvariantError(f"Character needs a positive rank, got {self.n!r}")


def as_one_dimensional(m: Shaped, universe: Universe) -> OneDimensional | None:
    '''
    Recognize a character: k consecutive single points on a degree-1 line.

    Returns:
        OneDimensional | None: The character, or None.
    '''
    d = speh_datum_of(m)
    if d is None or d.delta.length != 1:
        return None
    if universe.line(d.delta.line).degree != 1:
        return None
    return OneDimensional(d.delta.line, d.delta.a, d.k)


def is_dist_one_dimensional(c: OneDimensional, ctx: DistinctionContext, universe: Universe) -> bool:
    '''
    Args:
        c: The character.
        ctx: The context; p + q must equal the rank of the character.
        universe: Registry identifying the trivial line.

    Returns:
        bool: True iff the character restricted to H_{p,q} is mu_a.
    '''
    if ctx.size != c.n:
        raise SizeMismatchError(f"Context {ctx} does not fit a character of G_{c.n}")
    trivial = universe.line(c.line).trivial
    if ctx.q == 0:
        return trivial and c.exponent == ctx.a
    if ctx.p == 0:
        return trivial and c.exponent == -ctx.a
    return trivial and c.exponent == 0 and ctx.a == 0


# ---------------------------------------------------------------------------
# square-integrable and essentially Speh
# ---------------------------------------------------------------------------

def is_dist_sqint(seg: Segment, ctx: DistinctionContext, universe: Universe) -> bool:
    '''
    Distinction of St(rho, l) = [a, b]@rho.

    Above degree 1 this needs p = q, a self-dual centered segment of even
    degree, and the pole of the line to be the one the universe's parity
    convention attaches to l. The twist plays no further role.
    '''
    if seg.is_empty:
        raise DomainError("Distinction of the empty segment")
    n = universe.degree(seg)
    if n != ctx.size:
        raise SizeMismatchError(f"Context {ctx} does not fit {seg} of degree {n}")
    if n == 1:
        return is_dist_one_dimensional(OneDimensional(seg.line, seg.a, 1), ctx, universe)
    line = universe.line(seg.line)
    if ctx.p != ctx.q or not line.self_dual or not seg.centered or n % 2:
        return False
    if line.pole_type is None:
        raise DomainError(f'Self-dual line "{line.id}" has no pole type')
    return line.pole_type is universe.parity.pole_for_length(seg.length)


@dataclass(frozen=True)
class SpehDecision:
    '''
    distinguished is exact when complete is True; otherwise it is the value
    of the necessary screens (self-duality, p = q) only.
    '''
    distinguished: bool
    complete: bool


def decide_ess_speh(d: SpehDatum, ctx: DistinctionContext, universe: Universe) -> SpehDecision:
    L = make_speh(d)
    n = multiseg_degree(L, universe)
    if n != ctx.size:
        raise SizeMismatchError(f"Context {ctx} does not fit {d} of degree {n}")

    char = as_one_dimensional(L, universe)
    if char is not None:
        return SpehDecision(is_dist_one_dimensional(char, ctx, universe), True)
    if d.k == 1:
        value = is_dist_sqint(d.delta, ctx, universe)
        return SpehDecision(value, ctx.a == 0 or not value)
    if ctx.p == 0 or ctx.q == 0 or ctx.p != ctx.q:
        return SpehDecision(False, True)
    if dual_segment(d.delta, universe) != d.delta:
        return SpehDecision(False, True)

    m = universe.degree(d.delta)
    untwisted = m % 2 == 0 and is_dist_sqint(d.delta, DistinctionContext(m // 2, m // 2), universe)
    if ctx.a == 0:
        return SpehDecision(untwisted, True)
    if abs(ctx.a) == HALF and not untwisted:
        return SpehDecision(False, True)
    if pole_set_transfer_check(L, ctx.a, universe) and pole_set_transfer_check(L, 0, universe):
        return SpehDecision(untwisted, True)
    log.debug("twist %s outside the decided range for %s", format_rat(ctx.a), d)
    return SpehDecision(True, False)


def is_dist_ess_speh(d: SpehDatum, ctx: DistinctionContext, universe: Universe) -> bool:
    return decide_ess_speh(d, ctx, universe).distinguished


def pole_set_transfer_check(L: LadderRep, a: RatLike, universe: Universe) -> bool:
    '''
    True iff neither nu^a nor nu^{-a} lies in S = {nu^{-1/2} b(Delta_i)}.

    Only a ladder on the trivial-character line can meet S.
    '''
    a = as_rat(a)
    if not L.segments or not universe.line(L.segments[0].line).trivial:
        return True
    poles = {s.a - HALF for s in L.segments}
    return a not in poles and -a not in poles


# ---------------------------------------------------------------------------
# right aligned shapes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Form1:
    '''Lengths 1^{i1} l^{i2} (l+1)^{i3}, with e(last)^v = b(Delta_{i1+1}).'''
    i1: int
    i2: int
    i3: int
    l: int | None


@dataclass(frozen=True)
class Form2:
    '''Lengths 1^{i1} 2^{i2}, with e(last)^v = b(Delta_1).'''
    i1: int
    i2: int


def _run(lengths: list[int], start: int, value: int) -> int:
    n = 0
    while start + n < len(lengths) and lengths[start + n] == value:
        n += 1
    return n


def _ends_dual_to_begin(last: Segment, other: Segment, universe: Universe) -> bool:
    return dual_point(last.end, universe) == other.begin


def shape_classify(L: LadderRep, universe: Universe) -> Form1 | Form2 | None:
    '''
    Match a ladder on a degree-1 line against the two shapes a
    distinguished right aligned representation can take.

    Args:
        L: The ladder.
        universe: Registry giving line degrees and duals.

    Returns:
        Form1 | Form2 | None: The first matching form, Form1 tried first.
    '''
    segs = L.segments
    if not segs:
        return Form1(0, 0, 0, None)
    if universe.line(segs[0].line).degree != 1:
        raise DomainError(f"Shape test needs a ladder on a degree-1 line, got {L}")

    lengths = [s.length for s in segs]
    t = len(lengths)
    i1 = _run(lengths, 0, 1)
    if i1 == t:
        return Form1(t, 0, 0, None)

    l = lengths[i1]
    i2 = _run(lengths, i1, l)
    i3 = _run(lengths, i1 + i2, l + 1)
    if i1 + i2 + i3 == t and _ends_dual_to_begin(segs[-1], segs[i1], universe):
        return Form1(i1, i2, i3, l)
    if i1 > 0 and l == 2 and i1 + i2 == t and _ends_dual_to_begin(segs[-1], segs[0], universe):
        return Form2(i1, i2)
    return None


# ---------------------------------------------------------------------------
# leaf screen used by the Speh product search
# ---------------------------------------------------------------------------

def aligned_screen(L: LadderRep, ctx: DistinctionContext, universe: Universe) -> bool:
    '''
    Necessary conditions for a left or right aligned ladder that is neither
    a character nor essentially Speh.

    At the special twist (p-q)/2 (left) or (q-p)/2 (right) such a ladder is
    never distinguished. Off the special twist, a ladder on a line of degree
    greater than 1 must have segments of one length and be self-dual; a
    right aligned ladder on a degree-1 line must have one of the two shapes.
    Ladders off the half-integer lattice are never self-dual, so the
    complementary series pieces fail here too.

    Returns:
        bool: False when L is ruled out; True for non-aligned ladders.
    '''
    left, right = is_left_aligned(L), is_right_aligned(L)
    if not (left or right):
        return True
    if left and ctx.a == Fraction(ctx.p - ctx.q, 2):
        return False
    if right and ctx.a == Fraction(ctx.q - ctx.p, 2):
        return False
    if universe.line(L.line).degree > 1:
        same_length = len({s.length for s in L.segments}) == 1
        return same_length and is_self_dual_rep(L, universe)
    if right:
        return shape_classify(L, universe) is not None
    return True


def leaf_screen(L: LadderRep, ctx: DistinctionContext, universe: Universe) -> bool:
    '''
    Necessary conditions for a ladder to be distinguished at ctx.

    Characters and essentially Speh ladders go through their criteria;
    aligned ladders go through aligned_screen.
    '''
    if not L.segments:
        return ctx.p == 0 and ctx.q == 0
    n = multiseg_degree(L, universe)
    if n != ctx.size:
        raise SizeMismatchError(f"Context {ctx} does not fit {L} of degree {n}")

    char = as_one_dimensional(L, universe)
    if char is not None:
        return is_dist_one_dimensional(char, ctx, universe)
    datum = speh_datum_of(L)
    if datum is not None:
        return is_dist_ess_speh(datum, ctx, universe)
    if ctx.p == 0 or ctx.q == 0:
        return False
    return aligned_screen(L, ctx, universe)


# ---------------------------------------------------------------------------
# unitary representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TadicFactor:
    '''
    Sp(delta, k) when alpha is None, else the complementary series
    nu^alpha Sp(delta, k) x nu^-alpha Sp(delta, k).
    '''
    datum: SpehDatum
    alpha: Fraction | None = None

    def __post_init__(self) -> None:
        if not self.datum.delta.centered:
            raise InvariantError(f"Tadic factor needs a centered segment, got {self.datum.delta}")
        if self.alpha is not None:
            alpha = as_rat(self.alpha)
            if not 0 < alpha < HALF:
                raise InvariantError(f"Complementary exponent {alpha} outside (0, 1/2)")
            object.__setattr__(self, "alpha", alpha)

    @property
    def is_complementary(self) -> bool:
        return self.alpha is not None

    def degree(self, universe: Universe) -> int:
        n = self.datum.k * universe.degree(self.datum.delta)
        return 2 * n if self.is_complementary else n

    def ladders(self) -> list[LadderRep]:
        L = make_speh(self.datum)
        if self.alpha is None:
            return [L]
        return [L.shift(self.alpha), L.shift(-self.alpha)]

    def sort_key(self) -> tuple:
        delta = self.datum.delta
        return (delta.line, delta.b, self.datum.k, self.alpha is not None, self.alpha or Fraction(0))

    def __str__(self) -> str:
        base = f"Sp({self.datum.delta},{self.datum.k})"
        return base if self.alpha is None else f"{base}[{format_rat(self.alpha)}]"


@dataclass(frozen=True)
class UnitaryRep:
    '''A Tadic decomposition: a multiset of factors kept in canonical order.'''
    factors: tuple[TadicFactor, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(sorted(self.factors, key=TadicFactor.sort_key)))

    def __iter__(self) -> Iterator[TadicFactor]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def degree(self, universe: Universe) -> int:
        return sum(f.degree(universe) for f in self.factors)

    def ladders(self) -> list[LadderRep]:
        return [L for f in self.factors for L in f.ladders()]

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors) if self.factors else "1"


def dual_factor(f: TadicFactor, universe: Universe) -> TadicFactor:
    return TadicFactor(SpehDatum(dual_segment(f.datum.delta, universe), f.datum.k), f.alpha)


def dual_unitary(u: UnitaryRep, universe: Universe) -> UnitaryRep:
    return UnitaryRep(tuple(dual_factor(f, universe) for f in u.factors))


def is_self_dual_unitary(u: UnitaryRep, universe: Universe) -> bool:
    return dual_unitary(u, universe) == u


def arthur_split(u: UnitaryRep) -> tuple[UnitaryRep, UnitaryRep]:
    return (
        UnitaryRep(tuple(f for f in u.factors if not f.is_complementary)),
        UnitaryRep(tuple(f for f in u.factors if f.is_complementary)),
    )


def arthur_order(u: UnitaryRep, universe: Universe) -> list[LadderRep]:
    '''
    Ladder expansion of u in the order the product search consumes it.

    Factors are grouped by the pair {line, dual line}; inside a group they
    are listed by increasing beginning b(pi), then increasing height.
    '''
    def key(L: LadderRep) -> tuple:
        line = L.segments[0].line
        group = min(line, universe.line(line).dual_id)
        return (group, L.segments[0].a, L.height, line)

    return sorted(u.ladders(), key=key)


def _self_dual_speh_fails(f: TadicFactor, universe: Universe) -> bool:
    n = f.degree(universe)
    if n % 2:
        return True
    return not is_dist_ess_speh(f.datum, DistinctionContext(n // 2, n // 2), universe)


def is_dist_unitary(u: UnitaryRep, universe: Universe) -> bool:
    '''
    H_{n,n}-distinction of a unitary representation of G_{2n}.

    Args:
        u: The Tadic decomposition.
        universe: Registry of lines.

    Returns:
        bool: True iff u is self-dual and every self-dual Speh factor that is
        not distinguished on its own occurs an even number of times.
    '''
    n = u.degree(universe)
    if n % 2:
        raise DomainError(f"Unitary classification needs even degree, got {n}")
    if not is_self_dual_unitary(u, universe):
        return False
    arthur, _ = arthur_split(u)
    counts = Counter(arthur.factors)
    for f, mult in counts.items():
        if dual_factor(f, universe) != f:
            continue
        if mult % 2 and _self_dual_speh_fails(f, universe):
            log.debug("%s fails with odd multiplicity %d", f, mult)
            return False
    return True
