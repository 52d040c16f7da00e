'''
Multisegments, ladders and Speh data.

A Multisegment is a multiset of nonempty segments stored in canonical order
(line id, then beginning descending, then end descending). On a single line
that order lists segments by decreasing beginnings, which is also the
standard order and the order ladders are written in.
'''

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import dual_segment
from .errors import InvariantError
from .models import Segment, is_integral
from .universe import Universe


def _canonical(segments: Iterable[Segment]) -> tuple[Segment, ...]:
    return tuple(sorted((s for s in segments if not s.is_empty), key=Segment.sort_key))


@dataclass(frozen=True)
class Multisegment:
    segments: tuple[Segment, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", _canonical(self.segments))

    @classmethod
    def of(cls, *segments: Segment) -> Multisegment:
        return cls(tuple(segments))

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    @property
    def lines(self) -> frozenset[str]:
        return frozenset(s.line for s in self.segments)

    def __str__(self) -> str:
        return " + ".join(str(s) for s in self.segments) if self.segments else "0"


def _ladder_violation(segments: tuple[Segment, ...]) -> str | None:
    if not segments:
        return None
    first = segments[0]
    for s in segments[1:]:
        if s.line != first.line:
            return "segments lie on different lines"
        if not is_integral(s.a - first.a):
            return "segments lie on different twists of the line"
    for upper, lower in zip(segments, segments[1:]):
        if not upper.a > lower.a:
            return "beginnings are not strictly decreasing"
        if not upper.b > lower.b:
            return "ends are not strictly decreasing"
    return None


@dataclass(frozen=True)
class LadderRep:
    '''
    A ladder: segments on one line with strictly decreasing beginnings and
    strictly decreasing ends. The empty ladder is the trivial representation
    of G_0.
    '''
    segments: tuple[Segment, ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted((s for s in self.segments if not s.is_empty), key=lambda s: -s.a))
        problem = _ladder_violation(ordered)
        if problem is not None:
            raise InvariantError(f"Not a ladder: {problem}")
        object.__setattr__(self, "segments", ordered)

    @classmethod
    def of(cls, *segments: Segment) -> LadderRep:
        return cls(tuple(segments))

    @classmethod
    def from_multisegment(cls, m: Multisegment) -> LadderRep:
        return cls(m.segments)

    def to_multisegment(self) -> Multisegment:
        return Multisegment(self.segments)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    @property
    def height(self) -> int:
        return len(self.segments)

    @property
    def line(self) -> str | None:
        return self.segments[0].line if self.segments else None

    @property
    def begins(self) -> tuple[Fraction, ...]:
        return tuple(s.a for s in self.segments)

    @property
    def ends(self) -> tuple[Fraction, ...]:
        return tuple(s.b for s in self.segments)

    def shift(self, x: Fraction) -> LadderRep:
        return LadderRep(tuple(s.shift(x) for s in self.segments))

    def __str__(self) -> str:
        return " + ".join(str(s) for s in self.segments) if self.segments else "0"


@dataclass(frozen=True)
class SpehDatum:
    '''(delta, k): k copies of delta shifted by (k-1)/2, (k-3)/2, ..., -(k-1)/2.'''
    delta: Segment
    k: int

    def __post_init__(self) -> None:
        if self.delta.is_empty:
            raise InvariantError("Speh datum needs a nonempty segment")
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise InvariantError(f"Speh height must be a positive integer, got {self.k!r}")

    def __str__(self) -> str:
        return f"Sp({self.delta},{self.k})"


Shaped = Union[Multisegment, LadderRep]


def multiseg_degree(m: Shaped, universe: Universe) -> int:
    return sum(universe.degree(s) for s in m.segments)


def dual_multisegment(m: Multisegment, universe: Universe) -> Multisegment:
    return Multisegment(tuple(dual_segment(s, universe) for s in m.segments))


def dual_ladder(L: LadderRep, universe: Universe) -> LadderRep:
    return LadderRep(tuple(dual_segment(s, universe) for s in L.segments))


def standard_order(m: Multisegment) -> tuple[Segment, ...]:
    '''
    An ordering with no segment preceding a later one.

    Within a line, a segment can only precede segments that begin higher,
    so listing by decreasing beginnings is standard; lines are independent.
    '''
    return m.segments


def is_ladder(m: Shaped) -> bool:
    return _ladder_violation(tuple(sorted(m.segments, key=lambda s: -s.a))) is None


def _sorted_if_ladder(m: Shaped) -> tuple[Segment, ...] | None:
    if not is_ladder(m):
        return None
    return tuple(sorted(m.segments, key=lambda s: -s.a))


def is_left_aligned(m: Shaped) -> bool:
    segs = _sorted_if_ladder(m)
    if segs is None:
        return False
    return all(upper.a == lower.a + 1 for upper, lower in zip(segs, segs[1:]))


def is_right_aligned(m: Shaped) -> bool:
    segs = _sorted_if_ladder(m)
    if segs is None:
        return False
    return all(upper.b == lower.b + 1 for upper, lower in zip(segs, segs[1:]))


def is_ess_speh(m: Shaped) -> bool:
    return is_left_aligned(m) and is_right_aligned(m)


def make_speh(d: SpehDatum) -> LadderRep:
    k = d.k
    return LadderRep(tuple(d.delta.shift(Fraction(k - 1 - 2 * j, 2)) for j in range(k)))


def speh_datum_of(m: Shaped) -> SpehDatum | None:
    '''
    Recover (delta, k) from an essentially Speh multisegment.

    Returns:
        SpehDatum | None: The datum, or None when m is empty or not
        essentially Speh.
    '''
    if not m.segments or not is_ess_speh(m):
        return None
    segs = sorted(m.segments, key=lambda s: -s.a)
    k = len(segs)
    return SpehDatum(segs[0].shift(-Fraction(k - 1, 2)), k)


def is_self_dual_rep(m: Shaped, universe: Universe) -> bool:
    ms = m if isinstance(m, Multisegment) else m.to_multisegment()
    return dual_multisegment(ms, universe) == ms


def central_exponent(m: Shaped, universe: Universe) -> Fraction:
    '''
    Sum over segments of d * (a + (a+1) + ... + b), d the line degree.

    Args:
        m: The multisegment.
        universe: Registry giving line degrees.

    Returns:
        Fraction: The raw exponent sum; 0 for self-dual input.
    '''
    total = Fraction(0)
    for s in m.segments:
        d = universe.line(s.line).degree
        total += d * s.length * (s.a + s.b) / 2
    return total
