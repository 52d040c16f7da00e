'''
Structural combinatorics of ladders.

Divisions and the Jacquet modules they index, derivatives of left aligned
ladders, the kernel of the standard module, the commutativity test for
products with a Speh factor, and the contingency tables Mat^{alpha,beta}
indexing composition factors of Jacquet modules of products.
'''

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvariantError, SizeMismatchError
from .models import HALF, Segment
from .multiseg import LadderRep, Multisegment, SpehDatum, is_left_aligned, is_right_aligned, make_speh
from .universe import Universe


@dataclass(frozen=True)
class Division:
    '''
    A division pi = pi' |_| pi'' of a ladder by cut points c_1 > ... > c_t,
    a_i - 1 <= c_i <= b_i. The left part is {[a_i, c_i]} and the right part
    is {[c_i + 1, b_i]}, empty segments dropped.
    '''
    parent: LadderRep
    cuts: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        segs = self.parent.segments
        if len(self.cuts) != len(segs):
            raise InvariantError("A division needs one cut per segment")
        for s, c in zip(segs, self.cuts):
            if not (s.a - 1 <= c <= s.b) or (c - s.a).denominator != 1:
                raise InvariantError(f"Cut {c} is not admissible for {s}")
        for upper, lower in zip(self.cuts, self.cuts[1:]):
            if not upper > lower:
                raise InvariantError("Cuts must be strictly decreasing")

    @property
    def left(self) -> LadderRep:
        return LadderRep(tuple(Segment(s.line, s.a, c) for s, c in zip(self.parent.segments, self.cuts)))

    @property
    def right(self) -> LadderRep:
        return LadderRep(tuple(Segment(s.line, c + 1, s.b) for s, c in zip(self.parent.segments, self.cuts)))

    def right_degree(self, universe: Universe) -> int:
        return sum(universe.degree(Segment(s.line, c + 1, s.b)) for s, c in zip(self.parent.segments, self.cuts))

    def degree_split(self, universe: Universe) -> tuple[int, int]:
        '''(degree of the right part, degree of the left part).'''
        right = self.right_degree(universe)
        total = sum(universe.degree(s) for s in self.parent.segments)
        return right, total - right

    def __str__(self) -> str:
        return f"{self.left} | {self.right}"


def _cut_vectors(segments: Sequence[Segment], upper: Fraction | None) -> Iterator[tuple[Fraction, ...]]:
    if not segments:
        yield ()
        return
    s = segments[0]
    c = s.a - 1
    while c <= s.b:
        if upper is not None and c >= upper:
            break
        for rest in _cut_vectors(segments[1:], c):
            yield (c, *rest)
        c += 1


def divisions(L: LadderRep, universe: Universe, jacquet_degree: int | None = None) -> list[Division]:
    '''
    Enumerate divisions of a ladder, lexicographically in the cut vector.

    Args:
        L: The ladder.
        universe: Registry giving the line degree.
        jacquet_degree: When given, keep only divisions whose right part (the
            first tensor slot of the Jacquet module) has this degree.

    Returns:
        list[Division]: The divisions.
    '''
    if jacquet_degree is not None:
        total = sum(universe.degree(s) for s in L.segments)
        if jacquet_degree < 0 or jacquet_degree > total:
            raise SizeMismatchError(f"Degree {jacquet_degree} outside 0..{total}")
    out = []
    for cuts in _cut_vectors(L.segments, None):
        div = Division(L, cuts)
        if jacquet_degree is None or div.right_degree(universe) == jacquet_degree:
            out.append(div)
    return out


def jacquet_ladder(L: LadderRep, k: int, universe: Universe) -> list[tuple[LadderRep, LadderRep]]:
    '''
    Jacquet module of L(m) along the parabolic of type (k, n - k).

    Returns:
        list[tuple[LadderRep, LadderRep]]: Pairs (pi_2, pi_1) with pi_2 of
        degree k, one per division.
    '''
    return [(div.right, div.left) for div in divisions(L, universe, jacquet_degree=k)]


def jacquet_segment(s: Segment, k: int, universe: Universe) -> tuple[Segment, Segment] | None:
    '''
    Jacquet module of a segment: ([c + 1, b], [a, c]) with k = d (b - c), or
    None when no admissible cut gives degree k.
    '''
    if s.is_empty:
        raise DomainError("Jacquet module of the empty segment")
    if k < 0:
        raise SizeMismatchError(f"Negative degree {k}")
    d = universe.line(s.line).degree
    if k % d:
        return None
    r = k // d
    if r > s.length:
        return None
    c = s.b - r
    return Segment(s.line, c + 1, s.b), Segment(s.line, s.a, c)


@dataclass(frozen=True)
class MatMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.entries))


def _compositions(total: int, bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not bounds:
        if total == 0:
            yield ()
        return
    head, rest = bounds[0], bounds[1:]
    room = sum(rest)
    for x in range(max(0, total - room), min(head, total) + 1):
        for tail in _compositions(total - x, rest):
            yield (x, *tail)


def _fill_rows(alpha: Sequence[int], remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not alpha:
        if not any(remaining):
            yield ()
        return
    for row in _compositions(alpha[0], remaining):
        left = tuple(r - x for r, x in zip(remaining, row))
        for rest in _fill_rows(alpha[1:], left):
            yield (row, *rest)


def mat_matrices(alpha: Sequence[int], beta: Sequence[int]) -> list[MatMatrix]:
    '''
    All nonnegative integer matrices with row sums alpha and column sums beta.

    Args:
        alpha: Row margins.
        beta: Column margins.

    Returns:
        list[MatMatrix]: The matrices, filled row by row.
    '''
    for x in (*alpha, *beta):
        if isinstance(x, bool) or not isinstance(x, int) or x < 0:
            raise InvariantError(f"Margins must be nonnegative integers, got {x!r}")
    if sum(alpha) != sum(beta):
        raise SizeMismatchError(f"Margin sums differ: {sum(alpha)} != {sum(beta)}")
    return [MatMatrix(rows) for rows in _fill_rows(tuple(alpha), tuple(beta))]


def derivative(L: LadderRep, k: int, universe: Universe) -> LadderRep | None:
    '''
    k-th derivative of a left aligned ladder.

    Zero (None) unless the line degree d divides k; for k = r d the first
    segment's beginning moves up by r, the rest is unchanged.
    '''
    if not is_left_aligned(L):
        raise DomainError(f"Derivative needs a left aligned ladder, got {L}")
    if k < 0:
        raise SizeMismatchError(f"Negative derivative order {k}")
    if not L.segments:
        return L if k == 0 else None
    d = universe.line(L.segments[0].line).degree
    if k % d:
        return None
    r = k // d
    top = L.segments[0]
    if r > top.length:
        return None
    return LadderRep((Segment(top.line, top.a + r, top.b), *L.segments[1:]))


def highest_derivative_speh(d: SpehDatum) -> tuple[Fraction, SpehDatum | None]:
    '''
    The highest derivative of Sp(delta, k) removes the top segment; after a
    nu^{1/2} twist it is Sp(delta, k - 1), None when k = 1.
    '''
    return HALF, (SpehDatum(d.delta, d.k - 1) if d.k > 1 else None)


def kernel_products(L: LadderRep) -> list[tuple[Segment, ...] | None]:
    '''
    The ordered products K_i of the standard module kernel.

    K_i swaps the ends of the i-th and (i+1)-th segments:
    Delta_1 x ... x [a_{i+1}, b_i] x [a_i, b_{i+1}] x ... x Delta_t,
    and is zero (None) when a_i > b_{i+1} + 1. Empty segments are dropped.
    '''
    segs = L.segments
    out: list[tuple[Segment, ...] | None] = []
    for i in range(len(segs) - 1):
        upper, lower = segs[i], segs[i + 1]
        if upper.a > lower.b + 1:
            out.append(None)
            continue
        swapped = (Segment(upper.line, lower.a, upper.b), Segment(upper.line, upper.a, lower.b))
        product = (*segs[:i], *swapped, *segs[i + 2:])
        out.append(tuple(s for s in product if not s.is_empty))
    return out


def standard_module_kernel(L: LadderRep) -> list[Multisegment | None]:
    return [None if p is None else Multisegment(p) for p in kernel_products(L)]


def commutes(m1: SpehDatum, m2: LadderRep) -> bool:
    '''
    Irreducibility test for Sp(m1) x L(m2) with m2 right aligned.

    Both conditions compare the lowest segments of the two ladders:
    equal ends together with t_2 <= t_1, or equal ends together with
    b(Delta_{1,t_1}) <= b(Delta_{2,t_2}).
    '''
    if not is_right_aligned(m2):
        raise DomainError(f"Second factor must be right aligned, got {m2}")
    if not m2.segments:
        return True
    L1 = make_speh(m1)
    last1, last2 = L1.segments[-1], m2.segments[-1]
    if last1.end != last2.end:
        return False
    return m2.height <= L1.height or last1.a <= last2.a
