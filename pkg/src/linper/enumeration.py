'''
Generators and brute-force oracles.

Arthur-type and unitary representations are enumerated as multisets of
Tadic factors drawn from the universe within its caps. The crosscheck
compares the closed-form unitary classification against an exhaustive
pairing search and against the product necessity search.
'''

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterator, Sequence
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

from sympy.utilities.iterables import partitions

from .distinction import (
    TadicFactor,
    UnitaryRep,
    arthur_order,
    arthur_split,
    dual_factor,
    is_dist_ess_speh,
    is_dist_unitary,
    is_self_dual_unitary,
)
from .errors import DomainError
from .models import DistinctionContext, Segment
from .multiseg import SpehDatum
from .search import SpehProductSearch
from .universe import Universe

log = logging.getLogger(__name__)


def _centered(line: str, length: int) -> Segment:
    half = Fraction(length - 1, 2)
    return Segment(line, -half, half)


def _in_window(factor: TadicFactor, universe: Universe) -> bool:
    lo, hi = universe.window
    for L in factor.ladders():
        if L.segments[-1].a < lo or L.segments[0].b > hi:
            return False
    return True


def speh_atoms(universe: Universe, max_degree: int) -> list[TadicFactor]:
    '''
    Speh factors Sp(St(rho, l), k) of degree at most max_degree.

    Args:
        universe: Lines, caps and exponent window.
        max_degree: Degree bound.

    Returns:
        list[TadicFactor]: The atoms in canonical factor order.
    '''
    out = []
    for line in universe.lines:
        for length in range(1, universe.max_length + 1):
            for k in range(1, universe.max_height + 1):
                if k * length * line.degree > max_degree:
                    break
                atom = TadicFactor(SpehDatum(_centered(line.id, length), k))
                if _in_window(atom, universe):
                    out.append(atom)
    return sorted(out, key=TadicFactor.sort_key)


def complementary_atoms(universe: Universe, max_degree: int) -> list[TadicFactor]:
    out = []
    for atom in speh_atoms(universe, max_degree // 2):
        for alpha in universe.alphas:
            comp = TadicFactor(atom.datum, alpha)
            if _in_window(comp, universe):
                out.append(comp)
    return sorted(out, key=TadicFactor.sort_key)


def _multisets(
    atoms: Sequence[TadicFactor], degrees: Sequence[int], target: int, start: int = 0
) -> Iterator[tuple[TadicFactor, ...]]:
    if target == 0:
        yield ()
        return
    for i in range(start, len(atoms)):
        d = degrees[i]
        if d > target:
            continue
        for rest in _multisets(atoms, degrees, target - d, i):
            yield (atoms[i], *rest)


def _check_degree(degree: int) -> None:
    if isinstance(degree, bool) or not isinstance(degree, int) or degree < 0:
        raise DomainError(f"Degree must be a nonnegative integer, got {degree!r}")


def gen_arthur_reps(universe: Universe, degree: int) -> list[UnitaryRep]:
    '''
    All Arthur-type representations of G_degree built from the universe.

    Returns:
        list[UnitaryRep]: Duplicate-free; degree 0 gives the empty product.
    '''
    _check_degree(degree)
    atoms = speh_atoms(universe, degree)
    degrees = [a.degree(universe) for a in atoms]
    return [UnitaryRep(m) for m in _multisets(atoms, degrees, degree)]


def count_arthur_reps(universe: Universe, degree: int) -> int:
    '''
    Count Arthur-type representations without generating them.

    Multisets of atoms of total degree n are counted by splitting n into
    an integer partition and choosing, for each part size m occurring j
    times, a multiset of j atoms among the c_m atoms of degree m.
    '''
    _check_degree(degree)
    by_degree: dict[int, int] = defaultdict(int)
    for atom in speh_atoms(universe, degree):
        by_degree[atom.degree(universe)] += 1
    total = 0
    for part in partitions(degree):
        ways = 1
        for m, j in part.items():
            ways *= comb(by_degree[m] + j - 1, j)
        total += ways
    return total


def gen_unitary_reps(universe: Universe, degree: int) -> list[UnitaryRep]:
    '''Unitary representations: Arthur factors plus complementary series.'''
    _check_degree(degree)
    atoms = speh_atoms(universe, degree) + complementary_atoms(universe, degree)
    degrees = [a.degree(universe) for a in atoms]
    return [UnitaryRep(m) for m in _multisets(atoms, degrees, degree)]


def brute_force_form_match(arthur: UnitaryRep, universe: Universe) -> bool:
    '''
    Search for a split of the factors into dual pairs {sigma, sigma^v} and
    singletons distinguished at their own (m, m, 0).
    '''
    if any(f.is_complementary for f in arthur.factors):
        raise DomainError("Form matching needs an Arthur-type representation")

    def singleton_ok(f: TadicFactor) -> bool:
        n = f.degree(universe)
        return n % 2 == 0 and is_dist_ess_speh(f.datum, DistinctionContext(n // 2, n // 2), universe)

    def match(factors: tuple[TadicFactor, ...]) -> bool:
        if not factors:
            return True
        head, rest = factors[0], factors[1:]
        if singleton_ok(head) and match(rest):
            return True
        partner = dual_factor(head, universe)
        for i, f in enumerate(rest):
            if f == partner and match(rest[:i] + rest[i + 1:]):
                return True
        return False

    return match(arthur.factors)


@dataclass
class DegreeSummary:
    degree: int
    instances: int = 0
    recount: int = 0
    distinguished: int = 0
    complementary_instances: int = 0
    complementary_distinguished: int = 0


@dataclass
class CrosscheckReport:
    max_degree: int
    degrees: list[DegreeSummary] = field(default_factory=list)
    discrepancies: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_degree": self.max_degree,
            "ok": self.ok,
            "degrees": [asdict(d) for d in self.degrees],
            "discrepancies": list(self.discrepancies),
        }


def _check_rep(
    u: UnitaryRep, universe: Universe, search: SpehProductSearch, summary: DegreeSummary, report: CrosscheckReport
) -> bool:
    n = summary.degree
    dist = is_dist_unitary(u, universe)
    arthur, _ = arthur_split(u)
    oracle = is_self_dual_unitary(u, universe) and brute_force_form_match(arthur, universe)
    if dist != oracle:
        report.discrepancies.append(
            {"degree": n, "rep": str(u), "kind": "oracle", "closed_form": dist, "brute_force": oracle}
        )
    if dist:
        verdict = search.run(arthur_order(u, universe), DistinctionContext(n // 2, n // 2))
        if not verdict.possible:
            report.discrepancies.append({"degree": n, "rep": str(u), "kind": "necessity", "search": verdict.status.value})
    return dist


def crosscheck(universe: Universe, max_degree: int, include_complementary: bool = True) -> CrosscheckReport:
    '''
    Run the classification oracles over every even degree up to max_degree.

    Args:
        universe: Lines and caps to enumerate from.
        max_degree: Largest degree checked.
        include_complementary: Also check representations with
            complementary-series factors.

    Returns:
        CrosscheckReport: Per-degree counts and discrepancies; degrees
        without instances are left out.
    '''
    _check_degree(max_degree)
    report = CrosscheckReport(max_degree)
    search = SpehProductSearch(universe)
    for n in range(2, max_degree + 1, 2):
        summary = DegreeSummary(n)
        reps = gen_arthur_reps(universe, n)
        summary.instances = len(reps)
        summary.recount = count_arthur_reps(universe, n)
        if summary.recount != summary.instances:
            report.discrepancies.append(
                {"degree": n, "kind": "count", "generated": summary.instances, "recount": summary.recount}
            )
        for u in reps:
            if _check_rep(u, universe, search, summary, report):
                summary.distinguished += 1

        if include_complementary:
            for u in gen_unitary_reps(universe, n):
                if not any(f.is_complementary for f in u.factors):
                    continue
                summary.complementary_instances += 1
                if _check_rep(u, universe, search, summary, report):
                    summary.complementary_distinguished += 1

        log.info(
            "degree %d: %d Arthur-type, %d distinguished, %d with complementary factors",
            n, summary.instances, summary.distinguished, summary.complementary_instances,
        )
        if summary.instances or summary.complementary_instances:
            report.degrees.append(summary)
    return report
