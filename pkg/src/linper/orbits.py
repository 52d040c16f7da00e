'''
Parabolic orbits on the linear symmetric space G_n / (G_p x G_q).

Only the exponent data of the modulus characters is computed. Orbit
representatives are never realized as matrices.
'''

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import DomainError, InvariantError, SizeMismatchError
from .models import DistinctionContext, RatLike, as_rat


@dataclass(frozen=True)
class OrbitDatum:
    r: int
    s: int
    defect: int


def _check_sizes(*values: int) -> None:
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise InvariantError(f"Sizes must be nonnegative integers, got {v!r}")


def is_orbit(r: int, s: int, k: int, p: int, q: int) -> bool:
    return r >= 0 and s >= 0 and r + s <= k and k - s <= p and k - r <= q


def enumerate_orbits(k: int, p: int, q: int) -> list[OrbitDatum]:
    '''
    Orbits (r, s) for the parabolic of type (k, p + q - k).

    Args:
        k: Size of the first block.
        p: Size of the first factor of H.
        q: Size of the second factor of H.

    Returns:
        list[OrbitDatum]: The orbits ordered by (r, s), each with defect k - r - s.
    '''
    _check_sizes(k, p, q)
    return [
        OrbitDatum(r, s, k - r - s)
        for r in range(k + 1)
        for s in range(k + 1 - r)
        if is_orbit(r, s, k, p, q)
    ]


@dataclass(frozen=True)
class AdmissibleDatum:
    '''
    An involution tau of the blocks (0-based images) with n_i = n_tau(i),
    and a split (n_i+, n_i-) at every fixed point (None elsewhere).
    '''
    tau: tuple[int, ...]
    splits: tuple[tuple[int, int] | None, ...]

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.tau) if i == j]

    def validate(self, nbar: Sequence[int], p: int | None = None, q: int | None = None) -> None:
        '''
        Check the datum against block sizes and, when given, against (p, q).

        Raises:
            DomainError: If the datum is not admissible.
        '''
        t = len(nbar)
        if len(self.tau) != t or len(self.splits) != t:
            raise DomainError(f"Datum has {len(self.tau)} blocks, composition has {t}")
        for i, j in enumerate(self.tau):
            if not 0 <= j < t or self.tau[j] != i:
                raise DomainError(f"tau is not an involution at block {i + 1}")
            if nbar[i] != nbar[j]:
                raise DomainError(f"tau pairs blocks {i + 1} and {j + 1} of different sizes")
            split = self.splits[i]
            if i == j:
                if split is None:
                    raise DomainError(f"Fixed block {i + 1} needs a split")
                plus, minus = split
                if plus < 0 or minus < 0 or plus + minus != nbar[i]:
                    raise DomainError(f"Split {split} does not add up to n_{i + 1} = {nbar[i]}")
            elif split is not None:
                raise DomainError(f"Swapped block {i + 1} cannot carry a split")
        if p is None or q is None:
            return
        paired = sum(nbar[i] for i, j in enumerate(self.tau) if i < j)
        plus_total = sum(sp[0] for sp in self.splits if sp is not None)
        minus_total = sum(sp[1] for sp in self.splits if sp is not None)
        if plus_total + paired != p or minus_total + paired != q:
            raise DomainError(f"Datum does not match (p, q) = ({p}, {q})")


def _involutions(nbar: Sequence[int]) -> Iterator[tuple[int, ...]]:
    t = len(nbar)

    def extend(tau: list[int | None]) -> Iterator[tuple[int, ...]]:
        try:
            i = tau.index(None)
        except ValueError:
            yield tuple(j for j in tau if j is not None)
            return
        tau[i] = i
        yield from extend(tau)
        for j in range(i + 1, t):
            if tau[j] is None and nbar[j] == nbar[i]:
                tau[i], tau[j] = j, i
                yield from extend(tau)
                tau[j] = None
        tau[i] = None

    yield from extend([None] * t)


def enumerate_admissible(nbar: Sequence[int], p: int, q: int) -> list[AdmissibleDatum]:
    '''
    All admissible pairs (c_tau, tau) for the block sizes nbar.

    Args:
        nbar: Block sizes of the standard Levi.
        p: Size of the first factor of H.
        q: Size of the second factor of H.

    Returns:
        list[AdmissibleDatum]: Involutions in generation order, splits in
        lexicographic order of the plus parts.
    '''
    _check_sizes(p, q, *nbar)
    if sum(nbar) != p + q:
        raise SizeMismatchError(f"Composition sums to {sum(nbar)}, expected p + q = {p + q}")
    out = []
    for tau in _involutions(nbar):
        fixed = [i for i, j in enumerate(tau) if i == j]
        paired = sum(nbar[i] for i, j in enumerate(tau) if i < j)
        for pluses in product(*(range(nbar[i] + 1) for i in fixed)):
            if sum(pluses) + paired != p:
                continue
            splits: list[tuple[int, int] | None] = [None] * len(nbar)
            for i, plus in zip(fixed, pluses):
                splits[i] = (plus, nbar[i] - plus)
            datum = AdmissibleDatum(tau, tuple(splits))
            datum.validate(nbar, p, q)
            out.append(datum)
    return out


def block_labels(d: AdmissibleDatum) -> list[str]:
    labels = []
    for i, j in enumerate(d.tau):
        if i == j:
            labels += [f"A{i + 1}+", f"A{i + 1}-"]
        else:
            labels.append(f"A{i + 1}")
    return labels


def admissible_exponents(d: AdmissibleDatum, nbar: Sequence[int]) -> dict[str, Fraction]:
    '''
    Exponent of nu on each block of M_x in delta_{P_x} delta_P^{-1/2}.

    Blocks of a fixed point carry their own variables A_i+ and A_i-; an
    exponent on the whole block A_i applies to both.

    Args:
        d: The admissible datum.
        nbar: Block sizes.

    Returns:
        dict[str, Fraction]: Exponents keyed by block label ("A1+", "A2", ...).
    '''
    d.validate(nbar)
    table = {label: Fraction(0) for label in block_labels(d)}

    def bump(i: int, x: Fraction) -> None:
        if d.tau[i] == i:
            table[f"A{i + 1}+"] += x
            table[f"A{i + 1}-"] += x
        else:
            table[f"A{i + 1}"] += x

    t = len(nbar)
    for i in range(t):
        for j in range(i + 1, t):
            si, sj = d.splits[i], d.splits[j]
            if si is not None and sj is not None:
                table[f"A{i + 1}+"] += Fraction(sj[0] - sj[1], 2)
                table[f"A{i + 1}-"] += Fraction(sj[1] - sj[0], 2)
                table[f"A{j + 1}+"] += Fraction(si[1] - si[0], 2)
                table[f"A{j + 1}-"] += Fraction(si[0] - si[1], 2)
            if d.tau[i] > d.tau[j]:
                bump(i, Fraction(-nbar[j], 2))
                bump(j, Fraction(nbar[i], 2))
    return table


@dataclass(frozen=True)
class OrbitContexts:
    '''
    What the orbit (r, s) asks of the Jacquet data rho_1 (x) rho_2 of the
    first factor and rho_3 (x) rho_4 of the second: rho_2 is the
    contragredient of rho_3 (a condition only when defect > 0), rho_1 and
    rho_4 are distinguished for the given contexts.
    '''
    defect: int
    rho1: DistinctionContext
    rho4: DistinctionContext


def general_orbit_exponents(r: int, s: int, k: int, p: int, q: int, a: RatLike) -> OrbitContexts:
    _check_sizes(r, s, k, p, q)
    if not is_orbit(r, s, k, p, q):
        raise DomainError(f"(r, s) = ({r}, {s}) is not an orbit for k={k}, p={p}, q={q}")
    a = as_rat(a)
    return OrbitContexts(
        defect=k - r - s,
        rho1=DistinctionContext(r, s, a + Fraction(p + s - q - r, 2)),
        rho4=DistinctionContext(p + s - k, q + r - k, a + Fraction(s - r, 2)),
    )
