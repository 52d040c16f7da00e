'''
Domain models for linper

This module defines the value types shared by every other module: exact
rationals, cuspidal lines, cuspidal points, segments and distinction
contexts. The models validate themselves on construction and contain no
I/O or CLI-related logic.
'''

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .errors import InvariantError

RatLike = Union[int, str, Fraction]

HALF = Fraction(1, 2)


def as_rat(value: RatLike) -> Fraction:
    '''
    Convert an int, a Fraction or a "p/q" string into an exact rational.

    Args:
        value: The value to convert.

    Returns:
        Fraction: The reduced rational.
    '''
    if isinstance(value, bool):
        raise InvariantError(f"Not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        # Fraction() also accepts decimals and exponents; exponents here are exact only
        if not text or any(ch in text for ch in ".eE_ "):
            raise InvariantError(f'Not a rational number: "{value}"')
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise InvariantError(f'Not a rational number: "{value}"') from None
    raise InvariantError(f"Not a rational number: {value!r}")


def is_integral(x: Fraction) -> bool:
    return x.denominator == 1


def format_rat(x: Fraction) -> str:
    return str(x)


class PoleType(str, Enum):
    SYMMETRIC = "symmetric"
    EXTERIOR = "exterior"


class PoleParity(str, Enum):
    '''
    Which square L-factor pole makes St(rho, l) distinguished for odd l.

    The even-length case always uses the other pole.
    '''
    ODD_EXTERIOR = "odd-exterior"
    ODD_SYMMETRIC = "odd-symmetric"

    def pole_for_length(self, length: int) -> PoleType:
        odd = length % 2 == 1
        if self is PoleParity.ODD_EXTERIOR:
            return PoleType.EXTERIOR if odd else PoleType.SYMMETRIC
        return PoleType.SYMMETRIC if odd else PoleType.EXTERIOR


@dataclass(frozen=True)
class CuspidalLine:
    '''
    A symbolic cuspidal line Z rho.

    The base point of every line is unitary, so the contragredient of
    nu^x rho sits on the dual line at exponent -x.
    '''
    id: str
    degree: int
    dual_id: str
    pole_type: PoleType | None = None
    trivial: bool = False

    @property
    def self_dual(self) -> bool:
        return self.dual_id == self.id


@dataclass(frozen=True)
class CuspidalPoint:
    line: str
    exponent: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", as_rat(self.exponent))

    def __str__(self) -> str:
        return f"{format_rat(self.exponent)}@{self.line}"


@dataclass(frozen=True)
class Segment:
    '''
    The segment [a, b] on a cuspidal line.

    b - a must be an integer >= -1; b = a - 1 is the empty segment, which
    stands for the trivial representation of G_0.
    '''
    line: str
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        a = as_rat(self.a)
        b = as_rat(self.b)
        span = b - a
        if not is_integral(span):
            raise InvariantError(
                f"Segment [{format_rat(a)},{format_rat(b)}]@{self.line}: span {span} is not an integer"
            )
        if span < -1:
            raise InvariantError(
                f"Segment [{format_rat(a)},{format_rat(b)}]@{self.line}: end lies below beginning - 1"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def length(self) -> int:
        return int(self.b - self.a) + 1

    @property
    def is_empty(self) -> bool:
        return self.b == self.a - 1

    @property
    def begin(self) -> CuspidalPoint:
        return CuspidalPoint(self.line, self.a)

    @property
    def end(self) -> CuspidalPoint:
        return CuspidalPoint(self.line, self.b)

    @property
    def centered(self) -> bool:
        return self.a + self.b == 0

    def shift(self, x: RatLike) -> Segment:
        x = as_rat(x)
        return Segment(self.line, self.a + x, self.b + x)

    def sort_key(self) -> tuple[str, Fraction, Fraction]:
        return (self.line, -self.a, -self.b)

    def __str__(self) -> str:
        return f"[{format_rat(self.a)},{format_rat(self.b)}]@{self.line}"


@dataclass(frozen=True)
class DistinctionContext:
    '''
    The pair (H_{p,q}, mu_a): the subgroup G_p x G_q and the twist
    mu_a(g1, g2) = nu^a(g1) nu^{-a}(g2).
    '''
    p: int
    q: int
    a: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or isinstance(self.q, bool):
            raise InvariantError("Context sizes must be integers")
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise InvariantError("Context sizes must be integers")
        if self.p < 0 or self.q < 0:
            raise InvariantError(f"Context sizes must be nonnegative, got ({self.p},{self.q})")
        object.__setattr__(self, "a", as_rat(self.a))

    @property
    def size(self) -> int:
        return self.p + self.q

    def swapped(self) -> DistinctionContext:
        return DistinctionContext(self.q, self.p, -self.a)

    def twisted_dual(self) -> DistinctionContext:
        return DistinctionContext(self.p, self.q, -self.a)

    def __str__(self) -> str:
        return f"({self.p},{self.q},{format_rat(self.a)})"
