'''
Expression language for representations and contexts.

Grammar (whitespace-insensitive):

    seg   := '[' rat ',' rat ']' '@' ident
    rat   := '-'? int ('/' posint)?
    mseg  := seg ('+' seg)*
    speh  := 'Sp(' seg ',' posint ')' ('[' rat ']')?
    term  := speh | mseg
    prod  := term (('x' | '*' | '×') term)*
    ctx   := '(' int ',' int ',' rat ')'

A single term parses to itself; two or more terms give a ProductExpr.
An "x" before "[" or "Sp(" (spaces allowed) is always the product sign, so
"[0,0]@chix[0,0]@chi" is a product on chi; a line id may still end in
"x" anywhere else.
format_expr prints the canonical form, so printing a parsed printout
returns the same text.
'''

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ExpressionSyntaxError, InvalidInputError, InvariantError, UnknownLineError
from .models import DistinctionContext, Segment, format_rat
from .multiseg import LadderRep, Multisegment, SpehDatum, make_speh
from .universe import Universe

# an "x" right before "[" or "Sp(" is the product sign, also when glued to a line id
_NEXT_TERM = r"\s*(?:\[|Sp\s*\()"
_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+)"
    rf"|(?P<times>x(?={_NEXT_TERM}))"
    rf"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*?(?=x{_NEXT_TERM}|[^A-Za-z0-9_]|$))"
    r"|(?P<op>[\[\](),@+/\-*×])"
)
_PRODUCT_OPS = ("x", "*", "×")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExpressionSyntaxError(f'Unexpected character "{text[pos]}"', pos)
        kind = m.lastgroup or ""
        if kind == "times":
            kind = "op"
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


@dataclass(frozen=True)
class SpehTerm:
    datum: SpehDatum
    alpha: Fraction | None = None

    def ladders(self) -> list[LadderRep]:
        L = make_speh(self.datum)
        return [L] if self.alpha is None else [L.shift(self.alpha), L.shift(-self.alpha)]


Term = Union[Multisegment, SpehTerm]


@dataclass(frozen=True)
class ProductExpr:
    factors: tuple[Term, ...]


@dataclass(frozen=True)
class ContextExpr:
    context: DistinctionContext


Expr = Union[Multisegment, SpehTerm, ProductExpr, ContextExpr]


class _Parser:
    def __init__(self, text: str, universe: Universe | None):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.universe = universe

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _fail(self, what: str) -> ExpressionSyntaxError:
        found = self.tok.text or "end of input"
        return ExpressionSyntaxError(f'Expected {what}, found "{found}"', self.tok.pos)

    def expect(self, text: str) -> Token:
        if self.tok.text != text:
            raise self._fail(f'"{text}"')
        t = self.tok
        self.i += 1
        return t

    def accept(self, text: str) -> bool:
        if self.tok.text == text:
            self.i += 1
            return True
        return False

    def integer(self) -> int:
        if self.tok.kind != "num":
            raise self._fail("an integer")
        value = int(self.tok.text)
        self.i += 1
        return value

    def rat(self) -> Fraction:
        sign = -1 if self.accept("-") else 1
        num = self.integer()
        if self.accept("/"):
            pos = self.tok.pos
            den = self.integer()
            if den == 0:
                raise ExpressionSyntaxError("Zero denominator", pos)
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def ident(self) -> str:
        if self.tok.kind != "ident":
            raise self._fail("a line id")
        t = self.tok
        self.i += 1
        if self.universe is not None and t.text not in self.universe:
            raise UnknownLineError(t.text)
        return t.text

    def segment(self) -> Segment:
        self.expect("[")
        a = self.rat()
        self.expect(",")
        b = self.rat()
        self.expect("]")
        self.expect("@")
        return Segment(self.ident(), a, b)

    def speh(self) -> SpehTerm:
        self.expect("Sp")
        self.expect("(")
        delta = self.segment()
        self.expect(",")
        pos = self.tok.pos
        k = self.integer()
        if k < 1:
            raise ExpressionSyntaxError("Speh height must be positive", pos)
        self.expect(")")
        alpha = None
        if self.accept("["):
            alpha = self.rat()
            self.expect("]")
        return SpehTerm(SpehDatum(delta, k), alpha)

    def term(self) -> Term:
        if self.tok.text == "Sp":
            return self.speh()
        if self.tok.text != "[":
            raise self._fail('"[" or "Sp("')
        segs = [self.segment()]
        while self.accept("+"):
            segs.append(self.segment())
        m = Multisegment(tuple(segs))
        if not m.segments:
            raise InvariantError("Multisegment has no nonempty segment")
        return m

    def product(self) -> Expr:
        terms = [self.term()]
        while self.tok.text in _PRODUCT_OPS:
            self.i += 1
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else ProductExpr(tuple(terms))

    def context(self) -> ContextExpr:
        self.expect("(")
        p = self.integer()
        self.expect(",")
        q = self.integer()
        self.expect(",")
        a = self.rat()
        self.expect(")")
        return ContextExpr(DistinctionContext(p, q, a))

    def parse(self) -> Expr:
        expr = self.context() if self.tok.text == "(" else self.product()
        if self.tok.kind != "end":
            raise self._fail("end of input")
        return expr


def parse(text: str, universe: Universe | None = None) -> Expr:
    '''
    Parse an expression, checking line ids against the universe when given.

    Raises:
        ExpressionSyntaxError: Malformed text, with the character position.
        UnknownLineError: A line id the universe does not define.
        InvariantError: A well-formed literal that violates a model invariant.
    '''
    return _Parser(text, universe).parse()


def format_term(t: Term) -> str:
    if isinstance(t, SpehTerm):
        base = f"Sp({t.datum.delta},{t.datum.k})"
        return base if t.alpha is None else f"{base}[{format_rat(t.alpha)}]"
    return " + ".join(str(s) for s in t.segments)


def format_expr(expr: Expr) -> str:
    if isinstance(expr, ContextExpr):
        return str(expr.context)
    if isinstance(expr, ProductExpr):
        return " x ".join(format_term(t) for t in expr.factors)
    return format_term(expr)


def expr_factors(expr: Expr) -> tuple[Term, ...]:
    if isinstance(expr, ContextExpr):
        raise InvalidInputError("Expected a representation, got a context")
    if isinstance(expr, ProductExpr):
        return expr.factors
    return (expr,)


def expr_ladders(expr: Expr) -> list[LadderRep]:
    '''
    The ladders of a product, complementary terms contributing two each.

    Raises:
        InvariantError: A multisegment term that is not a ladder.
    '''
    out: list[LadderRep] = []
    for t in expr_factors(expr):
        if isinstance(t, SpehTerm):
            out.extend(t.ladders())
        else:
            out.append(LadderRep.from_multisegment(t))
    return out


def expr_ladder(expr: Expr) -> LadderRep:
    '''The single ladder an expression denotes.'''
    factors = expr_factors(expr)
    if len(factors) != 1:
        raise InvalidInputError("Expected a single ladder, got a product")
    t = factors[0]
    if isinstance(t, SpehTerm):
        if t.alpha is not None:
            raise InvalidInputError("A complementary series term is not a ladder")
        return make_speh(t.datum)
    return LadderRep.from_multisegment(t)
