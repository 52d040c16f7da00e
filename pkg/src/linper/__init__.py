'''
linper - segment, ladder and Speh combinatorics for GL_n and linear-period
distinction
'''

__version__ = "0.1.0"


from .errors import (
    DomainError,
    ExpressionSyntaxError,
    InvalidInputError,
    InvariantError,
    LinperError,
    SizeMismatchError,
    UniverseError,
    UnknownLineError,
)
from .models import DistinctionContext, Segment
from .multiseg import LadderRep, Multisegment, SpehDatum
from .universe import Universe, default_universe, load_universe

__all__ = [
    "DistinctionContext",
    "DomainError",
    "ExpressionSyntaxError",
    "InvalidInputError",
    "InvariantError",
    "LadderRep",
    "LinperError",
    "Multisegment",
    "Segment",
    "SizeMismatchError",
    "SpehDatum",
    "Universe",
    "UniverseError",
    "UnknownLineError",
    "default_universe",
    "load_universe",
]
