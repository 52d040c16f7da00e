'''
Cuspidal universe: the registry of symbolic cuspidal lines.

This module owns the JSON format of universe files and validates the line
set (dual closure, pole data, degrees) together with the enumeration caps
used by the brute-force oracles.
'''

from __future__ import annotations

import json
import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import config
from .errors import InvariantError, UniverseError, UnknownLineError
from .models import CuspidalLine, PoleParity, PoleType, Segment, as_rat, format_rat

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Universe:
    '''
    A dual-closed set of cuspidal lines plus enumeration caps.

    Every operation that needs line data (degrees, duals, pole types, the
    parity convention) receives the universe explicitly.
    '''
    lines: tuple[CuspidalLine, ...]
    window: tuple[Fraction, Fraction] = config.DEFAULT_WINDOW
    max_length: int = config.DEFAULT_MAX_LENGTH
    max_height: int = config.DEFAULT_MAX_HEIGHT
    parity: PoleParity = PoleParity(config.DEFAULT_PARITY)
    alphas: tuple[Fraction, ...] = config.DEFAULT_ALPHAS
    _by_id: dict[str, CuspidalLine] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        by_id: dict[str, CuspidalLine] = {}
        for line in self.lines:
            if line.id in by_id:
                raise UniverseError(f'Duplicate line id "{line.id}"')
            by_id[line.id] = line
        object.__setattr__(self, "lines", tuple(sorted(self.lines, key=lambda ln: ln.id)))
        object.__setattr__(self, "_by_id", by_id)
        self._validate()

    def _validate(self) -> None:
        for line in self.lines:
            if line.degree < 1:
                raise UniverseError(f'Line "{line.id}": degree must be positive')
            dual = self._by_id.get(line.dual_id)
            if dual is None:
                raise UniverseError(f'Line "{line.id}": dual "{line.dual_id}" is not defined')
            if dual.dual_id != line.id:
                raise UniverseError(f'Line "{line.id}": dual of dual is "{dual.dual_id}"')
            if dual.degree != line.degree:
                raise UniverseError(f'Line "{line.id}": degree differs from its dual')
            if line.self_dual and line.pole_type is None:
                raise UniverseError(f'Self-dual line "{line.id}" needs a pole type')
            if not line.self_dual and line.pole_type is not None:
                raise UniverseError(f'Line "{line.id}" is not self-dual but has a pole type')
            if line.trivial and not (
                line.degree == 1 and line.self_dual and line.pole_type is PoleType.SYMMETRIC
            ):
                raise UniverseError(
                    f'Line "{line.id}": the trivial character needs degree 1, self-duality and a symmetric pole'
                )
        lo, hi = self.window
        if lo > hi:
            raise UniverseError("Exponent window is empty")
        if self.max_length < 1 or self.max_height < 1:
            raise UniverseError("Enumeration caps must be positive")
        for alpha in self.alphas:
            if not 0 < alpha < Fraction(1, 2):
                raise UniverseError(f"Complementary exponent {alpha} outside (0, 1/2)")

    def line(self, line_id: str) -> CuspidalLine:
        try:
            return self._by_id[line_id]
        except KeyError:
            raise UnknownLineError(line_id) from None

    def __contains__(self, line_id: object) -> bool:
        return line_id in self._by_id

    def degree(self, seg: Segment) -> int:
        '''Degree of the representation attached to a segment.'''
        return self.line(seg.line).degree * seg.length

    def restricted(self, line_ids: Iterable[str]) -> Universe:
        '''
        Sub-universe on the given line ids.

        Args:
            line_ids: Ids to keep; the selection must be closed under duality.

        Returns:
            Universe: A universe with the same caps and parity.
        '''
        keep = {self.line(i).id for i in line_ids}
        return replace(self, lines=tuple(ln for ln in self.lines if ln.id in keep))

    def with_parity(self, parity: PoleParity) -> Universe:
        return replace(self, parity=parity)


def line_from_dict(d: Mapping[str, Any]) -> CuspidalLine:
    try:
        line_id = d["id"]
        degree = d["degree"]
        dual_id = d["dual"]
    except KeyError as ex:
        raise UniverseError(f"Missing field in line record: {ex}") from None
    except TypeError:
        raise UniverseError(f"Line record must be an object, got {d!r}") from None

    if not isinstance(line_id, str) or not line_id:
        raise UniverseError(f"Line id must be a nonempty string, got {line_id!r}")
    if not isinstance(dual_id, str) or not dual_id:
        raise UniverseError(f'Line "{line_id}": dual must be a nonempty string')
    if not isinstance(degree, int) or isinstance(degree, bool):
        raise UniverseError(f'Line "{line_id}": degree must be an integer')

    pole = d.get("pole")
    try:
        pole_type = PoleType(pole) if pole is not None else None
    except ValueError:
        raise UniverseError(f'Line "{line_id}": unknown pole type "{pole}"') from None

    trivial = d.get("trivial", False)
    if not isinstance(trivial, bool):
        raise UniverseError(f'Line "{line_id}": "trivial" must be a boolean')
    return CuspidalLine(line_id, degree, dual_id, pole_type, trivial)


def line_to_dict(line: CuspidalLine) -> dict[str, Any]:
    out: dict[str, Any] = {"id": line.id, "degree": line.degree, "dual": line.dual_id}
    if line.pole_type is not None:
        out["pole"] = line.pole_type.value
    if line.trivial:
        out["trivial"] = True
    return out


def universe_from_data(data: Any) -> Universe:
    '''
    Build a universe from decoded JSON.

    Args:
        data: Either a list of line records or an object with a "lines" key
            and optional caps.

    Returns:
        Universe: The validated universe.
    '''
    if isinstance(data, list):
        return Universe(tuple(line_from_dict(d) for d in data))
    if not isinstance(data, dict):
        raise UniverseError("Universe must be a list of lines or an object with \"lines\"")
    if "lines" not in data or not isinstance(data["lines"], list):
        raise UniverseError('Universe object needs a "lines" list')

    lines = tuple(line_from_dict(d) for d in data["lines"])
    kwargs: dict[str, Any] = {}
    try:
        if "window" in data:
            lo, hi = data["window"]
            kwargs["window"] = (as_rat(lo), as_rat(hi))
        if "alphas" in data:
            kwargs["alphas"] = tuple(as_rat(x) for x in data["alphas"])
    except (InvariantError, TypeError, ValueError) as ex:
        raise UniverseError(f"Invalid enumeration settings: {ex}") from None
    for key in ("max_length", "max_height"):
        if key in data:
            value = data[key]
            if not isinstance(value, int) or isinstance(value, bool):
                raise UniverseError(f'"{key}" must be an integer')
            kwargs[key] = value
    if "parity" in data:
        try:
            kwargs["parity"] = PoleParity(data["parity"])
        except ValueError:
            raise UniverseError(f'Unknown parity convention "{data["parity"]}"') from None
    return Universe(lines, **kwargs)


def universe_to_dict(u: Universe) -> dict[str, Any]:
    return {
        "lines": [line_to_dict(ln) for ln in u.lines],
        "window": [format_rat(u.window[0]), format_rat(u.window[1])],
        "max_length": u.max_length,
        "max_height": u.max_height,
        "parity": u.parity.value,
        "alphas": [format_rat(x) for x in u.alphas],
    }


def default_universe() -> Universe:
    return universe_from_data([dict(d) for d in config.DEFAULT_LINES])


def load_universe(path: Path | None) -> Universe:
    '''
    Load a universe file, or the built-in universe when path is None.

    Args:
        path: The JSON file to read.

    Returns:
        Universe: The validated universe.
    '''
    if path is None:
        log.info("using built-in universe")
        return default_universe()
    try:
        with path.open("r", encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise UniverseError(f"Universe file not found: {path}") from None
    except json.JSONDecodeError as ex:
        raise UniverseError(f"Universe file is not valid JSON: {ex}") from None
    except OSError as ex:
        raise UniverseError(f"Cannot read universe file {path}: {ex}") from None
    log.info("loaded universe from %s", path)
    return universe_from_data(data)
