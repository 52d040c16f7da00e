'''
Configuration constants and defaults for linper.

Universe files are resolved from the --universe flag first, then from the
LINPER_UNIVERSE environment variable, and finally fall back to the built-in
universe below.
'''

from __future__ import annotations

import os
from fractions import Fraction
from pathlib import Path
from typing import Any

SCHEMA = "linper/1"
UNIVERSE_ENV_VAR = "LINPER_UNIVERSE"

DEFAULT_LINES: tuple[dict[str, Any], ...] = (
    {"id": "triv", "degree": 1, "dual": "triv", "pole": "symmetric", "trivial": True},
    {"id": "rho2", "degree": 2, "dual": "rho2", "pole": "exterior"},
    {"id": "chi", "degree": 1, "dual": "chibar"},
    {"id": "chibar", "degree": 1, "dual": "chi"},
)

# enumeration caps
DEFAULT_WINDOW = (Fraction(-8), Fraction(8))
DEFAULT_MAX_LENGTH = 8
DEFAULT_MAX_HEIGHT = 8
DEFAULT_ALPHAS = (Fraction(1, 4), Fraction(1, 3))

# l odd <-> exterior pole, l even <-> symmetric pole
DEFAULT_PARITY = "odd-exterior"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
DEFAULT_LOG_LEVEL = "WARNING"


def resolve_universe_path(flag_value: str | None) -> Path | None:
    '''
    Pick the universe file to load.

    Args:
        flag_value: Value of the --universe flag, if given.

    Returns:
        Path | None: The file to load, or None for the built-in universe.
    '''
    if flag_value:
        return Path(flag_value)
    env_value = os.environ.get(UNIVERSE_ENV_VAR)
    if env_value:
        return Path(env_value)
    return None
