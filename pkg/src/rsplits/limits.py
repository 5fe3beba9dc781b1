"""Size caps for exhaustive computations.

Routines that walk all 2^n subsets refuse to run above a cap so a typo
cannot pin a machine for hours.  The env var RSPLIT_MAX_N raises both
caps at the caller's own risk.
"""

from __future__ import annotations

import os

# Universe size accepted by VertexSet / Graph constructors.  Python ints
# carry arbitrary widths, so this is purely a sanity bound; raise it by
# assigning to the module attribute if you know what you are doing.
MAX_UNIVERSE = 128

# Subset-exhaustive scans (r-rank connectivity, split enumeration).
DEFAULT_EXHAUSTIVE_CAP = 24

# Brute-force reference computations over explicit 2^n families.
DEFAULT_ORACLE_CAP = 14

_ENV_VAR = "RSPLIT_MAX_N"


class TooLargeError(ValueError):
    """Input exceeds the cap configured for an exhaustive computation."""


def exhaustive_cap() -> int:
    return _env_override(DEFAULT_EXHAUSTIVE_CAP)


def oracle_cap() -> int:
    return _env_override(DEFAULT_ORACLE_CAP)


def _env_override(default: int) -> int:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_VAR} must be an integer, got {raw!r}") from None
    return max(value, default)


def check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise TooLargeError(
            f"n={n} is too large for exhaustive check ({what} capped at {cap}; "
            f"set {_ENV_VAR} to override)"
        )
