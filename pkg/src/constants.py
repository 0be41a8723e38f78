import os

from .errors import UsageError

DEFAULT_CEILING = 10**7
GL_CEILING = 10**7
FIELD_CEILING = 4096
G_CEILING = 10**4
SRIM_CEILING = 10**5
TABLE_LIMIT = 2**16
INT_LIMIT = 2**63
PRIME_LIMIT = 2**31
CEILING_ENV = "TSRFORGE_CEILING"

# Generator symbols, one per tower level above the prime field
GENERATOR_SYMBOLS = "tuvwyz"


def enumeration_ceiling():
    """Returns the pair-candidate ceiling, honouring the environment override."""

    raw = os.environ.get(CEILING_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{CEILING_ENV} must be an integer, got {raw!r}")
    if value <= 0:
        raise UsageError(f"{CEILING_ENV} must be positive, got {value}")
    return value
