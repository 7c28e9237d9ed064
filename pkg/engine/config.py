import os
from contextlib import contextmanager
from typing import Iterator, Optional

from .errors import ConfigError


VERSION = "0.1.0"

NORMALIZATION_NOTE = (
    "invariant form normalized so long roots have (a, a) = 2 in every simple factor; "
    "Killing-normalized eigenvalues differ by a constant factor per factor"
)

DEFAULT_WEYL_LIMIT = 10**7
DEFAULT_LINES = 10
DEFAULT_DIM_BOUND = 100

# Set for the duration of one command by weyl_limit_override
_weyl_limit_override = None


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return fallback
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{name} must be a positive integer, got {value}")
    return value


def weyl_limit() -> int:
    """Cap on Weyl group enumeration."""
    if _weyl_limit_override is not None:
        return _weyl_limit_override
    return _env_int("COSET_SPECTRA_WEYL_LIMIT", DEFAULT_WEYL_LIMIT)


def spectrum_lines() -> int:
    """Number of spectral lines emitted when the caller does not say."""
    return _env_int("COSET_SPECTRA_LINES", DEFAULT_LINES)


@contextmanager
def weyl_limit_override(limit: Optional[int]) -> Iterator[None]:
    """Pin the Weyl enumeration cap for the duration of one command; None leaves it alone."""
    global _weyl_limit_override
    previous = _weyl_limit_override
    if limit is not None:
        _weyl_limit_override = limit
    try:
        yield
    finally:
        _weyl_limit_override = previous
