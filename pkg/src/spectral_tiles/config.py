"""Shared runtime knobs."""

import os

ENV_TOL = "SPECTRAL_TILES_TOL"

# Far above accumulated double-precision error for matrices up to 64x64,
# far below any true nonzero exponential-sum magnitude at orders <= 360.
DEFAULT_TOL = 1e-9


def default_tolerance() -> float:
    """Float-mode tolerance; overridable via the SPECTRAL_TILES_TOL env var."""
    raw = os.environ.get(ENV_TOL)
    if raw is None:
        return DEFAULT_TOL
    return float(raw)
