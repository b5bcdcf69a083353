"""Complete elliptic integrals K(m) and E(m) by the arithmetic-geometric mean."""

from __future__ import annotations

import numpy as np

from .errors import EllipticDomainError, NearSingularError

SINGULAR_MARGIN = 1e-12
_MAX_ITERATIONS = 40
_EPS = np.finfo(float).eps


def _agm(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = np.ones_like(m)
    b = np.sqrt(1.0 - m)
    deficit = 0.5 * m
    weight = 1.0
    for _ in range(_MAX_ITERATIONS):
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), np.sqrt(a * b)
        deficit = deficit + weight * c * c
        weight *= 2.0
        if np.all(np.abs(c) <= _EPS * a):
            break
    k = 0.5 * np.pi / a
    return k, k * (1.0 - deficit)


def complete_elliptic(m):
    """
    K(m) = int_0^{pi/2} dt / sqrt(1 - m sin^2 t) and the matching E(m).

    Accepts a scalar or an array of parameters; returns the same shape.

    Raises:
        EllipticDomainError: m outside [0, 1).
        NearSingularError: m within 1e-12 of 1.
    """
    m_arr = np.asarray(m, dtype=float)
    if not np.all(np.isfinite(m_arr)) or np.any(m_arr < 0.0) or np.any(m_arr >= 1.0):
        raise EllipticDomainError(f"elliptic parameter must lie in [0, 1), got {m}")
    if np.any(1.0 - m_arr < SINGULAR_MARGIN):
        raise NearSingularError(f"elliptic parameter {np.max(m_arr)!r} is within {SINGULAR_MARGIN:g} of 1")
    k, e = _agm(m_arr)
    if m_arr.ndim == 0:
        return float(k), float(e)
    return k, e


def complete_elliptic_unchecked(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Array version without domain checks; callers guarantee 0 <= m < 1."""
    return _agm(np.asarray(m, dtype=float))
