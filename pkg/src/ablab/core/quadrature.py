"""
Adaptive quadrature used by every line and surface integral in ablab.

All integrands are vectorised: they receive a 1-D array of abscissae and
return an array whose leading axis runs over those abscissae (trailing
axes, if any, are integrated component-wise). Every refinement round
evaluates all pending panels in one call.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import ConvergenceError

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-10
GAUSS_ORDER = 15
MAX_DEPTH = 40
MAX_PANELS = 200_000
PERIODIC_START_NODES = 16
PERIODIC_MAX_NODES = 1 << 16

_ROUNDOFF = 64.0 * np.finfo(float).eps

Integrand = Callable[[np.ndarray], np.ndarray]


class QuadratureResult(NamedTuple):
    value: float | np.ndarray
    error: float


@lru_cache(maxsize=None)
def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [-1, 1] (cached, read-only)."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _as_result(value: np.ndarray) -> float | np.ndarray:
    return float(value) if np.ndim(value) == 0 else value


def _max_abs(values: np.ndarray) -> np.ndarray:
    """Per-panel max-norm over trailing component axes."""
    return np.abs(values).reshape(values.shape[0], -1).max(axis=1)


def _panel_integrals(f: Integrand, a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    x, w = gauss_legendre(order)
    half = 0.5 * (b - a)
    nodes = (0.5 * (a + b))[:, None] + half[:, None] * x[None, :]
    values = np.asarray(f(nodes.ravel()), dtype=float)
    values = values.reshape((a.size, order) + values.shape[1:])
    sums = np.tensordot(values, w, axes=([1], [0]))
    return sums * half.reshape((a.size,) + (1,) * (sums.ndim - 1))


def integrate_1d(
    f: Integrand,
    lo: float,
    hi: float,
    tol: float = DEFAULT_TOLERANCE,
    *,
    breakpoints: Sequence[float] = (),
    order: int = GAUSS_ORDER,
    max_depth: int = MAX_DEPTH,
    max_panels: int = MAX_PANELS,
) -> QuadratureResult:
    """
    Adaptive bisection with fixed-order Gauss-Legendre panels.

    A panel is accepted when the difference between its one-panel estimate
    and the sum over its two halves is within ``tol * width / (hi - lo)``
    (or at the roundoff floor of the value). ``breakpoints`` inside
    (lo, hi) start separate panels so kinks and segment joints are never
    straddled.

    Raises:
        ConvergenceError: a panel reached ``max_depth`` or the panel budget
            ran out; ``best_estimate`` holds the sum of the finest estimates.
    """
    if not hi > lo:
        raise ValueError(f"integration limits must satisfy lo < hi, got [{lo}, {hi}]")
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")

    inner = sorted({float(p) for p in breakpoints if lo < p < hi})
    edges = np.array([lo, *inner, hi], dtype=float)
    a, b = edges[:-1], edges[1:]
    coarse = _panel_integrals(f, a, b, order)
    depth = np.zeros(a.size, dtype=int)
    span = hi - lo

    done_lo: list[np.ndarray] = []
    done_val: list[np.ndarray] = []
    done_err: list[np.ndarray] = []
    evaluated = a.size
    failed = False

    while a.size:
        mid = 0.5 * (a + b)
        halves = _panel_integrals(f, np.concatenate([a, mid]), np.concatenate([mid, b]), order)
        left, right = halves[: a.size], halves[a.size :]
        fine = left + right
        err = _max_abs(coarse - fine)
        evaluated += 2 * a.size

        accept = err <= np.maximum(tol * (b - a) / span, _ROUNDOFF * _max_abs(fine))
        exhausted = ~accept & (depth + 1 >= max_depth)
        finished = accept | exhausted
        failed |= bool(exhausted.any())

        done_lo.append(a[finished])
        done_val.append(fine[finished])
        done_err.append(err[finished])

        keep = ~finished
        if keep.any() and evaluated + 4 * int(keep.sum()) > max_panels:
            done_lo.append(a[keep])
            done_val.append(fine[keep])
            done_err.append(err[keep])
            failed = True
            break

        a, b = np.concatenate([a[keep], mid[keep]]), np.concatenate([mid[keep], b[keep]])
        coarse = np.concatenate([left[keep], right[keep]])
        depth = np.concatenate([depth[keep] + 1, depth[keep] + 1])

    order_index = np.argsort(np.concatenate(done_lo), kind="stable")
    values = np.concatenate(done_val)[order_index]
    value = values.sum(axis=0)
    error = float(np.concatenate(done_err).sum())

    logger.debug("integrate_1d [%g, %g]: %d panels, error %.3e", lo, hi, evaluated, error)
    if failed:
        raise ConvergenceError(
            f"adaptive quadrature on [{lo}, {hi}] did not reach tol={tol:.1e} "
            f"(estimated error {error:.3e}, {evaluated} panels)",
            best_estimate=_as_result(value),
            error_estimate=error,
        )
    return QuadratureResult(_as_result(value), error)


def integrate_periodic(
    f: Integrand,
    tol: float = DEFAULT_TOLERANCE,
    *,
    start_nodes: int = PERIODIC_START_NODES,
    max_nodes: int = PERIODIC_MAX_NODES,
) -> QuadratureResult:
    """
    Trapezoid rule over [0, 2*pi) with node doubling.

    For smooth periodic integrands the rule converges geometrically; the
    difference between successive levels is returned as the error.
    Earlier nodes are reused, so each level costs only the new midpoints.
    """
    n = start_nodes
    theta = 2.0 * np.pi * np.arange(n) / n
    total = np.asarray(f(theta), dtype=float).sum(axis=0)
    estimate = total * (2.0 * np.pi / n)
    while True:
        if 2 * n > max_nodes:
            raise ConvergenceError(
                f"periodic trapezoid did not reach tol={tol:.1e} with {n} nodes",
                best_estimate=_as_result(estimate),
                error_estimate=float(np.max(np.abs(estimate))),
            )
        midpoints = 2.0 * np.pi * (np.arange(n) + 0.5) / n
        total = total + np.asarray(f(midpoints), dtype=float).sum(axis=0)
        n *= 2
        refined = total * (2.0 * np.pi / n)
        error = float(np.max(np.abs(refined - estimate)))
        estimate = refined
        if error <= max(tol, _ROUNDOFF * float(np.max(np.abs(refined)))):
            return QuadratureResult(_as_result(estimate), error)


def integrate_disk(
    f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    radius: float,
    tol: float = DEFAULT_TOLERANCE,
    *,
    breakpoints: Sequence[float] = (),
    order: int = GAUSS_ORDER,
    max_depth: int = MAX_DEPTH,
) -> QuadratureResult:
    """
    Integral of ``f(r, theta)`` over a disk of ``radius`` in polar coordinates.

    Radial outer integration is adaptive Gauss (``breakpoints`` are radii);
    for each batch of radial nodes the angular inner integral is a periodic
    trapezoid over all nodes at once. ``f`` is called with broadcastable
    ``r`` of shape (1, M) and ``theta`` of shape (n, 1).
    """
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius}")
    inner_tol = 0.5 * tol / (radius * radius)

    def radial(r: np.ndarray) -> np.ndarray:
        def ring(theta: np.ndarray) -> np.ndarray:
            values = np.asarray(f(r[None, :], theta[:, None]), dtype=float)
            return np.broadcast_to(values, (theta.size, r.size))

        return r * integrate_periodic(ring, inner_tol).value

    return integrate_1d(radial, 0.0, radius, 0.5 * tol, breakpoints=breakpoints, order=order, max_depth=max_depth)
