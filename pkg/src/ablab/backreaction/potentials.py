"""
Quasi-static potential of the traveling electron, A_e = q v / r, its curl
B_e, and the circulations of A_e and of the induced field round current
loops.

Single-loop integrals use adaptive Gauss panels over the wire angle;
``electron_circulations`` evaluates every (electron state, loop) pair of a
batch with one node-doubling trapezoid, which converges geometrically for
these smooth periodic integrands.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from ..core.errors import CoincidentPointError, NearWireError
from ..core.quadrature import QuadratureResult, integrate_1d, integrate_periodic
from ..core.vectors import Vec3, as_points
from ..helpers.geometry_helper import orthonormal_frame
from ..parallel import chunk_slices, ordered_map
from ..phase.electron import ElectronState
from ..sources.loop import NEAR_WIRE_EPSILON, CurrentLoop, LoopArrays, wire_clearance

COINCIDENCE_TOLERANCE = 1e-9
WIRE_TOLERANCE = 1e-12
# relative to |q| |v| 2 pi, an upper scale of the loop circulation
BATCH_RELATIVE_TOLERANCE = 1e-13
BATCH_PAIRS = 2048


def electron_vector_potential(e: ElectronState, point) -> Vec3:
    """
    A_e = charge * velocity / |point - position|.

    Raises:
        CoincidentPointError: the point lies within 1e-9 of the electron.
    """
    r = Vec3.of(point).as_array() - e.position.as_array()
    distance = float(np.linalg.norm(r))
    if distance <= COINCIDENCE_TOLERANCE:
        raise CoincidentPointError(f"field point {Vec3.of(point).as_array().tolist()} coincides with the electron")
    return Vec3.of(e.charge * e.velocity.as_array() / distance)


def _separation(e: ElectronState, points) -> tuple[np.ndarray, np.ndarray]:
    """Offsets ``points - position`` (n, 3) and their lengths."""
    r = as_points(points) - e.position.as_array()
    distance = np.linalg.norm(r, axis=1)
    if np.any(distance <= COINCIDENCE_TOLERANCE):
        worst = int(np.argmin(distance))
        raise CoincidentPointError(f"field point {as_points(points)[worst].tolist()} coincides with the electron")
    return r, distance


def electron_magnetic_fields(e: ElectronState, points) -> np.ndarray:
    """B_e = curl A_e = q v x r / |r|^3 with r = point - position, for (n, 3) points."""
    r, distance = _separation(e, points)
    qv = e.charge * e.velocity.as_array()
    return np.cross(qv, r) / distance[:, None] ** 3


def electron_field_rates(e: ElectronState, points) -> np.ndarray:
    """dB_e/dt at fixed points for uniform motion: 3 q (r . v) (v x r) / |r|^5."""
    r, distance = _separation(e, points)
    ve = e.velocity.as_array()
    approach = r @ ve
    return 3.0 * e.charge * approach[:, None] * np.cross(ve, r) / distance[:, None] ** 5


def electron_magnetic_field(e: ElectronState, point) -> Vec3:
    """
    Magnetic field of the moving electron at ``point``.

    Raises:
        CoincidentPointError: the point lies within 1e-9 of the electron.
    """
    return Vec3.of(electron_magnetic_fields(e, point)[0])


def _check_clearance(loop: CurrentLoop, position: np.ndarray, near_wire_epsilon: float) -> None:
    ratio, _ = wire_clearance(loop.arrays(), position)
    if ratio[0] <= near_wire_epsilon:
        raise NearWireError(
            f"electron at {position.tolist()} is {ratio[0] * loop.radius:.3e} from the wire "
            f"(exclusion {near_wire_epsilon:g} x radius)",
            loop_index=0,
            distance=float(ratio[0] * loop.radius),
        )


def wire_integral(
    loop: CurrentLoop,
    position,
    integrand: Callable[[np.ndarray, np.ndarray], np.ndarray],
    tol: float = WIRE_TOLERANCE,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> QuadratureResult:
    """
    Integral over the wire angle of ``integrand(wire_points, dl/dtheta)``.

    The angle nearest to ``position`` is a panel breakpoint.
    """
    x = Vec3.of(position).as_array()
    _check_clearance(loop, x, near_wire_epsilon)
    u, v, _ = orthonormal_frame(loop.unit_normal.as_array())
    d = x - loop.center.as_array()
    nearest = float(np.arctan2(d @ v, d @ u)) % (2.0 * np.pi)

    def f(theta: np.ndarray) -> np.ndarray:
        return integrand(loop.wire_points(theta), loop.wire_tangents(theta))

    return integrate_1d(f, 0.0, 2.0 * np.pi, tol, breakpoints=(0.5 * np.pi, np.pi, 1.5 * np.pi, nearest))


def electron_loop_circulation(
    loop: CurrentLoop,
    e: ElectronState,
    tol: float = WIRE_TOLERANCE,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> QuadratureResult:
    """Circulation of A_e round the wire of ``loop``, right-handed about its normal."""
    x = e.position.as_array()
    qv = e.charge * e.velocity.as_array()

    def potential_along_wire(points: np.ndarray, tangents: np.ndarray) -> np.ndarray:
        distance = np.linalg.norm(points - x, axis=1)
        potential = qv[None, :] / distance[:, None]
        return np.einsum("nk,nk->n", potential, tangents)

    return wire_integral(loop, x, potential_along_wire, tol, near_wire_epsilon=near_wire_epsilon)


def electron_loop_emf(
    loop: CurrentLoop,
    e: ElectronState,
    tol: float = WIRE_TOLERANCE,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> QuadratureResult:
    """
    Circulation of the induced field -dA_e/dt round the wire of ``loop``.

    With r = l - x this is -q loop_integral((v . dl) (r . v) / r^3), the
    EMF round the loop and minus the rate of ``electron_loop_circulation``.
    """
    x = e.position.as_array()
    qv = e.charge * e.velocity.as_array()
    ve = e.velocity.as_array()

    def induced_along_wire(points: np.ndarray, tangents: np.ndarray) -> np.ndarray:
        r = points - x
        distance = np.linalg.norm(r, axis=1)
        return -(tangents @ qv) * (r @ ve) / distance**3

    return wire_integral(loop, x, induced_along_wire, tol, near_wire_epsilon=near_wire_epsilon)


def _frames(loops: LoopArrays) -> tuple[np.ndarray, np.ndarray]:
    frames = [orthonormal_frame(n) for n in loops.normals]
    return np.array([f[0] for f in frames]), np.array([f[1] for f in frames])


def _batched_circulations(
    loops: LoopArrays,
    positions,
    velocities,
    charge: float,
    *,
    rate: bool,
    near_wire_epsilon: float,
) -> np.ndarray:
    x = as_points(positions)
    ve = as_points(velocities)
    qv = charge * ve
    ratio, nearest = wire_clearance(loops, x)
    if x.size and ratio.min() <= near_wire_epsilon:
        worst = int(np.argmin(ratio))
        raise NearWireError(
            f"electron at {x[worst].tolist()} is inside the near-wire exclusion of loop {int(nearest[worst])}",
            loop_index=int(nearest[worst]),
            distance=float(ratio[worst] * loops.radii[nearest[worst]]),
        )

    u, v = _frames(loops)
    radii = loops.radii[None, :, None]
    size = max(1, BATCH_PAIRS // max(loops.count, 1))

    def run(block: slice) -> np.ndarray:
        xb, qvb, vb = x[block], qv[block], ve[block]
        scale = BATCH_RELATIVE_TOLERANCE * 2.0 * np.pi * max(float(np.abs(qvb).max(initial=0.0)), 1e-300)
        if rate:
            scale *= max(float(np.abs(vb).max(initial=0.0)), 1e-300) / float(loops.radii.min())

        def integrand(theta: np.ndarray) -> np.ndarray:
            c, s = np.cos(theta)[:, None, None], np.sin(theta)[:, None, None]
            wire = loops.centers[None, :, :] + radii * (c * u[None] + s * v[None])
            tangent = radii * (-s * u[None] + c * v[None])
            r = wire[:, None, :, :] - xb[None, :, None, :]
            distance = np.linalg.norm(r, axis=-1)
            along = np.einsum("mk,tnk->tmn", qvb, tangent)
            if not rate:
                return along / distance
            approach = np.einsum("tmnk,mk->tmn", r, vb)
            return -along * approach / distance**3

        return integrate_periodic(integrand, scale).value

    parts = ordered_map(run, chunk_slices(len(x), size))
    if not parts:
        return np.zeros((0, loops.count))
    return np.vstack([np.asarray(p).reshape(-1, loops.count) for p in parts])


def electron_circulations(
    loops: LoopArrays,
    positions,
    velocities,
    charge: float,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> np.ndarray:
    """
    Circulation of A_e round every loop for every electron state.

    Returns an (m, n) array for m states and n loops.
    """
    return _batched_circulations(
        loops, positions, velocities, charge, rate=False, near_wire_epsilon=near_wire_epsilon
    )


def electron_emf_circulations(
    loops: LoopArrays,
    positions,
    velocities,
    charge: float,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> np.ndarray:
    """
    EMF the uniformly moving electron induces round every loop, as an (m, n) array.

    The induced field is -dA_e/dt = -q v ((l - x) . v) / |l - x|^3; its
    circulation equals minus the time derivative of ``electron_circulations``.
    """
    return _batched_circulations(
        loops, positions, velocities, charge, rate=True, near_wire_epsilon=near_wire_epsilon
    )


def far_field_circulation(loop: CurrentLoop, e: ElectronState) -> float:
    """
    Multipole estimate of the A_e circulation for a distant electron.

    Only odd multipoles survive on a circle; dipole and octupole are kept:

        q pi a^2 v . (n x r_hat) / r^2 * [1 + (a / r)^2 (15 s^2 / 8 - 3 / 2)]

    with s^2 = 1 - (r_hat . n)^2.
    """
    r = e.position.as_array() - loop.center.as_array()
    n = loop.unit_normal.as_array()
    distance = float(np.linalg.norm(r))
    r_hat = r / distance
    in_plane = 1.0 - float(r_hat @ n) ** 2
    dipole = e.charge * np.pi * loop.radius**2 * float(e.velocity.as_array() @ np.cross(n, r_hat)) / distance**2
    return dipole * (1.0 + (loop.radius / distance) ** 2 * (15.0 * in_plane / 8.0 - 1.5))
