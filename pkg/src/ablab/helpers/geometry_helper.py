import numpy as np


def unit(vector: np.ndarray) -> np.ndarray:
    """Return ``vector`` scaled to unit length."""
    vector = np.asarray(vector, dtype=float)
    length = np.linalg.norm(vector)
    if length == 0.0:
        raise ValueError("cannot normalise a zero vector")
    return vector / length


def orthonormal_frame(
    normal: np.ndarray, reference: np.ndarray | None = None
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Build a right-handed frame (u, v, n) around ``normal``.

    ``u`` is the component of ``reference`` perpendicular to ``normal`` when
    a reference is given, otherwise the cross product of ``normal`` with the
    coordinate axis least aligned with it. ``v = n x u``.
    """
    n = unit(normal)
    if reference is not None:
        u = np.asarray(reference, dtype=float)
        u = u - np.dot(u, n) * n
        if np.linalg.norm(u) < 1e-12:
            raise ValueError("reference direction is parallel to the normal")
        u = unit(u)
    else:
        helper = np.zeros(3)
        helper[int(np.argmin(np.abs(n)))] = 1.0
        u = unit(np.cross(helper, n))
    v = np.cross(n, u)
    return u, v, n


def rotation_matrix(axis: np.ndarray, angle: float) -> np.ndarray:
    """Rodrigues rotation matrix for a right-handed turn of ``angle`` about ``axis``."""
    k = unit(axis)
    kx = np.array(
        [
            [0.0, -k[2], k[1]],
            [k[2], 0.0, -k[0]],
            [-k[1], k[0], 0.0],
        ]
    )
    return np.eye(3) + np.sin(angle) * kx + (1.0 - np.cos(angle)) * (kx @ kx)


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    """Uniformly distributed rotation matrix drawn from ``rng``."""
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    w, x, y, z = q
    return np.array(
        [
            [1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)],
            [2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)],
            [2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)],
        ]
    )
