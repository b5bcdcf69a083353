from .geometry_helper import orthonormal_frame, random_rotation, rotation_matrix, unit

__all__ = ["orthonormal_frame", "random_rotation", "rotation_matrix", "unit"]
