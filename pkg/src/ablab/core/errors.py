"""
Exception hierarchy for numerical failures and geometric precondition
violations.

``NumericalError`` subclasses mean the computation itself could not reach
its target; ``GeometryError`` subclasses mean the caller asked for
something outside an operation's domain. The command line maps the first
family to exit code 2 and the second to exit code 1.
"""

from __future__ import annotations

from typing import Any, Optional


class NumericalError(ArithmeticError):
    """Base class for numerical failures."""


class ConvergenceError(NumericalError):
    """Adaptive refinement ran out of budget before meeting its tolerance."""

    def __init__(self, message: str, best_estimate: Any = None, error_estimate: Any = None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class NearSingularError(NumericalError):
    """Elliptic parameter too close to the logarithmic singularity at m = 1."""


class EllipticDomainError(ValueError):
    """Elliptic parameter outside [0, 1)."""


class GeometryError(ValueError):
    """Base class for geometric precondition violations."""


class NearWireError(GeometryError):
    """Field point inside the near-wire exclusion of a current loop."""

    def __init__(self, message: str, loop_index: Optional[int] = None, distance: Optional[float] = None):
        super().__init__(message)
        self.loop_index = loop_index
        self.distance = distance


class AmbiguousTopologyError(GeometryError):
    """A closed path crosses the ring's spanning disk on (or too near) its rim."""


class EndpointMismatchError(GeometryError):
    """Two open trajectories do not share their start and end points."""


class ContourMismatchError(GeometryError):
    """A contour does not coincide with the rim of the disk it is checked against."""


class CoincidentPointError(GeometryError):
    """Field point coincides with the point charge producing the field."""


class ClearanceError(GeometryError):
    """A beam chord enters the source's excluded cross-section."""


class UndersamplingError(ValueError):
    """Fewer screen samples per fringe period than the pattern needs."""


class GridMismatchError(ValueError):
    """Two interference patterns are not sampled on the same screen positions."""


class ScenarioError(ValueError):
    """A scenario file is missing, malformed or fails validation."""
