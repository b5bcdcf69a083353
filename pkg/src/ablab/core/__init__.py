from .base import DomainModel
from .elliptic import complete_elliptic
from .errors import (
    AmbiguousTopologyError,
    ClearanceError,
    CoincidentPointError,
    ContourMismatchError,
    ConvergenceError,
    EllipticDomainError,
    EndpointMismatchError,
    GeometryError,
    GridMismatchError,
    NearSingularError,
    NearWireError,
    NumericalError,
    ScenarioError,
    UndersamplingError,
)
from .quadrature import QuadratureResult, integrate_1d, integrate_disk, integrate_periodic
from .topology import gauss_linking_integral, linking_number
from .trajectory import Trajectory, TrajectorySample
from .vectors import Disk, Vec3

__all__ = [
    "DomainModel",
    "Vec3",
    "Disk",
    "Trajectory",
    "TrajectorySample",
    "QuadratureResult",
    "integrate_1d",
    "integrate_disk",
    "integrate_periodic",
    "complete_elliptic",
    "linking_number",
    "gauss_linking_integral",
    "NumericalError",
    "ConvergenceError",
    "NearSingularError",
    "EllipticDomainError",
    "GeometryError",
    "NearWireError",
    "AmbiguousTopologyError",
    "EndpointMismatchError",
    "ContourMismatchError",
    "CoincidentPointError",
    "ClearanceError",
    "UndersamplingError",
    "GridMismatchError",
    "ScenarioError",
]
