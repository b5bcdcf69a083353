"""Verification suites - imports every suite module to register it."""

from . import stokes
from . import cancellation
from . import confinement
from . import chain

__all__ = ["stokes", "cancellation", "confinement", "chain"]
