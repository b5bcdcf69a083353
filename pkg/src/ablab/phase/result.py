from __future__ import annotations

from typing import Optional

from pydantic import FiniteFloat

from ..core.base import DomainModel


class PhaseResult(DomainModel):
    """
    Phase in radians with its per-term breakdown.

    ``total`` is ``interaction_term + backreaction_term``. ``flux_term`` is
    the linking x flux prediction for a closed pair contour and stays
    ``None`` when no pair (or no confined flux) is involved.
    """

    total: FiniteFloat
    interaction_term: FiniteFloat
    backreaction_term: FiniteFloat = 0.0
    flux_term: Optional[FiniteFloat] = None
    error_estimate: FiniteFloat = 0.0
    linking: Optional[int] = None

    @classmethod
    def from_terms(
        cls,
        interaction_term: float,
        backreaction_term: float = 0.0,
        **extra,
    ) -> "PhaseResult":
        return cls(
            total=interaction_term + backreaction_term,
            interaction_term=interaction_term,
            backreaction_term=backreaction_term,
            **extra,
        )

    @property
    def flux_mismatch(self) -> Optional[float]:
        """|total - flux_term|, when a flux prediction exists."""
        if self.flux_term is None:
            return None
        return abs(self.total - self.flux_term)

    def __sub__(self, other: "PhaseResult") -> "PhaseResult":
        return PhaseResult.from_terms(
            self.interaction_term - other.interaction_term,
            self.backreaction_term - other.backreaction_term,
            error_estimate=self.error_estimate + other.error_estimate,
        )
