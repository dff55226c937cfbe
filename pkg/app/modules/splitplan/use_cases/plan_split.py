"""
Plan Split Use Case
"""

import logging

from app.modules.splitplan.schemas import PlanResult, ResourceAvailability, SplitCurveSet
from app.modules.splitplan.services import probe, select_curve

logger = logging.getLogger(__name__)


class PlanSplitUseCase:
    """Select the curve for the server's residual availability and probe it with the demand."""

    def __init__(self, curve_set: SplitCurveSet):
        self.curve_set = curve_set

    def execute(self, residual: ResourceAvailability, demand_gbps: float) -> PlanResult:
        curve = select_curve(self.curve_set, residual)
        r_star, exceeded = probe(curve, demand_gbps)
        logger.debug(
            f"Planned R*={r_star} for {demand_gbps:.2f} GB/s on curve "
            f"{curve.availability.as_tuple() if curve.availability else None}"
        )
        return PlanResult(
            r_star=r_star,
            capacity_exceeded=exceeded,
            curve_key=curve.availability,
            demand_gbps=demand_gbps,
        )
