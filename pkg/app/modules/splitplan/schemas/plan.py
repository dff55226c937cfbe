from typing import Optional

from pydantic import BaseModel, Field

from app.modules.splitplan.schemas.availability import ResourceAvailability


class PlanResult(BaseModel):
    """Split selected for one workload on one server."""

    r_star: float = Field(..., ge=0, le=1)
    capacity_exceeded: bool
    curve_key: Optional[ResourceAvailability] = Field(
        None, description="Availability grid point of the probed curve"
    )
    demand_gbps: float
