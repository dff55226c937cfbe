from typing import Optional

from pydantic import BaseModel

from app.modules.splitplan.schemas import ResourceAvailability


class DeployDecision(BaseModel):
    """Outcome of a deployment request; accepted decisions carry the split for the server's OS."""

    accepted: bool
    workload: str
    server: str
    r_star: Optional[float] = None
    capacity_exceeded: bool = False
    reason: Optional[str] = None
    curve_key: Optional[ResourceAvailability] = None
    residual_before: ResourceAvailability
    residual_after: ResourceAvailability
