from pydantic import BaseModel, Field

from app.modules.splitplan.schemas.availability import ResourceAvailability


class PlanRequest(BaseModel):
    residual: ResourceAvailability = Field(..., description="Server's current availability, GB/s per axis")
    demand_gbps: float = Field(..., ge=0)
