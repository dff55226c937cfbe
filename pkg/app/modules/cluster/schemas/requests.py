from typing import Optional

from pydantic import BaseModel, Field

from app.modules.cluster.schemas.workload import WorkloadProfile


class RegisterServerRequest(BaseModel):
    """Servers are registered with the planner's system configuration, the one its split curves cover."""

    name: str = Field(..., min_length=1)


class DeployRequest(BaseModel):
    workload: WorkloadProfile
    io_heavy_threshold: Optional[float] = Field(None, ge=0, le=1)
