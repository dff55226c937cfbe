from pydantic import BaseModel, Field

from app.modules.amat.schemas.split import AmatResult, TrafficSplit


class AmatRequest(BaseModel):
    r: float = Field(..., ge=0, le=1, description="Share of traffic sent to primary memory")
    demand_gbps: float = Field(..., ge=0)


class OptimalSplitRequest(BaseModel):
    demand_gbps: float = Field(..., ge=0)
    grid_step: float = Field(0.05, gt=0, le=1)


class OptimalSplitResponse(BaseModel):
    split: TrafficSplit
    evaluation: AmatResult
