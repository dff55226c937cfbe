import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer


class TrafficSplit(BaseModel):
    """Fraction of a workload's memory traffic sent to primary memory."""

    model_config = ConfigDict(frozen=True)

    r: float = Field(..., ge=0, le=1)
    capacity_exceeded: bool = Field(
        False, description="No candidate split was feasible; r minimizes peak utilization"
    )


class AmatResult(BaseModel):
    """Analytical AMAT at one split, with its utilizations and breakdown."""

    r: float
    demand_gbps: float
    amat_ns: float
    feasible: bool
    u_p: float
    u_s: float
    u_ing: float
    u_egr: float
    service_ns: float
    queuing_ns: float
    interface_ns: float

    @field_serializer(
        "amat_ns", "u_p", "u_s", "u_ing", "u_egr", "service_ns", "queuing_ns", "interface_ns", when_used="json"
    )
    def _null_if_infinite(self, value: float) -> Optional[float]:
        # infeasible results carry inf
        return value if math.isfinite(value) else None
