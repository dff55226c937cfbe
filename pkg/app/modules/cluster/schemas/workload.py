from pydantic import BaseModel, ConfigDict, Field

from app.config.settings import settings
from app.modules.splitplan.schemas import ResourceAvailability


class WorkloadProfile(BaseModel):
    """Average memory and I/O bandwidth use of one workload."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1)
    demand_mean: float = Field(..., ge=0, description="Mean memory demand, GB/s")
    rho_rd: float = Field(settings.RHO_RD, ge=0, le=1)
    io_rx_level: float = Field(0.0, ge=0, le=1, description="Ingress I/O, fraction of peak")
    io_tx_level: float = Field(0.0, ge=0, le=1, description="Egress I/O, fraction of peak")
    salvaging: bool = Field(False, description="Set once deployed with R* < 1")

    def is_io_heavy(self, threshold: float) -> bool:
        return max(self.io_rx_level, self.io_tx_level) >= threshold


class DeployedWorkload(BaseModel):
    model_config = ConfigDict(frozen=True)

    profile: WorkloadProfile
    r_star: float = Field(..., ge=0, le=1)
    commitment: ResourceAvailability
