from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from app.modules.amat.schemas import SystemConfig
from app.modules.splitplan.schemas import ResourceAvailability
from app.modules.cluster.schemas.workload import DeployedWorkload


class ServerState(BaseModel):
    """
    A server's provisioning and what is committed on it. Committed
    bandwidth is the axis-wise sum of the deployed workloads' commitments.
    """

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1)
    config: SystemConfig
    deployed: Tuple[DeployedWorkload, ...] = ()
    committed: ResourceAvailability = Field(default_factory=ResourceAvailability.zero)

    @property
    def nominal(self) -> ResourceAvailability:
        return ResourceAvailability(
            b_p_avail=self.config.b_p,
            b_s_avail=self.config.b_s,
            link_ing_avail=self.config.ing_capacity,
            link_egr_avail=self.config.egr_capacity,
        )

    def find(self, workload: str) -> Optional[DeployedWorkload]:
        return next((d for d in self.deployed if d.profile.name == workload), None)

    @property
    def salvaging(self) -> List[DeployedWorkload]:
        return [d for d in self.deployed if d.profile.salvaging]


class ServerView(BaseModel):
    """Server state as reported by the planner service."""

    name: str
    label: str
    nominal: ResourceAvailability
    committed: ResourceAvailability
    residual: ResourceAvailability
    workloads: List[DeployedWorkload]
