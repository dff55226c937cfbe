"""
Deploy Workload Use Case
"""

from typing import Optional

from app.config.settings import settings
from app.core.enums import DecisionEventType
from app.core.messaging import DecisionEvent, DecisionPublisher
from app.modules.cluster.repositories import ServerStore
from app.modules.cluster.schemas import DeployDecision, WorkloadProfile
from app.modules.cluster.services.admission_service import deploy
from app.modules.splitplan.schemas import SplitCurveSet


class DeployWorkloadUseCase:
    """Admit a workload onto one server atomically and log the decision."""

    def __init__(
        self,
        store: ServerStore,
        curve_set: SplitCurveSet,
        event_publisher: Optional[DecisionPublisher] = None,
    ):
        self.store = store
        self.curve_set = curve_set
        self.event_publisher = event_publisher

    async def execute(
        self,
        server_name: str,
        profile: WorkloadProfile,
        io_heavy_threshold: Optional[float] = None,
    ) -> DeployDecision:
        threshold = settings.IO_HEAVY_THRESHOLD if io_heavy_threshold is None else io_heavy_threshold
        async with self.store.exclusive(server_name) as server:
            decision, updated = deploy(server, profile, self.curve_set, threshold)
            if decision.accepted:
                await self.store.replace(updated)

        if self.event_publisher:
            self.event_publisher.publish(
                DecisionEvent(
                    event=(DecisionEventType.ACCEPTED if decision.accepted else DecisionEventType.REJECTED).value,
                    workload=decision.workload,
                    server=decision.server,
                    r_star=decision.r_star,
                    reason=decision.reason,
                    data={"demand_gbps": profile.demand_mean, "capacity_exceeded": decision.capacity_exceeded},
                )
            )
        return decision
