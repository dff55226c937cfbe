"""
Complete Workload Use Case
"""

import logging
from typing import Optional

from app.core.enums import DecisionEventType
from app.core.messaging import DecisionEvent, DecisionPublisher
from app.modules.cluster.repositories import ServerStore
from app.modules.cluster.schemas import ServerState
from app.modules.cluster.services.admission_service import complete

logger = logging.getLogger(__name__)


class CompleteWorkloadUseCase:
    """Release a finished workload; flags salvaging neighbours whose I/O condition changed."""

    def __init__(self, store: ServerStore, event_publisher: Optional[DecisionPublisher] = None):
        self.store = store
        self.event_publisher = event_publisher

    async def execute(self, server_name: str, workload: str) -> ServerState:
        async with self.store.exclusive(server_name) as server:
            updated, released, advisory = complete(server, workload)
            await self.store.replace(updated)

        self._publish(DecisionEventType.COMPLETED, updated.name, workload, released.r_star)
        if advisory:
            remaining = [d.profile.name for d in updated.salvaging]
            logger.warning(
                f"{workload} left {server_name}; salvaging workloads {remaining} may need re-placement"
            )
            self._publish(
                DecisionEventType.ADVISORY,
                updated.name,
                workload,
                None,
                reason="non-salvaging workload completed while salvaging workloads remain",
                data={"salvaging": remaining},
            )
        return updated

    def _publish(self, event_type, server, workload, r_star, reason=None, data=None) -> None:
        if not self.event_publisher:
            return
        self.event_publisher.publish(
            DecisionEvent(
                event=event_type.value,
                workload=workload,
                server=server,
                r_star=r_star,
                reason=reason,
                data=data or {},
            )
        )
