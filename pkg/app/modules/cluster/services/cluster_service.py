"""
Cluster Service - Facade for cluster-manager operations
Delegates admission and release to the use cases.
"""

import logging
from typing import List, Optional

from app.core.messaging import DecisionPublisher
from app.modules.amat.schemas import SystemConfig
from app.modules.cluster.repositories import ServerStore
from app.modules.cluster.schemas import DeployDecision, ServerState, ServerView, WorkloadProfile
from app.modules.cluster.services.admission_service import new_server, residual
from app.modules.cluster.use_cases.complete_workload import CompleteWorkloadUseCase
from app.modules.cluster.use_cases.deploy_workload import DeployWorkloadUseCase
from app.modules.splitplan.schemas import SplitCurveSet

logger = logging.getLogger(__name__)


class ClusterService:
    def __init__(
        self,
        store: ServerStore,
        curve_set: SplitCurveSet,
        event_publisher: Optional[DecisionPublisher] = None,
    ):
        self.store = store
        self.deploy_uc = DeployWorkloadUseCase(store, curve_set, event_publisher)
        self.complete_uc = CompleteWorkloadUseCase(store, event_publisher)

    async def register_server(self, name: str, config: SystemConfig) -> ServerView:
        server = await self.store.add(new_server(name, config))
        logger.info(f"Registered server {name} ({config.label or 'unlabeled'})")
        return self._view(server)

    async def get_server(self, name: str) -> ServerView:
        return self._view(await self.store.get(name))

    async def list_servers(self) -> List[ServerView]:
        return [self._view(s) for s in await self.store.list()]

    async def deploy(
        self, server: str, profile: WorkloadProfile, io_heavy_threshold: Optional[float] = None
    ) -> DeployDecision:
        return await self.deploy_uc.execute(server, profile, io_heavy_threshold)

    async def complete(self, server: str, workload: str) -> ServerView:
        return self._view(await self.complete_uc.execute(server, workload))

    @staticmethod
    def _view(server: ServerState) -> ServerView:
        return ServerView(
            name=server.name,
            label=server.config.label,
            nominal=server.nominal,
            committed=server.committed,
            residual=residual(server),
            workloads=list(server.deployed),
        )
