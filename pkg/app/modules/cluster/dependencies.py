"""
Cluster Module Dependencies
"""

from typing import Annotated

from fastapi import Depends

from app.core.messaging import DecisionPublisher, decision_publisher
from app.core.utils.lifespan import planner_state
from app.modules.cluster.repositories import ServerStore
from app.modules.cluster.services.cluster_service import ClusterService
from app.modules.splitplan.dependencies import CurveSetDep


def get_server_store() -> ServerStore:
    return planner_state.store


ServerStoreDep = Annotated[ServerStore, Depends(get_server_store)]


def get_event_publisher() -> DecisionPublisher:
    return decision_publisher


EventPublisherDep = Annotated[DecisionPublisher, Depends(get_event_publisher)]


def get_cluster_service(
    store: ServerStoreDep,
    curve_set: CurveSetDep,
    publisher: EventPublisherDep,
) -> ClusterService:
    return ClusterService(store, curve_set, publisher)


ClusterServiceDep = Annotated[ClusterService, Depends(get_cluster_service)]
