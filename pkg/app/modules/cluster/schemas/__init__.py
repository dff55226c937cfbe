from app.modules.cluster.schemas.workload import WorkloadProfile, DeployedWorkload
from app.modules.cluster.schemas.server import ServerState, ServerView
from app.modules.cluster.schemas.decision import DeployDecision
from app.modules.cluster.schemas.requests import RegisterServerRequest, DeployRequest

__all__ = [
    "WorkloadProfile",
    "DeployedWorkload",
    "ServerState",
    "ServerView",
    "DeployDecision",
    "RegisterServerRequest",
    "DeployRequest",
]
