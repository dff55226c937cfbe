# Cluster Module Use Cases
from .deploy_workload import DeployWorkloadUseCase
from .complete_workload import CompleteWorkloadUseCase

__all__ = [
    "DeployWorkloadUseCase",
    "CompleteWorkloadUseCase",
]
