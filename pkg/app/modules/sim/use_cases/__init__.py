# Simulation Module Use Cases
from .sweep_splits import SweepSplitsUseCase
from .io_robustness import IoRobustnessUseCase, DEFAULT_SCENARIOS
from .link_sensitivity import LinkSensitivityUseCase

__all__ = [
    "SweepSplitsUseCase",
    "IoRobustnessUseCase",
    "DEFAULT_SCENARIOS",
    "LinkSensitivityUseCase",
]
