from app.modules.sim.schemas.sim import (
    SimConfig,
    PlacementState,
    IoTraffic,
    IntervalRecord,
    SimSummary,
    SimMetrics,
    SplitSweepPoint,
    SplitSweep,
    RobustnessRow,
    SensitivityRow,
)

__all__ = [
    "SimConfig",
    "PlacementState",
    "IoTraffic",
    "IntervalRecord",
    "SimSummary",
    "SimMetrics",
    "SplitSweepPoint",
    "SplitSweep",
    "RobustnessRow",
    "SensitivityRow",
]
