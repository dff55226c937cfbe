from app.modules.splitplan.schemas.availability import ResourceAvailability, AXES
from app.modules.splitplan.schemas.split_curve import (
    SCHEMA_VERSION,
    SplitEntry,
    SplitCurve,
    GridSpec,
    SplitCurveSet,
)
from app.modules.splitplan.schemas.plan import PlanResult
from app.modules.splitplan.schemas.requests import PlanRequest

__all__ = [
    "ResourceAvailability",
    "AXES",
    "SCHEMA_VERSION",
    "SplitEntry",
    "SplitCurve",
    "GridSpec",
    "SplitCurveSet",
    "PlanResult",
    "PlanRequest",
]
