from app.modules.amat.schemas.system import SystemConfig
from app.modules.amat.schemas.split import TrafficSplit, AmatResult
from app.modules.amat.schemas.requests import AmatRequest, OptimalSplitRequest, OptimalSplitResponse

__all__ = [
    "SystemConfig",
    "TrafficSplit",
    "AmatResult",
    "AmatRequest",
    "OptimalSplitRequest",
    "OptimalSplitResponse",
]
