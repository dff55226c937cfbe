from dataclasses import dataclass, field
from typing import Any, Dict, Optional
from uuid import uuid4

from app.core.utils.datetime import utc_timestamp


@dataclass
class DecisionEvent:
    """One cluster-manager decision, serialized as a JSON line."""

    event: str
    workload: str
    server: str
    r_star: Optional[float] = None
    reason: Optional[str] = None
    data: Dict[str, Any] = field(default_factory=dict)
    event_id: str = field(default_factory=lambda: str(uuid4()))
    timestamp: str = field(default_factory=utc_timestamp)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "event": self.event,
            "workload": self.workload,
            "server": self.server,
            "r_star": self.r_star,
            "reason": self.reason,
            "event_id": self.event_id,
            "timestamp": self.timestamp,
            "data": self.data,
        }

