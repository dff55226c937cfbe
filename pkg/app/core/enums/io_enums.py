from enum import Enum
from typing import Tuple

from app.config.settings import settings
from app.core.exceptions import DomainError


class IoLevel(str, Enum):
    """I/O activity level, as a fraction of a direction's peak bandwidth."""

    NONE = "none"
    LOW = "low"
    MED = "med"
    HIGH = "high"

    @property
    def fraction(self) -> float:
        return {
            IoLevel.NONE: 0.0,
            IoLevel.LOW: settings.IO_LEVEL_LOW,
            IoLevel.MED: settings.IO_LEVEL_MED,
            IoLevel.HIGH: settings.IO_LEVEL_HIGH,
        }[self]


def parse_io_scenario(token: str) -> Tuple[float, float]:
    """
    Parse an ``rx_tx`` scenario token such as ``low_high`` into
    (rx_level, tx_level) fractions. ``none`` alone means no I/O at all.
    """
    token = token.strip().lower()
    if token == IoLevel.NONE.value:
        return 0.0, 0.0
    parts = token.split("_")
    if len(parts) != 2:
        raise DomainError(f"I/O scenario must look like 'low_high', got '{token}'")
    try:
        rx, tx = IoLevel(parts[0]), IoLevel(parts[1])
    except ValueError:
        raise DomainError(
            f"unknown I/O level in '{token}'; expected one of low, med, high"
        ) from None
    return rx.fraction, tx.fraction


class DecisionEventType(str, Enum):
    """Cluster-manager decision log events."""

    ACCEPTED = "deploy.accepted"
    REJECTED = "deploy.rejected"
    COMPLETED = "workload.completed"
    ADVISORY = "salvage.advisory"
