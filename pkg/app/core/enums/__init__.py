"""Core enums module - centralized enum definitions."""

from app.core.enums.memory_enums import MemoryTier, SalvageTopology
from app.core.enums.io_enums import IoLevel, DecisionEventType, parse_io_scenario

__all__ = [
    "MemoryTier",
    "SalvageTopology",
    "IoLevel",
    "DecisionEventType",
    "parse_io_scenario",
]
