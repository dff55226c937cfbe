from enum import Enum


class MemoryTier(str, Enum):
    """Memory tier a page is placed in."""

    PRIMARY = "primary"
    SALVAGE = "salvage"


class SalvageTopology(str, Enum):
    """How salvage memory is attached: one per server, or shared by a pod."""

    SOLO = "solo"
    POD = "pod"
