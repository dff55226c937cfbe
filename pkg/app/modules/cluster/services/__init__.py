from app.modules.cluster.services.admission_service import (
    RULE3_REASON,
    NO_CURVE_REASON,
    CAPACITY_REASON,
    COMMITMENT_REASON,
    new_server,
    commitment_of,
    recompute_committed,
    residual,
    deploy,
    complete,
)

__all__ = [
    "RULE3_REASON",
    "NO_CURVE_REASON",
    "CAPACITY_REASON",
    "COMMITMENT_REASON",
    "new_server",
    "commitment_of",
    "recompute_committed",
    "residual",
    "deploy",
    "complete",
]
