from app.modules.amat.services.amat_service import (
    utilizations,
    link_utilizations,
    amat_of,
    amat_breakdown,
    candidate_splits,
    optimal_split,
    salvage_variant,
)

__all__ = [
    "utilizations",
    "link_utilizations",
    "amat_of",
    "amat_breakdown",
    "candidate_splits",
    "optimal_split",
    "salvage_variant",
]
