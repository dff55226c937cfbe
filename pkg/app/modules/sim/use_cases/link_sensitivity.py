"""
Link Sensitivity Use Case
"""

import logging
from typing import Iterable, List

from app.modules.amat.services import optimal_split, salvage_variant
from app.modules.sim.schemas import SensitivityRow, SimConfig
from app.modules.sim.services.sim_service import run

logger = logging.getLogger(__name__)


class LinkSensitivityUseCase:
    """Planner split vs all-primary over a grid of salvage latency premiums and bandwidth boosts."""

    def __init__(self, grid_step: float = 0.05):
        self.grid_step = grid_step

    def execute(
        self,
        cfg: SimConfig,
        premiums_ns: Iterable[float],
        boosts: Iterable[float],
    ) -> List[SensitivityRow]:
        boosts = list(boosts)
        rows = []
        for premium in premiums_ns:
            for boost in boosts:
                system = salvage_variant(cfg.system, premium, boost)
                split = optimal_split(cfg.demand_mean, system, self.grid_step)
                variant = cfg.model_copy(update={"system": system})
                planned = run(variant.model_copy(update={"r_star": split.r})).summary
                baseline = run(variant.model_copy(update={"r_star": 1.0})).summary
                rows.append(
                    SensitivityRow(
                        premium_ns=premium,
                        boost=boost,
                        r_star=split.r,
                        capacity_exceeded=split.capacity_exceeded,
                        planned_amat_ns=planned.mean_amat_ns,
                        all_primary_amat_ns=baseline.mean_amat_ns,
                    )
                )
                logger.debug(f"{system.label}: R*={split.r} AMAT {rows[-1].amat_reduction:.1%} lower")
        return rows
