"""
Sweep Splits Use Case
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from app.modules.amat.services import candidate_splits
from app.modules.sim.schemas import SimConfig, SplitSweep, SplitSweepPoint
from app.modules.sim.services.sim_service import run

logger = logging.getLogger(__name__)


def _simulate_split(args) -> SplitSweepPoint:
    cfg, r = args
    summary = run(cfg.model_copy(update={"r_star": r})).summary
    return SplitSweepPoint(
        r=r,
        mean_amat_ns=summary.mean_amat_ns,
        std_amat_ns=summary.std_amat_ns,
        p95_amat_ns=summary.p95_amat_ns,
    )


class SweepSplitsUseCase:
    """
    Simulate the workload at every candidate split with the same seed, so
    splits are compared under identical demand and I/O draws.
    """

    def __init__(self, grid_step: float = 0.05, workers: int = 1):
        self.grid_step = grid_step
        self.workers = workers

    def execute(self, cfg: SimConfig, planned_r: Optional[float] = None) -> SplitSweep:
        planned_r = cfg.r_star if planned_r is None else planned_r
        splits = candidate_splits(self.grid_step)
        jobs = [(cfg, r) for r in splits]

        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                points = list(pool.map(_simulate_split, jobs))
        else:
            points = [_simulate_split(job) for job in jobs]

        planned = next((p for p in points if abs(p.r - planned_r) < 1e-9), None)
        if planned is None:
            planned = _simulate_split((cfg, planned_r))

        sweep = SplitSweep(points=tuple(points), planned_r=planned_r, planned_amat_ns=planned.mean_amat_ns)
        logger.info(
            f"Split sweep: planned R={planned_r} -> {planned.mean_amat_ns:.1f} ns, "
            f"best R={sweep.best.r} -> {sweep.best.mean_amat_ns:.1f} ns"
        )
        return sweep
