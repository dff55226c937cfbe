"""
I/O Robustness Use Case
"""

import logging
from typing import Iterable, List

from app.core.enums import parse_io_scenario
from app.modules.sim.schemas import RobustnessRow, SimConfig
from app.modules.sim.use_cases.sweep_splits import SweepSplitsUseCase

logger = logging.getLogger(__name__)

DEFAULT_SCENARIOS = ("low_low", "low_high", "high_low", "high_high", "med_med")


class IoRobustnessUseCase:
    """
    Keep the split planned for one I/O condition and replay the workload
    under other I/O scenarios, against the best split for each.
    """

    def __init__(self, grid_step: float = 0.05, workers: int = 1):
        self.sweep_uc = SweepSplitsUseCase(grid_step, workers)

    def execute(self, cfg: SimConfig, scenarios: Iterable[str] = DEFAULT_SCENARIOS) -> List[RobustnessRow]:
        rows = []
        for token in scenarios:
            rx, tx = parse_io_scenario(token)
            sweep = self.sweep_uc.execute(cfg.model_copy(update={"io_rx_level": rx, "io_tx_level": tx}))
            rows.append(
                RobustnessRow(
                    scenario=token,
                    planned_r=sweep.planned_r,
                    planned_amat_ns=sweep.planned_amat_ns,
                    best_r=sweep.best.r,
                    best_amat_ns=sweep.best.mean_amat_ns,
                )
            )
            logger.info(f"I/O scenario {token}: planned split {rows[-1].gap:+.2%} vs best")
        return rows
