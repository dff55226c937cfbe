"""
Application lifespan management.
"""

from contextlib import asynccontextmanager
from pathlib import Path
from typing import Optional
import asyncio
import logging
import threading

from fastapi import FastAPI

from app.config.presets import default_system
from app.config.settings import settings
from app.modules.amat.schemas import SystemConfig
from app.modules.cluster.repositories import ServerStore
from app.modules.splitplan.repositories import load_set
from app.modules.splitplan.schemas import SplitCurveSet
from app.modules.splitplan.services import default_demand_grid, generate_set

logger = logging.getLogger(__name__)


class PlannerState:
    """
    Process-wide planner state: the system served by default, the split
    curve set and the server registry. The curve set is loaded from
    SPLIT_CURVES_PATH when that file exists, generated otherwise.
    """

    def __init__(self):
        self._system: Optional[SystemConfig] = None
        self._curve_set: Optional[SplitCurveSet] = None
        self._curve_lock = threading.Lock()
        self.store = ServerStore()

    @property
    def system(self) -> SystemConfig:
        if self._system is None:
            self._system = default_system()
        return self._system

    @property
    def curve_set(self) -> SplitCurveSet:
        # dependencies run in the threadpool; generate once
        with self._curve_lock:
            if self._curve_set is None:
                self._curve_set = self._load_or_generate()
        return self._curve_set

    @property
    def curves_ready(self) -> bool:
        return self._curve_set is not None

    def _load_or_generate(self) -> SplitCurveSet:
        path = Path(settings.SPLIT_CURVES_PATH)
        if path.is_file():
            logger.info(f"Loading split curves from {path}")
            return load_set(path)
        logger.info(f"{path} not found; generating split curves for the default system")
        return generate_set(
            self.system,
            settings.AVAILABILITY_LEVELS,
            default_demand_grid(self.system, settings.DEMAND_GRID_POINTS),
            settings.GRID_STEP,
            settings.MAX_SPLIT_CURVES,
        )

    def reset(self) -> None:
        self._system = None
        self._curve_set = None
        self.store = ServerStore()


# Global Instance
planner_state = PlannerState()


@asynccontextmanager
async def lifespan(app: FastAPI):
    """
    Lifespan context manager for FastAPI application startup and shutdown.

    Args:
        app: FastAPI application instance

    Yields:
        None: Control back to the application
    """
    # Startup
    logger.info(f"Starting {settings.APP_NAME}...")

    # curve generation is CPU bound; keep the event loop free
    curve_set = await asyncio.to_thread(lambda: planner_state.curve_set)
    logger.info(f"Split curves ready ({len(curve_set.curves)} curves)")

    yield

    # Shutdown
    logger.info(f"Shutting down {settings.APP_NAME}...")
