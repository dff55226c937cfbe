"""
AMAT Module Dependencies
"""

from typing import Annotated

from fastapi import Depends

from app.core.utils.lifespan import planner_state
from app.modules.amat.schemas import SystemConfig


def get_system_config() -> SystemConfig:
    return planner_state.system


SystemConfigDep = Annotated[SystemConfig, Depends(get_system_config)]
