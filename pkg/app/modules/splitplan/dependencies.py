"""
Split Plan Module Dependencies
"""

from typing import Annotated

from fastapi import Depends

from app.core.utils.lifespan import planner_state
from app.modules.splitplan.schemas import SplitCurveSet
from app.modules.splitplan.use_cases import PlanSplitUseCase


def get_curve_set() -> SplitCurveSet:
    return planner_state.curve_set


CurveSetDep = Annotated[SplitCurveSet, Depends(get_curve_set)]


def get_plan_split_use_case(curve_set: CurveSetDep) -> PlanSplitUseCase:
    return PlanSplitUseCase(curve_set)


PlanSplitUseCaseDep = Annotated[PlanSplitUseCase, Depends(get_plan_split_use_case)]
