from fastapi import APIRouter, status

from app.core.schemas import DataResponse
from app.modules.amat.dependencies import SystemConfigDep
from app.modules.amat.schemas import (
    AmatRequest,
    AmatResult,
    OptimalSplitRequest,
    OptimalSplitResponse,
    SystemConfig,
)
from app.modules.amat.services import amat_breakdown, optimal_split

router = APIRouter()


@router.get(
    "/system",
    response_model=DataResponse[SystemConfig],
    status_code=status.HTTP_200_OK,
    summary="System configuration served by the planner",
)
async def get_system(system: SystemConfigDep) -> DataResponse[SystemConfig]:
    return DataResponse(message="System configuration retrieved", data=system)


@router.post(
    "/evaluate",
    response_model=DataResponse[AmatResult],
    status_code=status.HTTP_200_OK,
    summary="Evaluate AMAT at a given split and demand",
)
async def evaluate(request: AmatRequest, system: SystemConfigDep) -> DataResponse[AmatResult]:
    result = amat_breakdown(request.r, request.demand_gbps, system)
    return DataResponse(
        message="AMAT evaluated" if result.feasible else "Demand is infeasible at this split",
        data=result,
    )


@router.post(
    "/optimal-split",
    response_model=DataResponse[OptimalSplitResponse],
    status_code=status.HTTP_200_OK,
    summary="AMAT-minimizing traffic split for a demand",
)
async def get_optimal_split(
    request: OptimalSplitRequest, system: SystemConfigDep
) -> DataResponse[OptimalSplitResponse]:
    split = optimal_split(request.demand_gbps, system, request.grid_step)
    return DataResponse(
        message="Optimal split computed",
        data=OptimalSplitResponse(
            split=split, evaluation=amat_breakdown(split.r, request.demand_gbps, system)
        ),
    )
