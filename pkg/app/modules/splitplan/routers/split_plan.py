from fastapi import APIRouter, status

from app.core.schemas import DataResponse
from app.modules.splitplan.dependencies import CurveSetDep, PlanSplitUseCaseDep
from app.modules.splitplan.schemas import GridSpec, PlanRequest, PlanResult

router = APIRouter()


@router.get(
    "/grid",
    response_model=DataResponse[GridSpec],
    status_code=status.HTTP_200_OK,
    summary="Availability grid and demand grid of the loaded split curves",
)
async def get_grid(curve_set: CurveSetDep) -> DataResponse[GridSpec]:
    return DataResponse(
        message=f"{len(curve_set.curves)} split curves loaded",
        data=curve_set.grid_spec,
    )


@router.post(
    "/plan",
    response_model=DataResponse[PlanResult],
    status_code=status.HTTP_200_OK,
    summary="Select the split curve for a residual availability and probe it",
)
async def plan(request: PlanRequest, use_case: PlanSplitUseCaseDep) -> DataResponse[PlanResult]:
    result = use_case.execute(request.residual, request.demand_gbps)
    return DataResponse(message="Split planned", data=result)
