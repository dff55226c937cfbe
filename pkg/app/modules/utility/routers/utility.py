from fastapi import APIRouter, Query, status

from app.config.settings import settings
from app.core.enums import SalvageTopology
from app.core.schemas import DataResponse
from app.modules.utility.schemas import PodConfig, UtilityPoint
from app.modules.utility.services import utility_point

router = APIRouter()


@router.get(
    "",
    response_model=DataResponse[UtilityPoint],
    status_code=status.HTTP_200_OK,
    summary="Salvage-memory utility of a pod",
)
async def get_utility(
    n: int = Query(..., ge=1, description="Pod size"),
    p: float = Query(..., ge=0, le=1, description="Probability a salvage link is idle"),
    x: float = Query(1.0, gt=0, description="Provisioned device : link bandwidth"),
    samples: int = Query(10_000, ge=1, le=settings.MC_SAMPLES),
    seed: int = Query(settings.DEFAULT_SEED),
    topology: SalvageTopology = Query(SalvageTopology.POD, description="solo ignores n"),
) -> DataResponse[UtilityPoint]:
    point = utility_point(PodConfig(n=n, p=p, x=x), samples, seed, topology)
    return DataResponse(message="Utility computed", data=point)
