
from fastapi import APIRouter, status

from app.core.schemas import DataResponse, ListResponse
from app.modules.cluster.dependencies import ClusterServiceDep
from app.modules.cluster.schemas import (
    DeployDecision,
    DeployRequest,
    RegisterServerRequest,
    ServerView,
)
from app.modules.amat.dependencies import SystemConfigDep

router = APIRouter()


@router.post(
    "",
    response_model=DataResponse[ServerView],
    status_code=status.HTTP_201_CREATED,
    summary="Register a server",
)
async def register_server(
    request: RegisterServerRequest, service: ClusterServiceDep, system: SystemConfigDep
) -> DataResponse[ServerView]:
    server = await service.register_server(request.name, system)
    return DataResponse(message="Server registered", data=server)


@router.get(
    "",
    response_model=ListResponse[ServerView],
    status_code=status.HTTP_200_OK,
    summary="List servers",
)
async def list_servers(service: ClusterServiceDep) -> ListResponse[ServerView]:
    return ListResponse(message="Servers retrieved", data=await service.list_servers())


@router.get(
    "/{name}",
    response_model=DataResponse[ServerView],
    status_code=status.HTTP_200_OK,
    summary="Server commitments and residual availability",
)
async def get_server(name: str, service: ClusterServiceDep) -> DataResponse[ServerView]:
    return DataResponse(message="Server retrieved", data=await service.get_server(name))


@router.post(
    "/{name}/workloads",
    response_model=DataResponse[DeployDecision],
    status_code=status.HTTP_200_OK,
    summary="Deploy a workload; accepted decisions carry R*",
)
async def deploy_workload(
    name: str, request: DeployRequest, service: ClusterServiceDep
) -> DataResponse[DeployDecision]:
    decision = await service.deploy(name, request.workload, request.io_heavy_threshold)
    return DataResponse(
        message="Workload deployed" if decision.accepted else f"Workload rejected: {decision.reason}",
        data=decision,
    )


@router.delete(
    "/{name}/workloads/{workload}",
    response_model=DataResponse[ServerView],
    status_code=status.HTTP_200_OK,
    summary="Complete a workload and release its commitments",
)
async def complete_workload(name: str, workload: str, service: ClusterServiceDep) -> DataResponse[ServerView]:
    server = await service.complete(name, workload)
    return DataResponse(message="Workload completed", data=server)
