from app.core.schemas.base import BaseResponse
from app.core.schemas.data import DataResponse, ListResponse

__all__ = [
    "BaseResponse",
    "DataResponse",
    "ListResponse",
]
