from typing import Generic, List, TypeVar

from pydantic import Field, model_validator

from app.core.schemas.base import BaseResponse


T = TypeVar("T")


class DataResponse(BaseResponse, Generic[T]):
    data: T = Field(..., description="Response data")


class ListResponse(BaseResponse, Generic[T]):
    """List payload with its length; the planner's collections are small and never paged."""

    data: List[T] = Field(default_factory=list, description="Response items")
    count: int = Field(0, ge=0, description="Number of items in data")

    @model_validator(mode="after")
    def _set_count(self) -> "ListResponse[T]":
        self.count = len(self.data)
        return self
