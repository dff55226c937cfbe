from app.core.exceptions.base import AppException
from app.core.exceptions.custom_error import (
    DomainError,
    CurveParseError,
    SchemaError,
    NoApplicableCurveError,
    CapacityRefusal,
)
from app.core.exceptions.client_errors import (
    BadRequestException,
    NotFoundException,
    ConflictException,
    ValidationException,
)

__all__ = [
    "AppException",
    "BadRequestException",
    "NotFoundException",
    "ConflictException",
    "ValidationException",
    "DomainError",
    "CurveParseError",
    "SchemaError",
    "NoApplicableCurveError",
    "CapacityRefusal",
]
