"""
Domain exceptions for the planning toolkit.

Each carries the CLI exit code it maps to:
1 usage/domain error, 2 config/schema error, 3 infeasible or capacity refusal.
"""

from typing import Any, Dict, Optional

from app.core.exceptions.client_errors import (
    BadRequestException,
    ConflictException,
    ValidationException,
)


class DomainError(ValidationException):
    """
    Raised when an operation is called outside its domain.

    Example:
        >>> raise DomainError("utilization must be >= 0", details={"u": -0.1})
    """

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, "DOMAIN_ERROR", details, exit_code=1)


class CurveParseError(BadRequestException):
    """Raised by the CSV curve reader; ``row`` counts data rows from 1, 0 is the header."""

    def __init__(self, message: str, row: Optional[int] = None):
        self.row = row
        prefix = f"row {row}: " if row is not None else ""
        super().__init__(
            f"{prefix}{message}",
            "CURVE_PARSE_ERROR",
            {"row": row} if row is not None else None,
            exit_code=2,
        )


class SchemaError(ValidationException):
    """Config or split-curve-set file does not match the documented schema."""

    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        payload = dict(details or {})
        if field:
            payload["field"] = field
        super().__init__(message, "SCHEMA_ERROR", payload, exit_code=2)


class NoApplicableCurveError(ConflictException):
    """Current availability lies below the smallest grid point on some axis."""

    def __init__(self, message: str = "insufficient quantized availability", axis: Optional[str] = None):
        self.axis = axis
        super().__init__(
            message,
            "NO_APPLICABLE_CURVE",
            {"axis": axis} if axis else None,
            exit_code=3,
        )


class CapacityRefusal(ConflictException):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, "CAPACITY_REFUSAL", details, exit_code=3)
