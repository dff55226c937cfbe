import logging
import time
from uuid import uuid4

from fastapi import Request
from fastapi.responses import JSONResponse
from pydantic import ValidationError
from starlette.middleware.base import BaseHTTPMiddleware

from app.core.exceptions import AppException
from app.core.utils.datetime import utc_timestamp

logger = logging.getLogger(__name__)


ERROR_MESSAGES = {
    400: "Invalid request",
    404: "Resource not found",
    409: "Request conflicts with current capacity",
    422: "Invalid data",
    500: "Internal server error",
}


def _error_response(status_code: int, message: str, error_code: str, details) -> JSONResponse:
    return JSONResponse(
        status_code=status_code,
        content={
            "error": True,
            "message": message,
            "error_code": error_code,
            "details": details,
            "timestamp": utc_timestamp(),
        },
    )


class ErrorHandlerMiddleware(BaseHTTPMiddleware):
    async def dispatch(self, request: Request, call_next):
        try:
            response = await call_next(request)
            return response
        except AppException as e:
            logger.warning(f"{e.__class__.__name__}: {e.message} (status={e.status_code})")
            return _error_response(e.status_code, e.message, e.error_code, e.details)
        except ValidationError as e:
            # domain models built inside handlers
            errors = e.errors(include_url=False, include_context=False)
            field = ".".join(str(p) for p in errors[0]["loc"]) if errors else None
            logger.warning(f"Validation failed on {field}: {e}")
            return _error_response(
                422,
                ERROR_MESSAGES[422],
                "SCHEMA_ERROR",
                {"field": field, "errors": errors},
            )
        except Exception as e:
            # Generic error handler
            logger.exception(f"Unhandled exception: {str(e)}")
            return _error_response(500, ERROR_MESSAGES[500], "INTERNAL_ERROR", {})


class LoggingMiddleware(BaseHTTPMiddleware):
    async def dispatch(self, request: Request, call_next):
        request_id = str(uuid4())[:8]
        start_time = time.time()

        logger.info(
            f"[{request_id}] → {request.method} {request.url.path} "
            f"(client: {request.client.host if request.client else 'unknown'})"
        )

        response = await call_next(request)

        process_time = (time.time() - start_time) * 1000
        logger.info(
            f"[{request_id}] ← {response.status_code} " f"({process_time:.2f}ms)"
        )

        response.headers["X-Request-ID"] = request_id
        response.headers["X-Process-Time"] = f"{process_time:.2f}ms"

        return response
