"""
Centralized middleware configuration.
"""

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from app.config.settings import settings
from app.core.middleware.error_handler import ErrorHandlerMiddleware, LoggingMiddleware


def setup_middleware(app: FastAPI) -> None:
    """
    Setup all middleware for the FastAPI application.

    The API is read-mostly and unauthenticated; CORS allows only the
    methods its routers use and exposes the tracing headers set by
    LoggingMiddleware.
    """
    # Middleware order: CORS -> Logging -> Error Handler
    app.add_middleware(
        CORSMiddleware,
        allow_origins=settings.CORS_ORIGINS,
        allow_credentials=False,
        allow_methods=["GET", "POST", "DELETE"],
        allow_headers=["Content-Type"],
        expose_headers=["X-Request-ID", "X-Process-Time"],
    )

    app.add_middleware(LoggingMiddleware)
    app.add_middleware(ErrorHandlerMiddleware)
