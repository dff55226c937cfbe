from app.core.middleware.error_handler import ERROR_MESSAGES, ErrorHandlerMiddleware, LoggingMiddleware
from app.core.middleware.setup import setup_middleware

__all__ = ["ERROR_MESSAGES", "ErrorHandlerMiddleware", "LoggingMiddleware", "setup_middleware"]
