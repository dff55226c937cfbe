"""
System and health check endpoints.
"""

from fastapi import APIRouter
from app.config.settings import settings
from app.core.utils.lifespan import planner_state

router = APIRouter()


@router.get("/")
async def root():
    """Root endpoint providing service information."""
    return {
        "service": settings.APP_NAME,
        "version": settings.TOOL_VERSION,
        "environment": settings.APP_ENV,
        "api": settings.API_PREFIX,
        "docs": "/docs" if settings.DEBUG else None,
    }


@router.get("/health")
async def health_check():
    """
    Liveness plus planner readiness: split curves are loaded or generated
    lazily on the first planning request in development.
    """
    return {
        "status": "healthy",
        "service": settings.APP_NAME,
        "split_curves_loaded": planner_state.curves_ready,
        "servers": len(planner_state.store),
    }
