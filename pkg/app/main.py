"""
FastAPI Application Entry Point

    uvicorn app.main:app            # or: python -m app.cli.main serve
"""

from fastapi import FastAPI
from app.config.settings import settings
from app.core.utils.logging import setup_logging
from app.core.utils.lifespan import lifespan
from app.core.middleware import setup_middleware
from app.core.routers import setup_routers


def create_app() -> FastAPI:
    """Planner service: AMAT model, split curves, pod utility and admission."""
    setup_logging()

    application = FastAPI(
        title=settings.APP_NAME,
        description="Salvage-memory traffic split planner: AMAT model, split curves, pod utility and admission",
        version=settings.TOOL_VERSION,
        docs_url="/docs" if settings.DEBUG else None,
        redoc_url="/redoc" if settings.DEBUG else None,
        lifespan=lifespan,
    )
    setup_middleware(application)
    setup_routers(application)
    return application


app = create_app()
