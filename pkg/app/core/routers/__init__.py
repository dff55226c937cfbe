from app.core.routers.routers import setup_routers
from app.core.routers.system import router as system_router

__all__ = ["setup_routers", "system_router"]
