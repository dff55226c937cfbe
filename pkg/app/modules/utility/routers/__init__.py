from app.modules.utility.routers.utility import router as utility_router

__all__ = ["utility_router"]
