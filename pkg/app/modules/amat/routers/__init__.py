from app.modules.amat.routers.amat import router as amat_router

__all__ = ["amat_router"]
