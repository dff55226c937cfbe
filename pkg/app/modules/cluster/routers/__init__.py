from app.modules.cluster.routers.cluster import router as cluster_router

__all__ = ["cluster_router"]
