from app.modules.splitplan.routers.split_plan import router as split_plan_router

__all__ = ["split_plan_router"]
