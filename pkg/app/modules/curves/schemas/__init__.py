from app.modules.curves.schemas.curve import LoadLatencyCurve, INFEASIBLE, is_feasible

__all__ = [
    "LoadLatencyCurve",
    "INFEASIBLE",
    "is_feasible",
]
