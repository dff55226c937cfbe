from app.modules.splitplan.services.splitplan_service import (
    nominal_availability,
    default_demand_grid,
    generate_curve,
    generate_set,
    quantize,
    select_curve,
    probe,
    curve_key,
)

__all__ = [
    "nominal_availability",
    "default_demand_grid",
    "generate_curve",
    "generate_set",
    "quantize",
    "select_curve",
    "probe",
    "curve_key",
]
