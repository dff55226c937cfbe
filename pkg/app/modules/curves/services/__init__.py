from app.modules.curves.services.curve_service import (
    latency_at,
    saturating_latency_at,
    synthetic_curve,
    flat_curve,
    shift,
    parse_curve_csv,
    emit_curve_csv,
    load_curve_csv,
)

__all__ = [
    "latency_at",
    "saturating_latency_at",
    "synthetic_curve",
    "flat_curve",
    "shift",
    "parse_curve_csv",
    "emit_curve_csv",
    "load_curve_csv",
]
