from app.modules.link.services.link_service import (
    CACHE_LINE_BYTES,
    link_efficiency,
    effective_direction_bandwidth,
    direction_utilization,
    link_latency,
    direction_curve,
    build_link_spec,
    rebase_link_premium,
)

__all__ = [
    "CACHE_LINE_BYTES",
    "link_efficiency",
    "effective_direction_bandwidth",
    "direction_utilization",
    "link_latency",
    "direction_curve",
    "build_link_spec",
    "rebase_link_premium",
]
