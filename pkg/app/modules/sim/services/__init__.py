from app.modules.sim.services.sim_service import (
    IO_PACKET_BYTES,
    METRICS_CSV_HEADER,
    Arbitration,
    SimState,
    first_touch_place,
    place_pages,
    io_sample,
    arbitrate,
    new_state,
    step,
    summarize,
    run,
    metrics_rows,
)

__all__ = [
    "IO_PACKET_BYTES",
    "METRICS_CSV_HEADER",
    "Arbitration",
    "SimState",
    "first_touch_place",
    "place_pages",
    "io_sample",
    "arbitrate",
    "new_state",
    "step",
    "summarize",
    "run",
    "metrics_rows",
]
