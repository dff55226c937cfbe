"""
Shipped default configurations.

All latency curves here are synthetic (l0 + q*u/(1-u)) and labeled as
such; profiled curves are loaded from CSV through a config document.
"""

from typing import Tuple

from app.config.settings import settings
from app.modules.amat.schemas import SystemConfig
from app.modules.curves.schemas import LoadLatencyCurve
from app.modules.curves.services import synthetic_curve
from app.modules.link.services import build_link_spec
from app.modules.sim.schemas import SimConfig

# One DDR5-4800 channel
PRIMARY_BW_GBPS = 38.4
PRIMARY_UNLOADED_NS = 118.0
PRIMARY_QUEUE_NS = 60.0

DEFAULT_BOOST = 0.5
DEFAULT_PREMIUM_NS = 100.0
LINK_QUEUE_NS = 10.0
LINK_RAW_GBPS = 64.0  # x16 PCIe 5.0, per direction

# (premium ns, bandwidth boost) pairs for the split-curve figure
SPLIT_CURVE_VARIANTS: Tuple[Tuple[float, float], ...] = (
    (50.0, 0.5),
    (200.0, 0.5),
    (50.0, 1.0),
    (200.0, 1.0),
)

SENSITIVITY_PREMIUMS_NS: Tuple[float, ...] = (50.0, 100.0, 150.0, 200.0)
SENSITIVITY_BOOSTS: Tuple[float, ...] = (0.25, 0.5, 0.75, 1.0)

# Memory-bound workload: 80% of primary bandwidth on average
MEMORY_BOUND_DEMAND_GBPS = 0.8 * PRIMARY_BW_GBPS

# NIC payload that reaches DRAM despite DDIO: ingress evicted from the
# LLC I/O ways, egress buffers no longer cached
DDIO_SPILL_RX = 0.10
DDIO_SPILL_TX = 0.05


def ddr_curve(label: str = "DDR5-4800 (synthetic)") -> LoadLatencyCurve:
    return synthetic_curve(PRIMARY_UNLOADED_NS, PRIMARY_QUEUE_NS, 0.95, 50, label=label)


def default_system() -> SystemConfig:
    """DDR5 primary channel plus a 50%-boost salvage device behind an x16 link."""
    return SystemConfig(
        b_p=PRIMARY_BW_GBPS,
        b_s=DEFAULT_BOOST * PRIMARY_BW_GBPS,
        primary_curve=ddr_curve(),
        salvage_curve=ddr_curve("salvage DDR5 (synthetic)"),
        link=build_link_spec(
            premium_ns=DEFAULT_PREMIUM_NS,
            queue_ns=LINK_QUEUE_NS,
            raw_bw_per_dir=LINK_RAW_GBPS,
            eta=settings.LINK_ETA,
        ),
        rho_rd=settings.RHO_RD,
        label=f"{DEFAULT_PREMIUM_NS:g} ns @ {DEFAULT_BOOST * 100:g}% boost",
    )


def memory_bound_scenario(
    r_star: float = 1.0,
    demand_cv: float = 0.0,
    io_rx_level: float = 0.0,
    io_tx_level: float = 0.0,
    n_intervals: int = 400,
    seed: int = None,
) -> SimConfig:
    return SimConfig(
        system=default_system(),
        r_star=r_star,
        demand_mean=MEMORY_BOUND_DEMAND_GBPS,
        demand_cv=demand_cv,
        rho_rd=settings.RHO_RD,
        io_rx_level=io_rx_level,
        io_tx_level=io_tx_level,
        io_mem_spill_rx=DDIO_SPILL_RX,
        io_mem_spill_tx=DDIO_SPILL_TX,
        n_intervals=n_intervals,
        seed=settings.DEFAULT_SEED if seed is None else seed,
        page_count=100_000,
    )
