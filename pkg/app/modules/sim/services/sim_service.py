"""
Interval simulator.

Each interval samples the workload's memory demand and the NIC's I/O,
splits memory traffic by the pages actually placed on each tier, lets
I/O claim the link first and prices every component on its load-latency
curve at the realized utilization.
"""

import logging
from dataclasses import dataclass
from typing import List, NamedTuple

import numpy as np

from app.core.enums import MemoryTier
from app.core.exceptions import DomainError
from app.modules.curves.services import saturating_latency_at
from app.modules.link.schemas import LinkSpec
from app.modules.link.services import link_efficiency
from app.modules.sim.schemas import (
    IntervalRecord,
    IoTraffic,
    PlacementState,
    SimConfig,
    SimMetrics,
    SimSummary,
)

logger = logging.getLogger(__name__)

IO_PACKET_BYTES = 64

METRICS_CSV_HEADER = (
    "interval",
    "amat_ns",
    "service_ns",
    "queuing_ns",
    "cxl_ns",
    "u_p",
    "u_s",
    "u_ing",
    "u_egr",
    "backlog_ing",
    "backlog_egr",
    "achieved_split",
)


class Arbitration(NamedTuple):
    granted_ing: float
    granted_egr: float
    backlog_ing: float
    backlog_egr: float


@dataclass
class SimState:
    """Mutable state of one run. Backlogs are carried link loads in GB/s."""

    rng: np.random.Generator
    placement: PlacementState
    interval: int = 0
    backlog_ing: float = 0.0
    backlog_egr: float = 0.0
    granted_ing: float = 0.0
    granted_egr: float = 0.0
    new_ing: float = 0.0
    new_egr: float = 0.0
    mem_starved_intervals: int = 0


def _check_fraction(name: str, value: float) -> None:
    if not (0.0 <= value <= 1.0):
        raise DomainError(f"{name} must be in [0, 1]", details={name: value})


def first_touch_place(r_star: float, rng: np.random.Generator) -> MemoryTier:
    """Tier for one newly touched page: primary with probability r_star."""
    _check_fraction("r_star", r_star)
    return MemoryTier.PRIMARY if rng.random() < r_star else MemoryTier.SALVAGE


def place_pages(r_star: float, page_count: int, rng: np.random.Generator) -> PlacementState:
    """First-touch placement of ``page_count`` pages in one draw."""
    _check_fraction("r_star", r_star)
    if page_count < 0:
        raise DomainError("page_count must be >= 0", details={"page_count": page_count})
    primary = int(np.count_nonzero(rng.random(page_count) < r_star))
    return PlacementState(primary_pages=primary, salvage_pages=page_count - primary)


def io_sample(level: float, peak_gbps: float, interval_ns: float, rng: np.random.Generator) -> float:
    """Poisson packet arrivals, in bytes, with mean level * peak * interval."""
    _check_fraction("level", level)
    mean_bytes = level * peak_gbps * interval_ns
    if mean_bytes <= 0:
        return 0.0
    return float(rng.poisson(mean_bytes / IO_PACKET_BYTES) * IO_PACKET_BYTES)


def _direction(capacity: float, io_gbps: float, mem_gbps: float):
    io_granted = min(io_gbps, capacity)
    granted = min(mem_gbps, capacity - io_granted)
    return io_granted, granted, mem_gbps - granted


def arbitrate(link: LinkSpec, io: IoTraffic, mem_ing_demand: float, mem_egr_demand: float) -> Arbitration:
    """
    I/O-priority arbitration of one interval, per direction: I/O takes
    its demand first (capped at capacity), memory gets what is left and
    the rest becomes backlog.
    """
    if mem_ing_demand < 0 or mem_egr_demand < 0:
        raise DomainError(
            "memory link demand must be >= 0",
            details={"ingress": mem_ing_demand, "egress": mem_egr_demand},
        )
    capacity = link.raw_bw_per_dir
    _, granted_ing, backlog_ing = _direction(capacity, io.rx_gbps, mem_ing_demand)
    _, granted_egr, backlog_egr = _direction(capacity, io.tx_gbps, mem_egr_demand)
    if io.rx_gbps > capacity or io.tx_gbps > capacity:
        logger.warning(
            f"I/O alone exceeds link capacity {capacity:g} GB/s "
            f"(rx={io.rx_gbps:.2f}, tx={io.tx_gbps:.2f}); memory traffic starved"
        )
    return Arbitration(granted_ing, granted_egr, backlog_ing, backlog_egr)


def new_state(cfg: SimConfig) -> SimState:
    rng = np.random.default_rng(cfg.seed)
    return SimState(rng=rng, placement=place_pages(cfg.r_star, cfg.page_count, rng))


def step(state: SimState, cfg: SimConfig) -> IntervalRecord:
    system = cfg.system
    link = system.link
    rng = state.rng

    demand = cfg.demand_mean * max(0.0, 1.0 + rng.normal(0.0, cfg.demand_cv))
    io = IoTraffic(
        rx_bytes=io_sample(cfg.io_rx_level, cfg.io_peak_gbps, cfg.interval_ns, rng),
        tx_bytes=io_sample(cfg.io_tx_level, cfg.io_peak_gbps, cfg.interval_ns, rng),
        interval_ns=cfg.interval_ns,
    )

    a = state.placement.achieved_split
    primary_demand = a * demand + cfg.io_mem_spill_rx * io.rx_gbps + cfg.io_mem_spill_tx * io.tx_gbps
    salvage_demand = (1.0 - a) * demand

    eta = link_efficiency(link)
    new_ing = salvage_demand * cfg.rho_rd / eta
    new_egr = salvage_demand * (1.0 - cfg.rho_rd) / eta
    offered_ing = new_ing + state.backlog_ing
    offered_egr = new_egr + state.backlog_egr
    arb = arbitrate(link, io, offered_ing, offered_egr)

    capacity = link.raw_bw_per_dir
    u_p = primary_demand / system.b_p
    u_s = salvage_demand / system.b_s
    u_ing = (min(io.rx_gbps, capacity) + arb.granted_ing) / capacity
    u_egr = (min(io.tx_gbps, capacity) + arb.granted_egr) / capacity

    p0 = system.primary_curve.unloaded_latency
    s0 = system.salvage_curve.unloaded_latency
    l_p = saturating_latency_at(system.primary_curve, u_p)
    l_s = saturating_latency_at(system.salvage_curve, u_s)
    l_ing = saturating_latency_at(link.ingress_curve, u_ing)
    l_egr = saturating_latency_at(link.egress_curve, u_egr)
    saturated = (
        u_p > system.primary_curve.max_utilization
        or u_s > system.salvage_curve.max_utilization
        or u_ing > link.ingress_curve.max_utilization
        or u_egr > link.egress_curve.max_utilization
    )

    backlog_ing_bytes = arb.backlog_ing * cfg.interval_ns
    backlog_egr_bytes = arb.backlog_egr * cfg.interval_ns
    drain_ns = (backlog_ing_bytes + backlog_egr_bytes) / capacity

    service = a * p0 + (1.0 - a) * s0
    queuing = a * (l_p - p0) + (1.0 - a) * (l_s - s0)
    cxl = (1.0 - a) * (l_ing + l_egr + drain_ns)

    if arb.granted_ing == 0 and offered_ing > 0:
        state.mem_starved_intervals += 1
    state.new_ing += new_ing
    state.new_egr += new_egr
    state.granted_ing += arb.granted_ing
    state.granted_egr += arb.granted_egr
    state.backlog_ing = arb.backlog_ing
    state.backlog_egr = arb.backlog_egr

    record = IntervalRecord(
        interval=state.interval,
        amat_ns=service + queuing + cxl,
        service_ns=service,
        queuing_ns=queuing,
        cxl_ns=cxl,
        u_p=u_p,
        u_s=u_s,
        u_ing=u_ing,
        u_egr=u_egr,
        backlog_ing=backlog_ing_bytes,
        backlog_egr=backlog_egr_bytes,
        achieved_split=a,
        primary_demand_gbps=primary_demand,
        saturated=saturated,
    )
    state.interval += 1
    return record


def summarize(records: List[IntervalRecord], cfg: SimConfig) -> SimSummary:
    amat = np.array([r.amat_ns for r in records])
    service = float(np.mean([r.service_ns for r in records]))
    queuing = float(np.mean([r.queuing_ns for r in records]))
    cxl = float(np.mean([r.cxl_ns for r in records]))
    mean_amat = float(amat.mean())
    share = (lambda x: x / mean_amat) if mean_amat > 0 else (lambda x: 0.0)
    return SimSummary(
        n_intervals=len(records),
        seed=cfg.seed,
        r_star=cfg.r_star,
        achieved_split=records[-1].achieved_split,
        mean_amat_ns=mean_amat,
        std_amat_ns=float(amat.std()),
        p95_amat_ns=float(np.percentile(amat, 95)),
        mean_service_ns=service,
        mean_queuing_ns=queuing,
        mean_cxl_ns=cxl,
        service_share=share(service),
        queuing_share=share(queuing),
        cxl_share=share(cxl),
        mean_u_p=float(np.mean([r.u_p for r in records])),
        mean_u_s=float(np.mean([r.u_s for r in records])),
        mean_u_ing=float(np.mean([r.u_ing for r in records])),
        mean_u_egr=float(np.mean([r.u_egr for r in records])),
        mean_primary_demand_gbps=float(np.mean([r.primary_demand_gbps for r in records])),
        final_backlog_ing=records[-1].backlog_ing,
        final_backlog_egr=records[-1].backlog_egr,
        saturated_intervals=sum(1 for r in records if r.saturated),
    )


def run(cfg: SimConfig) -> SimMetrics:
    state = new_state(cfg)
    records = [step(state, cfg) for _ in range(cfg.n_intervals)]
    if state.mem_starved_intervals:
        logger.info(f"Memory link traffic starved by I/O in {state.mem_starved_intervals} intervals")
    summary = summarize(records, cfg)
    if summary.saturated:
        logger.warning(
            f"{summary.saturated_intervals} of {summary.n_intervals} intervals ran past a curve's last knot; "
            "latencies there are clamped"
        )
    return SimMetrics(records=tuple(records), summary=summary)


def metrics_rows(metrics: SimMetrics):
    """CSV rows (without header) in METRICS_CSV_HEADER order."""
    for r in metrics.records:
        yield (
            r.interval,
            r.amat_ns,
            r.service_ns,
            r.queuing_ns,
            r.cxl_ns,
            r.u_p,
            r.u_s,
            r.u_ing,
            r.u_egr,
            r.backlog_ing,
            r.backlog_egr,
            r.achieved_split,
        )
