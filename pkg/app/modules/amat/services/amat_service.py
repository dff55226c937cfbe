"""
Analytical AMAT model and optimal traffic split.

AMAT(R) = R*L_P(U_P) + (1-R)*[L_S(U_S) + L_ing(U_ing) + L_egr(U_egr)]
with U_P = R*D/B_P, U_S = (1-R)*D/B_S and link utilizations from the
per-direction loads normalized by link capacity.
"""

import logging
import math
from typing import List, Tuple, Union

from app.core.exceptions import DomainError
from app.modules.amat.schemas import AmatResult, SystemConfig, TrafficSplit
from app.modules.curves.schemas import INFEASIBLE, is_feasible
from app.modules.curves.services import latency_at
from app.modules.link.services import direction_utilization, link_latency, rebase_link_premium

logger = logging.getLogger(__name__)

SplitLike = Union[TrafficSplit, float]

# AMAT values closer than this are ties.
_TIE_NS = 1e-9


def _fraction(r: SplitLike) -> float:
    value = r.r if isinstance(r, TrafficSplit) else float(r)
    if not (0.0 <= value <= 1.0):
        raise DomainError("traffic split must be in [0, 1]", details={"r": value})
    return value


def _check_demand(d: float) -> None:
    if math.isnan(d) or d < 0:
        raise DomainError("demand must be >= 0", details={"demand_gbps": d})


def _ratio(load: float, capacity: float) -> float:
    if load <= 0:
        return 0.0
    if capacity <= 0:
        return math.inf
    return load / capacity


def utilizations(r: SplitLike, d: float, cfg: SystemConfig) -> Tuple[float, float]:
    """(U_P, U_S) for split ``r`` of demand ``d`` GB/s."""
    r = _fraction(r)
    _check_demand(d)
    return _ratio(r * d, cfg.b_p), _ratio((1.0 - r) * d, cfg.b_s)


def link_utilizations(r: SplitLike, d: float, cfg: SystemConfig) -> Tuple[float, float]:
    r = _fraction(r)
    _check_demand(d)
    return direction_utilization(
        cfg.link, (1.0 - r) * d, cfg.rho_rd, cfg.ing_capacity, cfg.egr_capacity
    )


def amat_of(r: SplitLike, d: float, cfg: SystemConfig) -> float:
    """AMAT in ns, or INFEASIBLE when any component saturates."""
    r = _fraction(r)
    u_p, u_s = utilizations(r, d, cfg)

    primary = latency_at(cfg.primary_curve, u_p) if r > 0 else 0.0
    salvage = 0.0
    if r < 1:
        u_ing, u_egr = link_utilizations(r, d, cfg)
        l_ing, l_egr = link_latency(cfg.link, u_ing, u_egr)
        salvage = latency_at(cfg.salvage_curve, u_s) + l_ing + l_egr

    if not (is_feasible(primary) and is_feasible(salvage)):
        return INFEASIBLE
    return r * primary + (1.0 - r) * salvage


def amat_breakdown(r: SplitLike, d: float, cfg: SystemConfig) -> AmatResult:
    """
    amat_of plus its decomposition: service (unloaded memory latency),
    queuing (memory latency above unloaded) and link interface delay.
    """
    r = _fraction(r)
    u_p, u_s = utilizations(r, d, cfg)
    u_ing, u_egr = link_utilizations(r, d, cfg)
    amat = amat_of(r, d, cfg)
    feasible = is_feasible(amat)

    service = queuing = interface = INFEASIBLE
    if feasible:
        p0, s0 = cfg.primary_curve.unloaded_latency, cfg.salvage_curve.unloaded_latency
        service = r * p0 + (1.0 - r) * s0
        queuing = 0.0
        interface = 0.0
        if r > 0:
            queuing += r * (latency_at(cfg.primary_curve, u_p) - p0)
        if r < 1:
            queuing += (1.0 - r) * (latency_at(cfg.salvage_curve, u_s) - s0)
            l_ing, l_egr = link_latency(cfg.link, u_ing, u_egr)
            interface = (1.0 - r) * (l_ing + l_egr)

    return AmatResult(
        r=r,
        demand_gbps=d,
        amat_ns=amat,
        feasible=feasible,
        u_p=u_p,
        u_s=u_s,
        u_ing=u_ing,
        u_egr=u_egr,
        service_ns=service,
        queuing_ns=queuing,
        interface_ns=interface,
    )


def candidate_splits(grid_step: float = 0.05) -> List[float]:
    """Candidate R values {step, 2*step, ..., 1.0}; 0 is never a candidate."""
    if not (0.0 < grid_step <= 1.0):
        raise DomainError("grid_step must be in (0, 1]", details={"grid_step": grid_step})
    n = int(math.floor(1.0 / grid_step + 1e-9))
    candidates = [round(k * grid_step, 10) for k in range(1, n + 1)]
    if candidates[-1] < 1.0:
        candidates.append(1.0)
    return candidates


def _peak_utilization(r: float, d: float, cfg: SystemConfig) -> float:
    return max(*utilizations(r, d, cfg), *link_utilizations(r, d, cfg))


def optimal_split(d: float, cfg: SystemConfig, grid_step: float = 0.05) -> TrafficSplit:
    """
    Exhaustive argmin of AMAT over the candidate grid. Ties go to the
    larger R. With no feasible candidate, returns the split minimizing
    peak utilization, flagged capacity_exceeded.
    """
    _check_demand(d)
    candidates = candidate_splits(grid_step)

    best_r, best_amat = None, INFEASIBLE
    # largest R first, strict improvement only: ties keep the primary-heavy split
    for r in reversed(candidates):
        amat = amat_of(r, d, cfg)
        if amat < best_amat - _TIE_NS:
            best_r, best_amat = r, amat
    if best_r is not None:
        return TrafficSplit(r=best_r)

    best_r, best_peak = 1.0, math.inf
    for r in reversed(candidates):
        peak = _peak_utilization(r, d, cfg)
        if peak < best_peak:
            best_r, best_peak = r, peak
    logger.info(f"Demand {d:.2f} GB/s exceeds capacity; falling back to R={best_r}")
    return TrafficSplit(r=best_r, capacity_exceeded=True)


def salvage_variant(cfg: SystemConfig, premium_ns: float, boost: float) -> SystemConfig:
    """
    "premium @ boost" salvage memory: B_S = boost * B_P, link zero-load
    premium set to ``premium_ns``.
    """
    if boost <= 0:
        raise DomainError("bandwidth boost must be > 0", details={"boost": boost})
    return cfg.model_copy(
        update={
            "b_s": boost * cfg.b_p,
            "link": rebase_link_premium(cfg.link, premium_ns),
            "label": f"{premium_ns:g} ns @ {boost * 100:g}% boost",
        }
    )
