"""
Link model: efficiency, metadata-limited effective bandwidth, per-direction
utilization and latency.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from app.core.exceptions import DomainError
from app.modules.curves.schemas import LoadLatencyCurve
from app.modules.curves.services import latency_at, synthetic_curve
from app.modules.link.schemas import LinkSpec, MetadataModel

logger = logging.getLogger(__name__)

CACHE_LINE_BYTES = 64.0


def link_efficiency(spec: LinkSpec) -> float:
    if spec.eta is not None:
        return spec.eta
    return spec.flit_payload / spec.flit_total


def effective_direction_bandwidth(spec: LinkSpec, read_fraction: float) -> Tuple[float, float]:
    """
    Data payload bandwidth (rx_eff, tx_eff) in GB/s each direction can
    deliver for a given read fraction once flit efficiency and per-access
    metadata are paid.
    """
    if not (0.0 <= read_fraction <= 1.0):
        raise DomainError("read_fraction must be in [0, 1]", details={"read_fraction": read_fraction})

    meta = spec.meta
    f = read_fraction
    wire = link_efficiency(spec) * spec.raw_bw_per_dir

    # bytes on each direction per 64B of workload data
    ing_bytes = f * (CACHE_LINE_BYTES + meta.rd_resp_hdr_bytes) + (1.0 - f) * meta.wr_cmpl_bytes
    egr_bytes = f * meta.rd_req_bytes + (1.0 - f) * (CACHE_LINE_BYTES + meta.wr_hdr_bytes)

    rx_eff = wire * f * CACHE_LINE_BYTES / ing_bytes if ing_bytes > 0 else 0.0
    tx_eff = wire * (1.0 - f) * CACHE_LINE_BYTES / egr_bytes if egr_bytes > 0 else 0.0
    return rx_eff, tx_eff


def _load_fraction(load: float, capacity: float) -> float:
    if load <= 0:
        return 0.0
    if capacity <= 0:
        return math.inf
    return load / capacity


def direction_utilization(
    spec: LinkSpec,
    salvage_demand: float,
    rho_rd: float,
    ing_capacity: Optional[float] = None,
    egr_capacity: Optional[float] = None,
) -> Tuple[float, float]:
    """
    Per-direction link utilization for ``salvage_demand`` GB/s of memory
    traffic. Reads load ingress and writes load egress, both inflated
    by 1/eta, then normalized by the direction's capacity (raw per-direction
    bandwidth unless an availability is given).
    """
    if salvage_demand < 0:
        raise DomainError("salvage demand must be >= 0", details={"salvage_demand": salvage_demand})
    if not (0.0 <= rho_rd <= 1.0):
        raise DomainError("rho_rd must be in [0, 1]", details={"rho_rd": rho_rd})

    eta = link_efficiency(spec)
    load_ing = salvage_demand * rho_rd / eta
    load_egr = salvage_demand * (1.0 - rho_rd) / eta
    ing_cap = spec.raw_bw_per_dir if ing_capacity is None else ing_capacity
    egr_cap = spec.raw_bw_per_dir if egr_capacity is None else egr_capacity
    return _load_fraction(load_ing, ing_cap), _load_fraction(load_egr, egr_cap)


def link_latency(spec: LinkSpec, u_ing: float, u_egr: float) -> Tuple[float, float]:
    return latency_at(spec.ingress_curve, u_ing), latency_at(spec.egress_curve, u_egr)


def direction_curve(
    l0: float,
    q: float,
    u_max: float = 0.95,
    n_points: int = 50,
    label: str = "",
) -> LoadLatencyCurve:
    """Link direction curve l0 + q*u/(1-u); l0 may be 0 for a premium-free link."""
    if l0 > 0:
        return synthetic_curve(l0, q, u_max, n_points, label=label)
    if q < 0 or not (0 < u_max < 1) or n_points < 2:
        raise DomainError(
            "direction curve needs q >= 0, 0 < u_max < 1, n_points >= 2",
            details={"q": q, "u_max": u_max, "n_points": n_points},
        )
    us = np.linspace(0.0, u_max, n_points)
    return LoadLatencyCurve(
        points=tuple(zip(us.tolist(), (q * us / (1.0 - us)).tolist())),
        label=label or f"link(q={q:g})",
    )


def build_link_spec(
    premium_ns: float = 100.0,
    queue_ns: float = 10.0,
    raw_bw_per_dir: float = 64.0,
    eta: Optional[float] = 0.94,
    ingress_share: float = 0.5,
    u_max: float = 0.95,
    n_points: int = 50,
    lanes: int = 16,
    meta: Optional[MetadataModel] = None,
) -> LinkSpec:
    """
    Link whose zero-load ingress/egress latencies split ``premium_ns``
    by ``ingress_share``, each with a queuing coefficient of ``queue_ns``.
    """
    ing_l0 = premium_ns * ingress_share
    egr_l0 = premium_ns - ing_l0
    return LinkSpec(
        lanes=lanes,
        raw_bw_per_dir=raw_bw_per_dir,
        eta=eta,
        base_overhead=premium_ns,
        ingress_share=ingress_share,
        ingress_curve=direction_curve(ing_l0, queue_ns, u_max, n_points, label="link-ingress (synthetic)"),
        egress_curve=direction_curve(egr_l0, queue_ns, u_max, n_points, label="link-egress (synthetic)"),
        meta=meta or MetadataModel(),
    )


def _rebase(curve: LoadLatencyCurve, new_l0: float, label: str) -> LoadLatencyCurve:
    delta = new_l0 - curve.unloaded_latency
    return LoadLatencyCurve(
        points=tuple((u, max(0.0, lat + delta)) for u, lat in curve.points),
        label=label,
    )


def rebase_link_premium(spec: LinkSpec, premium_ns: float) -> LinkSpec:
    """Same link, with its zero-load premium moved to ``premium_ns`` (curve shapes kept)."""
    if premium_ns < 0:
        raise DomainError("premium must be >= 0", details={"premium_ns": premium_ns})
    ing_l0 = premium_ns * spec.ingress_share
    return spec.model_copy(
        update={
            "base_overhead": premium_ns,
            "ingress_curve": _rebase(spec.ingress_curve, ing_l0, spec.ingress_curve.label),
            "egress_curve": _rebase(spec.egress_curve, premium_ns - ing_l0, spec.egress_curve.label),
        }
    )
