"""
Server bookkeeping and admission decisions of the cluster manager.

Every operation here is pure: it takes a ServerState and returns a new
one. Serializing updates to one server is the caller's job.
"""

import logging
from functools import reduce
from typing import Iterable, Optional, Tuple

from app.config.settings import settings
from app.core.exceptions import NoApplicableCurveError, NotFoundException
from app.modules.amat.schemas import SystemConfig
from app.modules.cluster.schemas import (
    DeployDecision,
    DeployedWorkload,
    ServerState,
    WorkloadProfile,
)
from app.modules.link.services import link_efficiency
from app.modules.splitplan.schemas import ResourceAvailability, SplitCurveSet
from app.modules.splitplan.use_cases import PlanSplitUseCase

logger = logging.getLogger(__name__)

RULE3_REASON = "rule 3: I/O-intensive workloads are not colocated with salvaging workloads"
NO_CURVE_REASON = "insufficient quantized availability"
CAPACITY_REASON = "demand exceeds the capacity of the selected availability"
COMMITMENT_REASON = "commitments exceed residual bandwidth"


def new_server(name: str, config: SystemConfig) -> ServerState:
    return ServerState(name=name, config=config)


def commitment_of(
    profile: WorkloadProfile,
    r_star: float,
    config: SystemConfig,
    io_peak_gbps: float = settings.IO_PEAK_GBPS,
) -> ResourceAvailability:
    """Bandwidth a workload holds on each axis at split ``r_star``."""
    salvage = (1.0 - r_star) * profile.demand_mean
    eta = link_efficiency(config.link)
    return ResourceAvailability(
        b_p_avail=r_star * profile.demand_mean,
        b_s_avail=salvage,
        link_ing_avail=salvage * profile.rho_rd / eta + profile.io_rx_level * io_peak_gbps,
        link_egr_avail=salvage * (1.0 - profile.rho_rd) / eta + profile.io_tx_level * io_peak_gbps,
    )


def recompute_committed(deployed: Iterable[DeployedWorkload]) -> ResourceAvailability:
    return reduce(lambda acc, d: acc.plus(d.commitment), deployed, ResourceAvailability.zero())


def residual(server: ServerState) -> ResourceAvailability:
    return server.nominal.minus(server.committed)


def _rule3_blocks(server: ServerState, profile: WorkloadProfile, r_star: Optional[float], threshold: float) -> bool:
    if profile.is_io_heavy(threshold) and server.salvaging:
        return True
    # the same rule seen from the other side: a new salvaging workload
    # must not join an I/O-intensive one
    if r_star is not None and r_star < 1.0:
        return any(d.profile.is_io_heavy(threshold) for d in server.deployed)
    return False


def deploy(
    server: ServerState,
    profile: WorkloadProfile,
    curve_set: SplitCurveSet,
    io_heavy_threshold: float = settings.IO_HEAVY_THRESHOLD,
    io_peak_gbps: float = settings.IO_PEAK_GBPS,
) -> Tuple[DeployDecision, ServerState]:
    """
    Admit ``profile`` onto ``server`` with the split planned for the
    server's current residual availability, or reject it with a reason.

    A plan flagged ``capacity_exceeded`` is rejected, although its
    curve entry still carries a fallback R*.
    """
    before = residual(server)

    def reject(reason: str, **extra) -> Tuple[DeployDecision, ServerState]:
        logger.info(f"Rejected {profile.name} on {server.name}: {reason}")
        return (
            DeployDecision(
                accepted=False,
                workload=profile.name,
                server=server.name,
                reason=reason,
                residual_before=before,
                residual_after=before,
                **extra,
            ),
            server,
        )

    if server.find(profile.name) is not None:
        return reject(f"workload {profile.name} is already deployed")
    if _rule3_blocks(server, profile, None, io_heavy_threshold):
        return reject(RULE3_REASON)

    try:
        plan = PlanSplitUseCase(curve_set).execute(before, profile.demand_mean)
    except NoApplicableCurveError as e:
        return reject(f"{NO_CURVE_REASON} ({e.axis})" if e.axis else NO_CURVE_REASON)

    extra = {"r_star": plan.r_star, "capacity_exceeded": plan.capacity_exceeded, "curve_key": plan.curve_key}
    if plan.capacity_exceeded:
        return reject(CAPACITY_REASON, **extra)
    if _rule3_blocks(server, profile, plan.r_star, io_heavy_threshold):
        return reject(RULE3_REASON, **extra)

    commitment = commitment_of(profile, plan.r_star, server.config, io_peak_gbps)
    if not commitment.fits_within(before):
        return reject(COMMITMENT_REASON, **extra)

    placed = DeployedWorkload(
        profile=profile.model_copy(update={"salvaging": plan.r_star < 1.0}),
        r_star=plan.r_star,
        commitment=commitment,
    )
    updated = server.model_copy(
        update={
            "deployed": server.deployed + (placed,),
            "committed": server.committed.plus(commitment),
        }
    )
    decision = DeployDecision(
        accepted=True,
        workload=profile.name,
        server=server.name,
        residual_before=before,
        residual_after=residual(updated),
        **extra,
    )
    logger.info(f"Deployed {profile.name} on {server.name} with R*={plan.r_star}")
    return decision, updated


def complete(server: ServerState, workload: str) -> Tuple[ServerState, DeployedWorkload, bool]:
    """
    Release ``workload``'s commitments. The flag is True when a salvaging
    workload remains after a non-salvaging one left, i.e. the I/O
    condition that justified salvaging may have changed.
    """
    released = server.find(workload)
    if released is None:
        raise NotFoundException(
            f"workload {workload} is not deployed on {server.name}",
            details={"server": server.name, "workload": workload},
        )
    remaining = tuple(d for d in server.deployed if d.profile.name != workload)
    updated = server.model_copy(
        update={"deployed": remaining, "committed": recompute_committed(remaining)}
    )
    advisory = not released.profile.salvaging and bool(updated.salvaging)
    return updated, released, advisory
