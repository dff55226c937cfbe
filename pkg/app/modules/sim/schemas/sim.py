from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field

from app.config.settings import settings
from app.modules.amat.schemas import SystemConfig


class SimConfig(BaseModel):
    """One interval-simulation run: a server, a workload and its I/O neighbours."""

    model_config = ConfigDict(frozen=True)

    system: SystemConfig
    r_star: float = Field(..., ge=0, le=1, description="Planned share of pages on primary memory")
    demand_mean: float = Field(..., ge=0, description="Mean memory demand, GB/s")
    demand_cv: float = Field(0.0, ge=0, description="Per-interval demand coefficient of variation")
    rho_rd: float = Field(0.75, ge=0, le=1)
    io_rx_level: float = Field(0.0, ge=0, le=1, description="Ingress I/O, fraction of peak")
    io_tx_level: float = Field(0.0, ge=0, le=1, description="Egress I/O, fraction of peak")
    io_mem_spill_rx: float = Field(1.0, ge=0, le=1, description="Share of ingress I/O reaching primary memory")
    io_mem_spill_tx: float = Field(1.0, ge=0, le=1, description="Share of egress I/O read from primary memory")
    io_peak_gbps: float = Field(settings.IO_PEAK_GBPS, gt=0)
    interval_ns: float = Field(settings.interval_ns, gt=0)
    n_intervals: int = Field(1000, ge=1)
    seed: int = settings.DEFAULT_SEED
    page_count: int = Field(100_000, ge=1)


class PlacementState(BaseModel):
    model_config = ConfigDict(frozen=True)

    primary_pages: int = Field(..., ge=0)
    salvage_pages: int = Field(..., ge=0)

    @property
    def total_pages(self) -> int:
        return self.primary_pages + self.salvage_pages

    @property
    def achieved_split(self) -> float:
        if self.total_pages == 0:
            return 1.0
        return self.primary_pages / self.total_pages


class IoTraffic(BaseModel):
    """Bytes the NIC moves over the link in one interval."""

    model_config = ConfigDict(frozen=True)

    rx_bytes: float = Field(..., ge=0)
    tx_bytes: float = Field(..., ge=0)
    interval_ns: float = Field(..., gt=0)

    @property
    def rx_gbps(self) -> float:
        # bytes per ns == GB/s
        return self.rx_bytes / self.interval_ns

    @property
    def tx_gbps(self) -> float:
        return self.tx_bytes / self.interval_ns


class IntervalRecord(BaseModel):
    """Per-interval metrics; amat_ns = service_ns + queuing_ns + cxl_ns."""

    model_config = ConfigDict(frozen=True)

    interval: int
    amat_ns: float
    service_ns: float
    queuing_ns: float
    cxl_ns: float
    u_p: float
    u_s: float
    u_ing: float
    u_egr: float
    backlog_ing: float = Field(..., description="Unserved memory link load, bytes")
    backlog_egr: float
    achieved_split: float
    primary_demand_gbps: float = 0.0
    saturated: bool = Field(False, description="Some utilization was past its curve's last knot")


class SimSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_intervals: int
    seed: int
    r_star: float
    achieved_split: float
    mean_amat_ns: float
    std_amat_ns: float
    p95_amat_ns: float
    mean_service_ns: float
    mean_queuing_ns: float
    mean_cxl_ns: float
    service_share: float
    queuing_share: float
    cxl_share: float
    mean_u_p: float
    mean_u_s: float
    mean_u_ing: float
    mean_u_egr: float
    mean_primary_demand_gbps: float
    final_backlog_ing: float
    final_backlog_egr: float
    saturated_intervals: int = 0

    @computed_field
    @property
    def saturated(self) -> bool:
        return self.saturated_intervals > 0


class SimMetrics(BaseModel):
    model_config = ConfigDict(frozen=True)

    records: Tuple[IntervalRecord, ...]
    summary: SimSummary


class SplitSweepPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    r: float
    mean_amat_ns: float
    std_amat_ns: float
    p95_amat_ns: float


class SplitSweep(BaseModel):
    """Simulated AMAT at every candidate split, for one workload."""

    model_config = ConfigDict(frozen=True)

    points: Tuple[SplitSweepPoint, ...]
    planned_r: float
    planned_amat_ns: float

    @property
    def best(self) -> SplitSweepPoint:
        return min(self.points, key=lambda p: (p.mean_amat_ns, -p.r))

    @property
    def planned_gap(self) -> float:
        """Relative AMAT excess of the planned split over the best simulated one."""
        return self.planned_amat_ns / self.best.mean_amat_ns - 1.0

    def plateau(self, width: float = 0.10):
        """Points within ``width`` of the planned split."""
        return [p for p in self.points if abs(p.r - self.planned_r) <= width + 1e-9]


class RobustnessRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    scenario: str
    planned_r: float
    planned_amat_ns: float
    best_r: float
    best_amat_ns: float

    @property
    def gap(self) -> float:
        return self.planned_amat_ns / self.best_amat_ns - 1.0


class SensitivityRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    premium_ns: float
    boost: float
    r_star: float
    capacity_exceeded: bool
    planned_amat_ns: float
    all_primary_amat_ns: float

    @property
    def amat_reduction(self) -> float:
        return 1.0 - self.planned_amat_ns / self.all_primary_amat_ns
