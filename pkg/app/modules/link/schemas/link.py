from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.modules.curves.schemas import LoadLatencyCurve

# Link zero-load latencies must match the configured premium within this.
_OVERHEAD_TOLERANCE_NS = 1e-6


class MetadataModel(BaseModel):
    """
    Transport metadata carried per 64B access, in bytes.

    Defaults are calibrated so a 2:1 read/write mix leaves ~80% (RX) and
    ~40% (TX) of the raw link as data payload at eta = 0.94; see
    scripts/calibrate_metadata.py.
    """

    model_config = ConfigDict(frozen=True)

    rd_req_bytes: float = Field(32.0, ge=0, description="Egress bytes per read request")
    rd_resp_hdr_bytes: float = Field(8.0, ge=0, description="Ingress bytes per read beyond the 64B data")
    wr_hdr_bytes: float = Field(22.0, ge=0, description="Egress bytes per write beyond the 64B data")
    wr_cmpl_bytes: float = Field(6.0, ge=0, description="Ingress bytes per write completion")


class LinkSpec(BaseModel):
    """Full-duplex multiplexed serial link between the CPU and the salvage device."""

    model_config = ConfigDict(frozen=True)

    lanes: int = Field(16, ge=1)
    raw_bw_per_dir: float = Field(64.0, gt=0, description="GB/s per direction")
    flit_payload: int = Field(64, gt=0, description="Payload bytes per flit")
    flit_total: int = Field(68, gt=0, description="Total bytes per flit")
    eta: Optional[float] = Field(
        0.94, description="Effective link efficiency; None derives it from the flit format"
    )
    base_overhead: float = Field(100.0, ge=0, description="Zero-load premium over direct DDR, ns")
    ingress_share: float = Field(0.5, ge=0, le=1, description="Share of base_overhead on ingress")
    ingress_curve: LoadLatencyCurve
    egress_curve: LoadLatencyCurve
    meta: MetadataModel = Field(default_factory=MetadataModel)

    @model_validator(mode="after")
    def _check_consistency(self) -> "LinkSpec":
        if self.eta is not None and not (0 < self.eta <= 1):
            raise ValueError(f"eta must be in (0, 1], got {self.eta}")
        if self.flit_payload > self.flit_total:
            raise ValueError("flit_payload cannot exceed flit_total")
        expected_ing = self.base_overhead * self.ingress_share
        expected_egr = self.base_overhead - expected_ing
        if abs(self.ingress_curve.unloaded_latency - expected_ing) > _OVERHEAD_TOLERANCE_NS:
            raise ValueError(
                f"ingress curve zero-load latency {self.ingress_curve.unloaded_latency} "
                f"does not match its {expected_ing} ns share of base_overhead"
            )
        if abs(self.egress_curve.unloaded_latency - expected_egr) > _OVERHEAD_TOLERANCE_NS:
            raise ValueError(
                f"egress curve zero-load latency {self.egress_curve.unloaded_latency} "
                f"does not match its {expected_egr} ns share of base_overhead"
            )
        return self
