"""
Versioned JSON configuration documents.

Every document carries ``schema_version: 1``. Relative paths inside a
document (CSV curves, referenced system files) resolve against the
document's own directory.
"""

import json
import logging
from pathlib import Path
from typing import Annotated, List, Literal, Optional, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from app.config.presets import default_system
from app.config.settings import settings
from app.core.enums import parse_io_scenario
from app.core.exceptions import NotFoundException, SchemaError
from app.modules.amat.schemas import SystemConfig
from app.modules.amat.services import optimal_split
from app.modules.cluster.schemas import WorkloadProfile
from app.modules.curves.schemas import LoadLatencyCurve
from app.modules.curves.services import load_curve_csv, synthetic_curve
from app.modules.link.schemas import LinkSpec, MetadataModel
from app.modules.link.services import build_link_spec
from app.modules.sim.schemas import SimConfig
from app.modules.splitplan.schemas import ResourceAvailability

logger = logging.getLogger(__name__)

CONFIG_SCHEMA_VERSION = 1

DocumentT = TypeVar("DocumentT", bound=BaseModel)


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class SyntheticCurveSource(_Document):
    kind: Literal["synthetic"] = "synthetic"
    l0: float = Field(..., gt=0, description="Unloaded latency, ns")
    q: float = Field(..., ge=0, description="Queuing coefficient, ns")
    u_max: float = Field(0.95, gt=0, lt=1)
    n_points: int = Field(50, ge=2)
    label: str = ""

    def build(self, base_dir: Path) -> LoadLatencyCurve:
        return synthetic_curve(self.l0, self.q, self.u_max, self.n_points, self.label)


class PointsCurveSource(_Document):
    kind: Literal["points"] = "points"
    points: List[Tuple[float, float]] = Field(..., min_length=2)
    label: str = ""

    def build(self, base_dir: Path) -> LoadLatencyCurve:
        return LoadLatencyCurve(points=tuple(self.points), label=self.label or "inline")


class CsvCurveSource(_Document):
    kind: Literal["csv"] = "csv"
    path: str
    label: str = ""

    def build(self, base_dir: Path) -> LoadLatencyCurve:
        path = resolve_path(self.path, base_dir)
        curve = load_curve_csv(path)
        return curve.model_copy(update={"label": self.label}) if self.label else curve


CurveSource = Annotated[
    Union[SyntheticCurveSource, PointsCurveSource, CsvCurveSource],
    Field(discriminator="kind"),
]


class LinkDocument(_Document):
    premium_ns: float = Field(100.0, ge=0, description="End-to-end zero-load link premium")
    queue_ns: float = Field(10.0, ge=0)
    raw_bw_per_dir: float = Field(64.0, gt=0)
    eta: Optional[float] = Field(settings.LINK_ETA, gt=0, le=1)
    ingress_share: float = Field(0.5, ge=0, le=1)
    lanes: int = Field(16, ge=1)
    flit_payload: int = Field(64, gt=0)
    flit_total: int = Field(68, gt=0)
    meta: MetadataModel = Field(default_factory=MetadataModel)
    ingress_curve: Optional[CurveSource] = None
    egress_curve: Optional[CurveSource] = None

    def build(self, base_dir: Path) -> LinkSpec:
        spec = build_link_spec(
            premium_ns=self.premium_ns,
            queue_ns=self.queue_ns,
            raw_bw_per_dir=self.raw_bw_per_dir,
            eta=self.eta,
            ingress_share=self.ingress_share,
            lanes=self.lanes,
            meta=self.meta,
        )
        update = {"flit_payload": self.flit_payload, "flit_total": self.flit_total}
        if self.ingress_curve:
            update["ingress_curve"] = self.ingress_curve.build(base_dir)
        if self.egress_curve:
            update["egress_curve"] = self.egress_curve.build(base_dir)
        # re-validate: overridden curves must still match the premium
        return LinkSpec.model_validate({**spec.model_dump(), **update})


class SystemDocument(_Document):
    schema_version: Literal[1] = CONFIG_SCHEMA_VERSION
    label: str = ""
    b_p: float = Field(..., gt=0)
    b_s: float = Field(..., gt=0)
    rho_rd: float = Field(settings.RHO_RD, ge=0, le=1)
    primary_curve: CurveSource
    salvage_curve: CurveSource
    link: LinkDocument = Field(default_factory=LinkDocument)

    def build(self, base_dir: Path) -> SystemConfig:
        return SystemConfig(
            b_p=self.b_p,
            b_s=self.b_s,
            primary_curve=self.primary_curve.build(base_dir),
            salvage_curve=self.salvage_curve.build(base_dir),
            link=self.link.build(base_dir),
            rho_rd=self.rho_rd,
            label=self.label,
        )


class SimDocument(_Document):
    """
    Simulation run. ``system`` is inline or a path to a system document;
    a missing ``r_star`` is planned with optimal_split at ``demand_mean``.
    ``io`` is an rx_tx scenario token and overrides the explicit levels.
    """

    schema_version: Literal[1] = CONFIG_SCHEMA_VERSION
    system: Union[SystemDocument, str]
    r_star: Optional[float] = Field(None, ge=0, le=1)
    demand_mean: float = Field(..., ge=0)
    demand_cv: float = Field(0.0, ge=0)
    rho_rd: Optional[float] = Field(None, ge=0, le=1)
    io: Optional[str] = None
    io_rx_level: float = Field(0.0, ge=0, le=1)
    io_tx_level: float = Field(0.0, ge=0, le=1)
    io_mem_spill_rx: float = Field(1.0, ge=0, le=1)
    io_mem_spill_tx: float = Field(1.0, ge=0, le=1)
    io_peak_gbps: float = Field(settings.IO_PEAK_GBPS, gt=0)
    interval_ns: float = Field(settings.interval_ns, gt=0)
    n_intervals: int = Field(1000, ge=1)
    seed: int = settings.DEFAULT_SEED
    page_count: int = Field(100_000, ge=1)

    def build(self, base_dir: Path, io: Optional[str] = None, r_star: Optional[float] = None) -> SimConfig:
        system = build_system(self.system, base_dir)
        token = io or self.io
        rx, tx = parse_io_scenario(token) if token else (self.io_rx_level, self.io_tx_level)
        if r_star is None:
            r_star = self.r_star
        if r_star is None:
            split = optimal_split(self.demand_mean, system, settings.GRID_STEP)
            r_star = split.r
            logger.info(f"No r_star given; planned R*={r_star} for {self.demand_mean} GB/s")
        return SimConfig(
            system=system,
            r_star=r_star,
            demand_mean=self.demand_mean,
            demand_cv=self.demand_cv,
            rho_rd=system.rho_rd if self.rho_rd is None else self.rho_rd,
            io_rx_level=rx,
            io_tx_level=tx,
            io_mem_spill_rx=self.io_mem_spill_rx,
            io_mem_spill_tx=self.io_mem_spill_tx,
            io_peak_gbps=self.io_peak_gbps,
            interval_ns=self.interval_ns,
            n_intervals=self.n_intervals,
            seed=self.seed,
            page_count=self.page_count,
        )


class WorkloadDocument(WorkloadProfile):
    model_config = ConfigDict(extra="forbid", frozen=True)

    schema_version: Literal[1] = CONFIG_SCHEMA_VERSION

    def profile(self) -> WorkloadProfile:
        return WorkloadProfile.model_validate(self.model_dump(exclude={"schema_version"}))


class ServerDocument(_Document):
    """A server's current state for one-shot planning: its residual availability, GB/s per axis."""

    schema_version: Literal[1] = CONFIG_SCHEMA_VERSION
    name: str = "server"
    residual: ResourceAvailability


def resolve_path(path: Union[str, Path], base_dir: Optional[Path] = None) -> Path:
    """
    Resolve a config path: as given, then against ``base_dir``, then
    against SURGE_CONFIG_DIR.
    """
    candidate = Path(path)
    if candidate.is_file():
        return candidate
    if not candidate.is_absolute():
        for root in (base_dir, Path(settings.SURGE_CONFIG_DIR)):
            if root is not None and (root / candidate).is_file():
                return root / candidate
    raise NotFoundException(
        f"config file not found: {path}",
        error_code="CONFIG_NOT_FOUND",
        details={"path": str(path), "config_dir": settings.SURGE_CONFIG_DIR},
    )


def _first_error(exc: ValidationError) -> Tuple[Optional[str], str]:
    err = exc.errors()[0]
    field = ".".join(str(p) for p in err.get("loc", ())) or None
    return field, err.get("msg", str(exc))


def load_document(path: Union[str, Path], model: Type[DocumentT]) -> Tuple[DocumentT, Path]:
    """Parse and validate ``path`` as ``model``; returns the document and its directory."""
    resolved = resolve_path(path)
    try:
        raw = json.loads(resolved.read_text(encoding="utf-8"))
    except UnicodeDecodeError as e:
        raise SchemaError(f"{resolved} is not UTF-8 text: invalid byte at offset {e.start}") from None
    except json.JSONDecodeError as e:
        raise SchemaError(f"{resolved} is not valid JSON: {e.msg} (line {e.lineno})") from None

    if not isinstance(raw, dict):
        raise SchemaError(f"{resolved} must contain a JSON object")
    version = raw.get("schema_version", CONFIG_SCHEMA_VERSION)
    if version != CONFIG_SCHEMA_VERSION:
        raise SchemaError(
            f"unsupported schema_version {version!r} in {resolved}; expected {CONFIG_SCHEMA_VERSION}",
            field="schema_version",
            details={"expected": CONFIG_SCHEMA_VERSION, "found": version},
        )
    try:
        document = model.model_validate(raw)
    except ValidationError as e:
        field, msg = _first_error(e)
        raise SchemaError(f"invalid {model.__name__} in {resolved}: {field}: {msg}", field=field) from None
    return document, resolved.parent


def build_system(source: Union[SystemDocument, str], base_dir: Path) -> SystemConfig:
    if isinstance(source, SystemDocument):
        return source.build(base_dir)
    document, doc_dir = load_document(resolve_path(source, base_dir), SystemDocument)
    return document.build(doc_dir)


def load_system(path: Union[str, Path]) -> SystemConfig:
    document, base_dir = load_document(path, SystemDocument)
    return document.build(base_dir)


def load_sim(path: Union[str, Path], io: Optional[str] = None, r_star: Optional[float] = None) -> SimConfig:
    document, base_dir = load_document(path, SimDocument)
    return document.build(base_dir, io=io, r_star=r_star)


def load_workload(path: Union[str, Path]) -> WorkloadProfile:
    document, _ = load_document(path, WorkloadDocument)
    return document.profile()


def load_server(path: Union[str, Path]) -> ServerDocument:
    document, _ = load_document(path, ServerDocument)
    return document


def load_system_or_default(path: Optional[Union[str, Path]]) -> SystemConfig:
    return load_system(path) if path else default_system()
