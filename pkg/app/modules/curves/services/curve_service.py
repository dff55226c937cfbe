"""
Load-latency curve operations: lookup, synthesis, shifting and CSV I/O.
"""

import csv
import io
import logging
import math
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np

from app.core.exceptions import CurveParseError, DomainError
from app.modules.curves.schemas import INFEASIBLE, LoadLatencyCurve

logger = logging.getLogger(__name__)

CSV_HEADER = ("utilization", "latency_ns")


def latency_at(curve: LoadLatencyCurve, u: float) -> float:
    """
    Linearly interpolated latency at utilization ``u``.

    Returns INFEASIBLE past the last knot: demand beyond the profiled
    range has unbounded queuing.
    """
    if math.isnan(u) or u < 0:
        raise DomainError("utilization must be >= 0", details={"u": u})
    if u > curve.max_utilization:
        return INFEASIBLE
    return float(np.interp(u, curve.knot_utilizations, curve.knot_latencies))


def saturating_latency_at(curve: LoadLatencyCurve, u: float) -> float:
    """Like latency_at, but pins utilizations past the last knot to it."""
    if math.isnan(u) or u < 0:
        raise DomainError("utilization must be >= 0", details={"u": u})
    return latency_at(curve, min(u, curve.max_utilization))


def synthetic_curve(
    l0: float,
    q: float,
    u_max: float = 0.95,
    n_points: int = 50,
    label: str = "",
) -> LoadLatencyCurve:
    """Sample L(u) = l0 + q*u/(1-u) at ``n_points`` uniform knots on [0, u_max]."""
    if n_points < 2:
        raise DomainError("a curve needs at least 2 knots", details={"n_points": n_points})
    if not l0 > 0 or q < 0 or not (0 < u_max < 1):
        raise DomainError(
            "synthetic curve needs l0 > 0, q >= 0, 0 < u_max < 1",
            details={"l0": l0, "q": q, "u_max": u_max},
        )
    us = np.linspace(0.0, u_max, n_points)
    lats = l0 + q * us / (1.0 - us)
    return LoadLatencyCurve(
        points=tuple(zip(us.tolist(), lats.tolist())),
        label=label or f"synthetic(l0={l0:g}, q={q:g}, u_max={u_max:g})",
    )


def flat_curve(latency_ns: float, u_max: float = 1.0, label: str = "") -> LoadLatencyCurve:
    """Constant-latency curve over [0, u_max]."""
    return LoadLatencyCurve(
        points=((0.0, latency_ns), (u_max, latency_ns)),
        label=label or f"flat({latency_ns:g})",
    )


def shift(curve: LoadLatencyCurve, delta: float) -> LoadLatencyCurve:
    """Add ``delta`` ns to every knot."""
    if delta < 0:
        raise DomainError("shift delta must be >= 0", details={"delta": delta})
    if delta == 0:
        return curve
    return LoadLatencyCurve(
        points=tuple((u, lat + delta) for u, lat in curve.points),
        label=f"{curve.label}+{delta:g}ns" if curve.label else f"+{delta:g}ns",
    )


def parse_curve_csv(text: str, label: str = "") -> LoadLatencyCurve:
    """
    Parse a two-column ``utilization,latency_ns`` CSV with a header row.

    Data rows are numbered from 1; header problems are reported as row 0.
    """
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise CurveParseError("empty file, expected header 'utilization,latency_ns'", row=0)

    header = tuple(c.strip() for c in rows[0])
    if header != CSV_HEADER:
        raise CurveParseError(f"expected header 'utilization,latency_ns', got '{','.join(header)}'", row=0)

    points: List[Tuple[float, float]] = []
    for idx, row in enumerate(rows[1:], start=1):
        if len(row) != 2:
            raise CurveParseError(f"expected 2 columns, got {len(row)}", row=idx)
        try:
            u, lat = float(row[0]), float(row[1])
        except ValueError:
            raise CurveParseError(f"non-numeric value in '{','.join(row)}'", row=idx) from None
        if not (0.0 <= u <= 1.0) or not math.isfinite(lat) or lat < 0:
            raise CurveParseError(f"value out of range: utilization={u}, latency={lat}", row=idx)
        if points:
            prev_u, prev_lat = points[-1]
            if u <= prev_u:
                raise CurveParseError(f"utilization {u} not above previous {prev_u} (rows must be sorted)", row=idx)
            if lat < prev_lat:
                raise CurveParseError(f"latency {lat} below previous {prev_lat} (must be non-decreasing)", row=idx)
        points.append((u, lat))

    if len(points) < 2:
        raise CurveParseError(f"need at least 2 data rows, got {len(points)}", row=len(points))
    if points[0][0] != 0.0:
        raise CurveParseError("first row must be at utilization 0", row=1)
    return LoadLatencyCurve(points=tuple(points), label=label)


def _fmt(x: float) -> str:
    return np.format_float_positional(x, trim="-")


def emit_curve_csv(curve: LoadLatencyCurve) -> str:
    lines = [",".join(CSV_HEADER)]
    lines.extend(f"{_fmt(u)},{_fmt(lat)}" for u, lat in curve.points)
    return "\n".join(lines) + "\n"


def load_curve_csv(path: Union[str, Path]) -> LoadLatencyCurve:
    path = Path(path)
    logger.debug(f"Reading load-latency curve from {path}")
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        # header is row 0, so the line index is the row number
        raise CurveParseError(f"not UTF-8 text (byte offset {e.start})", row=data.count(b"\n", 0, e.start)) from None
    return parse_curve_csv(text, label=path.stem)
