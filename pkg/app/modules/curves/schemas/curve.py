import math
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator

# Latency returned for utilizations beyond the last profiled knot.
INFEASIBLE: float = math.inf


def is_feasible(latency_ns: float) -> bool:
    return math.isfinite(latency_ns)


class LoadLatencyCurve(BaseModel):
    """
    Piecewise-linear utilization -> latency (ns) mapping for one memory
    device or one link direction. Immutable once built.
    """

    model_config = ConfigDict(frozen=True)

    points: Tuple[Tuple[float, float], ...] = Field(
        ..., min_length=2, description="(utilization, latency_ns) knots"
    )
    label: str = Field("", description="Human readable origin of the curve")

    _utilizations: Tuple[float, ...] = PrivateAttr()
    _latencies: Tuple[float, ...] = PrivateAttr()

    @field_validator("points")
    @classmethod
    def _check_knots(cls, points: Tuple[Tuple[float, float], ...]):
        first_u = points[0][0]
        if first_u != 0.0:
            raise ValueError(f"first knot must be at utilization 0, got {first_u}")
        for i, (u, lat) in enumerate(points):
            if not (0.0 <= u <= 1.0) or not math.isfinite(lat) or lat < 0:
                raise ValueError(f"knot {i} out of range: ({u}, {lat})")
            if i == 0:
                continue
            prev_u, prev_lat = points[i - 1]
            if u <= prev_u:
                raise ValueError(f"knot {i}: utilization {u} not above {prev_u}")
            if lat < prev_lat:
                raise ValueError(f"knot {i}: latency {lat} below {prev_lat}")
        return points

    def model_post_init(self, __context) -> None:
        self._utilizations = tuple(float(u) for u, _ in self.points)
        self._latencies = tuple(float(lat) for _, lat in self.points)

    @property
    def knot_utilizations(self) -> Tuple[float, ...]:
        return self._utilizations

    @property
    def knot_latencies(self) -> Tuple[float, ...]:
        return self._latencies

    @property
    def max_utilization(self) -> float:
        return self._utilizations[-1]

    @property
    def unloaded_latency(self) -> float:
        return self._latencies[0]
