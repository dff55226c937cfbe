import math
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from app.modules.splitplan.schemas.availability import AXES, ResourceAvailability

SCHEMA_VERSION = 1
_KEY_TOLERANCE = 1e-9


class SplitEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    demand_gbps: float = Field(..., ge=0)
    r_star: float = Field(..., ge=0, le=1)
    capacity_exceeded: bool = False


class SplitCurve(BaseModel):
    """Optimal split R* against demand, for one resource availability C_i."""

    model_config = ConfigDict(frozen=True)

    availability: Optional[ResourceAvailability] = None
    entries: Tuple[SplitEntry, ...] = Field(..., min_length=1)

    @field_validator("entries")
    @classmethod
    def _check_demands(cls, entries: Tuple[SplitEntry, ...]):
        for prev, cur in zip(entries, entries[1:]):
            if cur.demand_gbps <= prev.demand_gbps:
                raise ValueError(
                    f"entry demands must be strictly increasing: {prev.demand_gbps} then {cur.demand_gbps}"
                )
        return entries

    @property
    def demands(self) -> List[float]:
        return [e.demand_gbps for e in self.entries]


class GridSpec(BaseModel):
    """Availability quantization grid and the demand / split grids used to build a set."""

    model_config = ConfigDict(frozen=True)

    nominal: ResourceAvailability
    levels: Tuple[float, ...] = Field(..., min_length=1, description="Fractions of nominal per axis")
    demand_grid: Tuple[float, ...] = Field(..., min_length=1)
    grid_step: float = Field(0.05, gt=0, le=1)

    @field_validator("levels")
    @classmethod
    def _check_levels(cls, levels: Tuple[float, ...]):
        if any(not (0 < lv <= 1) for lv in levels):
            raise ValueError("availability levels must lie in (0, 1]")
        ordered = tuple(sorted(set(levels)))
        if len(ordered) != len(levels):
            raise ValueError("availability levels must be unique")
        return ordered

    @field_validator("demand_grid")
    @classmethod
    def _check_demand_grid(cls, grid: Tuple[float, ...]):
        for prev, cur in zip(grid, grid[1:]):
            if cur <= prev:
                raise ValueError("demand grid must be strictly increasing")
        if grid[0] < 0:
            raise ValueError("demand grid must be non-negative")
        return grid

    def level_index(self, axis_value: float, nominal: float) -> Optional[int]:
        """Index of the level whose grid point equals ``axis_value``, if any."""
        for i, lv in enumerate(self.levels):
            if math.isclose(lv * nominal, axis_value, rel_tol=_KEY_TOLERANCE, abs_tol=_KEY_TOLERANCE):
                return i
        return None

    def key_of(self, avail: ResourceAvailability) -> Optional[Tuple[int, ...]]:
        key = tuple(
            self.level_index(v, n) for v, n in zip(avail.as_tuple(), self.nominal.as_tuple())
        )
        return None if None in key else key

    def point(self, key: Tuple[int, ...]) -> ResourceAvailability:
        return ResourceAvailability.from_tuple(
            self.levels[i] * n for i, n in zip(key, self.nominal.as_tuple())
        )

    def is_split_value(self, r: float) -> bool:
        k = round(r / self.grid_step)
        return math.isclose(k * self.grid_step, r, abs_tol=1e-9) or math.isclose(r, 1.0)


class SplitCurveSet(BaseModel):
    """Offline-generated split curves, one per availability grid point."""

    schema_version: Literal[1] = SCHEMA_VERSION
    grid_spec: GridSpec
    curves: List[SplitCurve] = Field(..., min_length=1)

    _index: Dict[Tuple[int, ...], SplitCurve] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_and_index(self) -> "SplitCurveSet":
        keyed = []
        for curve in self.curves:
            if curve.availability is None:
                raise ValueError("every curve in a set needs its availability key")
            key = self.grid_spec.key_of(curve.availability)
            if key is None:
                raise ValueError(f"curve key {curve.availability.as_tuple()} is not on the grid")
            for entry in curve.entries:
                if not self.grid_spec.is_split_value(entry.r_star):
                    raise ValueError(f"r_star {entry.r_star} is not a grid value")
            keyed.append((key, curve))
        keyed.sort(key=lambda kc: kc[0])
        index = dict(keyed)
        if len(index) != len(keyed):
            raise ValueError("duplicate availability keys in curve set")
        # canonical order: by grid key
        self.curves = [c for _, c in keyed]
        self._index = index
        return self

    def curve_for_key(self, key: Tuple[int, ...]) -> Optional[SplitCurve]:
        return self._index.get(key)

    @property
    def axes(self) -> Tuple[str, ...]:
        return AXES
