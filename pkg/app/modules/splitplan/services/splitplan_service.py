"""
Split-curve generation (offline) and selection / probing (at deployment).
"""

import itertools
import logging
import math
from bisect import bisect_left
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from app.core.exceptions import CapacityRefusal, DomainError, NoApplicableCurveError
from app.modules.amat.schemas import SystemConfig
from app.modules.amat.services import amat_of, optimal_split
from app.modules.curves.schemas import is_feasible
from app.modules.splitplan.schemas import (
    AXES,
    GridSpec,
    ResourceAvailability,
    SplitCurve,
    SplitCurveSet,
    SplitEntry,
)

logger = logging.getLogger(__name__)

_QUANTIZE_TOLERANCE = 1e-9


def nominal_availability(cfg: SystemConfig) -> ResourceAvailability:
    return ResourceAvailability(
        b_p_avail=cfg.b_p,
        b_s_avail=cfg.b_s,
        link_ing_avail=cfg.ing_capacity,
        link_egr_avail=cfg.egr_capacity,
    )


def default_demand_grid(cfg: SystemConfig, points: int = 40) -> List[float]:
    """Demands spanning 0.1*B_P .. 1.4*(B_P + B_S)."""
    if points < 1:
        raise DomainError("demand grid needs at least one point", details={"points": points})
    grid = np.linspace(0.1 * cfg.b_p, 1.4 * (cfg.b_p + cfg.b_s), points)
    return [round(float(d), 6) for d in grid]


def _check_demand_grid(demand_grid: Sequence[float]) -> None:
    if not demand_grid:
        raise DomainError("demand grid must not be empty")
    for prev, cur in zip(demand_grid, demand_grid[1:]):
        if cur <= prev:
            raise DomainError(
                "demand grid must be strictly ascending", details={"previous": prev, "next": cur}
            )


def generate_curve(
    avail: ResourceAvailability,
    base_cfg: SystemConfig,
    demand_grid: Sequence[float],
    grid_step: float = 0.05,
) -> SplitCurve:
    """Optimal split at every demand, with capacities scaled down to ``avail``."""
    _check_demand_grid(demand_grid)
    cfg = base_cfg.with_capacities(*avail.as_tuple())
    salvage_path_open = min(avail.b_s_avail, avail.link_ing_avail, avail.link_egr_avail) > 0

    entries = []
    for d in demand_grid:
        if salvage_path_open:
            split = optimal_split(d, cfg, grid_step)
            entries.append(
                SplitEntry(demand_gbps=d, r_star=split.r, capacity_exceeded=split.capacity_exceeded)
            )
        else:
            entries.append(
                SplitEntry(
                    demand_gbps=d,
                    r_star=1.0,
                    capacity_exceeded=not is_feasible(amat_of(1.0, d, cfg)),
                )
            )
    return SplitCurve(availability=avail, entries=tuple(entries))


def _generate_one(args: Tuple[ResourceAvailability, SystemConfig, Tuple[float, ...], float]) -> SplitCurve:
    return generate_curve(*args)


def generate_set(
    base_cfg: SystemConfig,
    levels: Iterable[float],
    demand_grid: Sequence[float],
    grid_step: float = 0.05,
    max_curves: int = 4096,
    workers: int = 1,
) -> SplitCurveSet:
    """
    One split curve per point of the availability grid (cartesian product
    of ``levels`` over the four axes, as fractions of nominal capacity).
    """
    _check_demand_grid(demand_grid)
    grid = GridSpec(
        nominal=nominal_availability(base_cfg),
        levels=tuple(levels),
        demand_grid=tuple(demand_grid),
        grid_step=grid_step,
    )
    count = len(grid.levels) ** len(AXES)
    if count > max_curves:
        raise CapacityRefusal(
            f"availability grid has {count} points, above the cap of {max_curves}",
            details={"curves": count, "max_curves": max_curves},
        )

    keys = list(itertools.product(range(len(grid.levels)), repeat=len(AXES)))
    jobs = [(grid.point(key), base_cfg, grid.demand_grid, grid_step) for key in keys]
    logger.info(
        f"Generating {count} split curves x {len(grid.demand_grid)} demands (workers={workers})"
    )

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            curves = list(pool.map(_generate_one, jobs, chunksize=max(1, count // (workers * 4))))
    else:
        curves = [_generate_one(job) for job in jobs]

    return SplitCurveSet(grid_spec=grid, curves=curves)


def quantize(grid: GridSpec, current: ResourceAvailability) -> ResourceAvailability:
    """
    Round every axis down to the nearest grid point, so the selected
    curve never assumes more headroom than exists.
    """
    return grid.point(_quantized_key(grid, current))


def _quantized_key(grid: GridSpec, current: ResourceAvailability) -> Tuple[int, ...]:
    key = []
    for axis, value, nominal in zip(AXES, current.as_tuple(), grid.nominal.as_tuple()):
        if value > nominal * (1 + _QUANTIZE_TOLERANCE) + _QUANTIZE_TOLERANCE:
            raise DomainError(
                f"{axis} availability {value} exceeds nominal {nominal}",
                details={"axis": axis, "value": value, "nominal": nominal},
            )
        fraction = value / nominal if nominal > 0 else 0.0
        idx = bisect_left(grid.levels, fraction + _QUANTIZE_TOLERANCE) - 1
        if idx < 0:
            raise NoApplicableCurveError(
                f"insufficient quantized availability: {axis} at {fraction:.3f} of nominal "
                f"is below the smallest grid level {grid.levels[0]}",
                axis=axis,
            )
        key.append(idx)
    return tuple(key)


def select_curve(curve_set: SplitCurveSet, current: ResourceAvailability) -> SplitCurve:
    key = _quantized_key(curve_set.grid_spec, current)
    curve = curve_set.curve_for_key(key)
    if curve is None:
        raise NoApplicableCurveError(f"no curve generated for grid point {key}")
    return curve


def probe(curve: SplitCurve, d: float) -> Tuple[float, bool]:
    """
    (R*, capacity_exceeded) for demand ``d``: the entry at the smallest
    grid demand >= d. Demands past the grid get the last entry, flagged.
    """
    if math.isnan(d) or d < 0:
        raise DomainError("demand must be >= 0", details={"demand_gbps": d})
    demands = curve.demands
    idx = bisect_left(demands, d)
    if idx >= len(demands):
        return curve.entries[-1].r_star, True
    entry = curve.entries[idx]
    return entry.r_star, entry.capacity_exceeded


def curve_key(curve: SplitCurve) -> Optional[dict]:
    if curve.availability is None:
        return None
    return curve.availability.model_dump(by_alias=True)
