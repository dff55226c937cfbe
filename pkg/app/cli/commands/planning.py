"""
Offline split-curve generation and deployment-time planning.
"""

import logging
from pathlib import Path

import click

from app.cli.emitters import dumps
from app.cli.errors import EXIT_INFEASIBLE
from app.cli.manifest import write_manifest
from app.cli.params import FloatListParam
from app.config.documents import load_server, load_system_or_default, load_workload
from app.config.settings import settings
from app.modules.splitplan.repositories import load_set, save_set
from app.modules.splitplan.services import default_demand_grid, generate_set
from app.modules.splitplan.use_cases import PlanSplitUseCase

logger = logging.getLogger(__name__)


def manifest_path_for(out: Path) -> Path:
    return out.with_name(f"{out.stem}.manifest.json")


@click.command("gen-curves")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="System config document (default: shipped preset).")
@click.option("--levels", type=FloatListParam(0.0, 1.0, open_minimum=True),
              default=",".join(f"{v:g}" for v in settings.AVAILABILITY_LEVELS), show_default=True,
              help="Availability levels per axis, as fractions of nominal.")
@click.option("--points", type=click.IntRange(min=1), default=settings.DEMAND_GRID_POINTS, show_default=True)
@click.option("--grid-step", type=click.FloatRange(0, 1, min_open=True), default=settings.GRID_STEP, show_default=True)
@click.option("--max-curves", type=click.IntRange(min=1), default=settings.MAX_SPLIT_CURVES, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=settings.SPLIT_CURVES_PATH, show_default=True)
def gen_curves(config_path, levels, points, grid_step, max_curves, workers, out):
    """Generate the split curve set for every availability grid point."""
    system = load_system_or_default(config_path)
    curve_set = generate_set(
        system, levels, default_demand_grid(system, points), grid_step, max_curves, workers
    )
    path = save_set(curve_set, out)
    manifest = write_manifest(
        manifest_path_for(path),
        "gen-curves",
        {"system": system.model_dump(mode="json"), "grid_spec": curve_set.grid_spec.model_dump(mode="json")},
        [path],
    )
    click.echo(dumps({"curves": len(curve_set.curves), "out": str(path), "config_digest": manifest.config_digest}))


@click.command("plan")
@click.option("--curves", "curves_path", type=click.Path(dir_okay=False), default=settings.SPLIT_CURVES_PATH,
              show_default=True, help="Split curve set produced by gen-curves.")
@click.option("--server", "server_path", type=click.Path(dir_okay=False), default=None,
              help="Server document with the residual availability (default: idle server).")
@click.option("--workload", "workload_path", type=click.Path(dir_okay=False), default=None,
              help="Workload document; its demand_mean is probed.")
@click.option("--demand", type=click.FloatRange(min=0), default=None, help="Memory demand, GB/s.")
@click.pass_context
def plan(ctx, curves_path, server_path, workload_path, demand):
    """Select the curve for a server's availability and probe it; exits 3 past capacity."""
    if (demand is None) == (workload_path is None):
        raise click.UsageError("give exactly one of --demand or --workload")
    curve_set = load_set(curves_path)
    if workload_path:
        demand = load_workload(workload_path).demand_mean
    residual = load_server(server_path).residual if server_path else curve_set.grid_spec.nominal

    result = PlanSplitUseCase(curve_set).execute(residual, demand)
    click.echo(
        dumps(
            {
                "r_star": result.r_star,
                "capacity_exceeded": result.capacity_exceeded,
                "curve_key": result.curve_key.model_dump(by_alias=True) if result.curve_key else None,
            }
        )
    )
    if result.capacity_exceeded:
        ctx.exit(EXIT_INFEASIBLE)


COMMANDS = [gen_curves, plan]
