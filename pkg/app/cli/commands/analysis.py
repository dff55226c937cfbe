"""
Closed-form analyses: pod utility, split curves per salvage variant and
single AMAT evaluations.
"""

import logging

import click

from app.cli.emitters import dumps, emit, json_float, render_csv
from app.cli.errors import EXIT_INFEASIBLE
from app.cli.params import FloatListParam, IntListParam, VariantListParam
from app.config.documents import load_system_or_default
from app.config.presets import SPLIT_CURVE_VARIANTS
from app.config.settings import settings
from app.core.enums import SalvageTopology
from app.modules.amat.services import amat_breakdown, optimal_split, salvage_variant
from app.modules.splitplan.services import default_demand_grid
from app.modules.utility.schemas import PodConfig
from app.modules.utility.services import utility_point

logger = logging.getLogger(__name__)

UTILITY_CSV_HEADER = ("n", "p", "x", "utility_analytic", "utility_mc")
SPLIT_CURVE_CSV_HEADER = ("variant", "demand_gbps", "r_star")


@click.command("utility")
@click.option("--n", "pod_sizes", type=IntListParam(), required=True, help="Pod sizes, e.g. 1..16 or 1,4,16.")
@click.option("--p", "probabilities", type=FloatListParam(0.0, 1.0), required=True, help="Idle-link probabilities.")
@click.option("--x", "ratios", type=FloatListParam(0.0, open_minimum=True), default="1", show_default=True,
              help="Provisioned device : link bandwidth ratios.")
@click.option("--samples", type=click.IntRange(min=1), default=settings.MC_SAMPLES, show_default=True)
@click.option(
    "--topology",
    type=click.Choice([t.value for t in SalvageTopology]),
    default=SalvageTopology.POD.value,
    show_default=True,
    help="solo ignores --n: each device serves one server.",
)
@click.option("--seed", type=int, default=settings.DEFAULT_SEED, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV path (default stdout).")
def utility(pod_sizes, probabilities, ratios, topology, samples, seed, out):
    """Salvage-memory utility over pod sizes, idle probabilities and provisioning ratios."""
    topology = SalvageTopology(topology)
    if topology == SalvageTopology.SOLO:
        pod_sizes = [1]
    rows = []
    for n in pod_sizes:
        for p in probabilities:
            for x in ratios:
                point = utility_point(PodConfig(n=n, p=p, x=x), samples, seed, topology)
                rows.append((point.n, point.p, point.x, point.utility_analytic, point.utility_mc))
    emit(render_csv(UTILITY_CSV_HEADER, rows), out)


@click.command("split-curve")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="System config document (default: shipped preset).")
@click.option("--variants", type=VariantListParam(),
              default=",".join(f"{p:g}@{b:g}" for p, b in SPLIT_CURVE_VARIANTS), show_default=True,
              help="Salvage variants as premium_ns@boost.")
@click.option("--demand-min", type=click.FloatRange(min=0), default=None)
@click.option("--demand-max", type=click.FloatRange(min=0), default=None)
@click.option("--points", type=click.IntRange(min=2), default=settings.DEMAND_GRID_POINTS, show_default=True)
@click.option("--grid-step", type=click.FloatRange(0, 1, min_open=True), default=settings.GRID_STEP, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV path (default stdout).")
def split_curve(config_path, variants, demand_min, demand_max, points, grid_step, out):
    """Optimal split against demand for each salvage variant."""
    base = load_system_or_default(config_path)
    grid = default_demand_grid(base, points)
    lo = grid[0] if demand_min is None else demand_min
    hi = grid[-1] if demand_max is None else demand_max
    if hi <= lo:
        raise click.BadParameter("--demand-max must exceed --demand-min")
    step = (hi - lo) / (points - 1)
    demands = [round(lo + i * step, 6) for i in range(points)]

    rows = []
    for premium, boost in variants:
        system = salvage_variant(base, premium, boost)
        for d in demands:
            rows.append((system.label, d, optimal_split(d, system, grid_step).r))
    logger.info(f"Split curves for {len(variants)} variants x {len(demands)} demands")
    emit(render_csv(SPLIT_CURVE_CSV_HEADER, rows), out)


@click.command("amat")
@click.option("--r", "r", type=click.FloatRange(0, 1), required=True, help="Share of traffic to primary memory.")
@click.option("--demand", type=click.FloatRange(min=0), required=True, help="Memory demand, GB/s.")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def amat(ctx, r, demand, config_path):
    """Evaluate AMAT at one split; exits 3 when the demand is infeasible."""
    result = amat_breakdown(r, demand, load_system_or_default(config_path))
    click.echo(
        dumps(
            {
                "amat_ns": json_float(result.amat_ns),
                "u_p": json_float(result.u_p),
                "u_s": json_float(result.u_s),
                "u_ing": json_float(result.u_ing),
                "u_egr": json_float(result.u_egr),
                "feasible": result.feasible,
            }
        )
    )
    if not result.feasible:
        ctx.exit(EXIT_INFEASIBLE)


COMMANDS = [utility, split_curve, amat]
