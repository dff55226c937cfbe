"""
Interval simulation and the analyses built on it.
"""

import logging
from pathlib import Path

import click

from app.cli.emitters import dumps, emit, render_csv
from app.cli.manifest import write_manifest
from app.cli.params import FloatListParam
from app.config.documents import load_sim
from app.config.presets import SENSITIVITY_BOOSTS, SENSITIVITY_PREMIUMS_NS
from app.config.settings import settings
from app.modules.sim.services import METRICS_CSV_HEADER, metrics_rows, run
from app.modules.sim.use_cases import (
    DEFAULT_SCENARIOS,
    IoRobustnessUseCase,
    LinkSensitivityUseCase,
    SweepSplitsUseCase,
)

logger = logging.getLogger(__name__)

SWEEP_CSV_HEADER = ("r", "mean_amat_ns", "std_amat_ns", "p95_amat_ns")
ROBUSTNESS_CSV_HEADER = ("scenario", "planned_r", "planned_amat_ns", "best_r", "best_amat_ns", "gap")
SENSITIVITY_CSV_HEADER = (
    "premium_ns",
    "boost",
    "r_star",
    "capacity_exceeded",
    "planned_amat_ns",
    "all_primary_amat_ns",
    "amat_reduction",
)

config_option = click.option(
    "--config", "config_path", type=click.Path(dir_okay=False), required=True, help="Simulation config document."
)
io_option = click.option("--io", default=None, help="I/O scenario rx_tx, e.g. low_high (overrides the config).")
seed_option = click.option("--seed", type=int, default=None, help="Override the config seed.")
grid_step_option = click.option(
    "--grid-step", type=click.FloatRange(0, 1, min_open=True), default=settings.GRID_STEP, show_default=True
)


def _load(config_path, io, seed, r_star=None, intervals=None):
    cfg = load_sim(config_path, io=io, r_star=r_star)
    update = {}
    if seed is not None:
        update["seed"] = seed
    if intervals is not None:
        update["n_intervals"] = intervals
    return cfg.model_copy(update=update) if update else cfg


@click.command("simulate")
@config_option
@io_option
@seed_option
@click.option("--r-star", type=click.FloatRange(0, 1), default=None, help="Override the planned split.")
@click.option("--intervals", type=click.IntRange(min=1), default=None, help="Override n_intervals.")
@click.option("--out-dir", type=click.Path(file_okay=False), default="runs/simulate", show_default=True)
def simulate(config_path, io, seed, r_star, intervals, out_dir):
    """Run the interval simulator; writes metrics.csv, summary.json and manifest.json."""
    cfg = _load(config_path, io, seed, r_star, intervals)
    logger.info(
        f"Simulating R*={cfg.r_star}, {cfg.demand_mean} GB/s, I/O rx={cfg.io_rx_level} tx={cfg.io_tx_level}, "
        f"{cfg.n_intervals} intervals"
    )
    metrics = run(cfg)

    out = Path(out_dir)
    metrics_path = emit(render_csv(METRICS_CSV_HEADER, metrics_rows(metrics)), out / "metrics.csv")
    summary_json = metrics.summary.model_dump_json(indent=2) + "\n"
    summary_path = emit(summary_json, out / "summary.json")
    write_manifest(out / "manifest.json", "simulate", cfg, [metrics_path, summary_path], seed=cfg.seed)
    logger.info(f"Wrote {metrics_path} and {summary_path}")
    click.echo(dumps(metrics.summary.model_dump()))


@click.command("sweep")
@config_option
@io_option
@seed_option
@grid_step_option
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV path (default stdout).")
def sweep(config_path, io, seed, grid_step, workers, out):
    """Simulated AMAT at every candidate split, against the planned one."""
    cfg = _load(config_path, io, seed)
    result = SweepSplitsUseCase(grid_step, workers).execute(cfg)
    rows = [(p.r, p.mean_amat_ns, p.std_amat_ns, p.p95_amat_ns) for p in result.points]
    path = emit(render_csv(SWEEP_CSV_HEADER, rows), out)
    if path:
        write_manifest(path.with_name(f"{path.stem}.manifest.json"), "sweep", cfg, [path], seed=cfg.seed)
    logger.info(
        f"Planned R={result.planned_r}: {result.planned_gap:+.2%} vs best R={result.best.r}"
    )


@click.command("robustness")
@config_option
@seed_option
@grid_step_option
@click.option("--scenarios", default=",".join(DEFAULT_SCENARIOS), show_default=True,
              help="Comma list of rx_tx I/O scenarios.")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV path (default stdout).")
def robustness(config_path, seed, grid_step, scenarios, workers, out):
    """Replay the planned split under other I/O scenarios."""
    cfg = _load(config_path, None, seed)
    tokens = [t.strip() for t in scenarios.split(",") if t.strip()]
    rows = [
        (r.scenario, r.planned_r, r.planned_amat_ns, r.best_r, r.best_amat_ns, r.gap)
        for r in IoRobustnessUseCase(grid_step, workers).execute(cfg, tokens)
    ]
    path = emit(render_csv(ROBUSTNESS_CSV_HEADER, rows), out)
    if path:
        write_manifest(path.with_name(f"{path.stem}.manifest.json"), "robustness", cfg, [path], seed=cfg.seed)


@click.command("sensitivity")
@config_option
@io_option
@seed_option
@grid_step_option
@click.option("--premiums", type=FloatListParam(0.0),
              default=",".join(f"{v:g}" for v in SENSITIVITY_PREMIUMS_NS), show_default=True)
@click.option("--boosts", type=FloatListParam(0.0, open_minimum=True),
              default=",".join(f"{v:g}" for v in SENSITIVITY_BOOSTS), show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV path (default stdout).")
def sensitivity(config_path, io, seed, grid_step, premiums, boosts, out):
    """Planner split vs all-primary across salvage latency premiums and bandwidth boosts."""
    cfg = _load(config_path, io, seed)
    rows = [
        (
            r.premium_ns,
            r.boost,
            r.r_star,
            r.capacity_exceeded,
            r.planned_amat_ns,
            r.all_primary_amat_ns,
            r.amat_reduction,
        )
        for r in LinkSensitivityUseCase(grid_step).execute(cfg, premiums, boosts)
    ]
    path = emit(render_csv(SENSITIVITY_CSV_HEADER, rows), out)
    if path:
        write_manifest(path.with_name(f"{path.stem}.manifest.json"), "sensitivity", cfg, [path], seed=cfg.seed)


COMMANDS = [simulate, sweep, robustness, sensitivity]
