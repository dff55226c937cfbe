import logging

import numpy as np
import pytest
from pydantic import ValidationError

from app.config.presets import memory_bound_scenario
from app.core.enums import MemoryTier, parse_io_scenario
from app.core.exceptions import DomainError
from app.modules.amat.services import amat_of, optimal_split
from app.modules.curves.services import latency_at
from app.modules.link.services import build_link_spec
from app.modules.sim.schemas import IoTraffic, SimConfig
from app.modules.sim.services import (
    METRICS_CSV_HEADER,
    arbitrate,
    first_touch_place,
    io_sample,
    metrics_rows,
    new_state,
    place_pages,
    run,
    step,
)
from app.modules.sim.use_cases import IoRobustnessUseCase, LinkSensitivityUseCase, SweepSplitsUseCase

LINK_63 = build_link_spec(raw_bw_per_dir=63.0)


def _io(rx_gbps: float, tx_gbps: float = 0.0, interval_ns: float = 1000.0) -> IoTraffic:
    return IoTraffic(rx_bytes=rx_gbps * interval_ns, tx_bytes=tx_gbps * interval_ns, interval_ns=interval_ns)


def test_first_touch_extremes():
    rng = np.random.default_rng(0)
    assert all(first_touch_place(1.0, rng) == MemoryTier.PRIMARY for _ in range(1000))
    assert all(first_touch_place(0.0, rng) == MemoryTier.SALVAGE for _ in range(1000))


def test_first_touch_rejects_bad_split():
    with pytest.raises(DomainError):
        first_touch_place(1.5, np.random.default_rng(0))


def test_placement_statistics():
    placement = place_pages(0.7, 100_000, np.random.default_rng(7))
    assert placement.total_pages == 100_000
    assert 0.695 <= placement.achieved_split <= 0.705


def test_placement_is_reproducible():
    a = place_pages(0.4, 5000, np.random.default_rng(3))
    b = place_pages(0.4, 5000, np.random.default_rng(3))
    assert a == b


def test_io_sample_without_traffic():
    rng = np.random.default_rng(0)
    assert all(io_sample(0.0, 63.0, 1000.0, rng) == 0.0 for _ in range(100))


def test_io_sample_mean():
    rng = np.random.default_rng(42)
    samples = [io_sample(0.1, 63.0, 1000.0, rng) for _ in range(100_000)]
    assert all(s % 64 == 0 for s in samples[:1000])
    assert np.mean(samples) == pytest.approx(6300.0, rel=0.01)


def test_io_sample_rejects_bad_level():
    with pytest.raises(DomainError):
        io_sample(1.2, 63.0, 1000.0, np.random.default_rng(0))


def test_arbitration_serves_io_first():
    arb = arbitrate(LINK_63, _io(50.0), 20.0, 0.0)
    assert arb.granted_ing == 13.0
    assert arb.backlog_ing == 7.0
    assert (arb.granted_egr, arb.backlog_egr) == (0.0, 0.0)


def test_arbitration_without_io():
    arb = arbitrate(LINK_63, _io(0.0), 20.0, 80.0)
    assert (arb.granted_ing, arb.backlog_ing) == (20.0, 0.0)
    assert (arb.granted_egr, arb.backlog_egr) == (63.0, 17.0)


def test_arbitration_starves_memory():
    arb = arbitrate(LINK_63, _io(63.0), 5.0, 0.0)
    assert arb.granted_ing == 0.0
    assert arb.backlog_ing == 5.0


def test_arbitration_logs_io_overload(caplog):
    with caplog.at_level(logging.WARNING):
        arb = arbitrate(LINK_63, _io(80.0), 5.0, 0.0)
    assert arb.granted_ing == 0.0
    assert "exceeds link capacity" in caplog.text


def test_arbitration_rejects_negative_demand():
    with pytest.raises(DomainError):
        arbitrate(LINK_63, _io(0.0), -1.0, 0.0)


def test_arbitration_priority_and_conservation():
    rng = np.random.default_rng(99)
    cap = LINK_63.raw_bw_per_dir
    for _ in range(1000):
        rx, tx = rng.uniform(0.0, 80.0, size=2)
        mem_ing, mem_egr = rng.uniform(0.0, 80.0, size=2)
        arb = arbitrate(LINK_63, _io(float(rx), float(tx)), float(mem_ing), float(mem_egr))
        for io_gbps, mem, granted, backlog in (
            (rx, mem_ing, arb.granted_ing, arb.backlog_ing),
            (tx, mem_egr, arb.granted_egr, arb.backlog_egr),
        ):
            assert granted >= 0.0 and backlog >= 0.0
            assert granted + backlog == pytest.approx(mem, rel=1e-12, abs=1e-12)
            assert min(io_gbps, cap) + granted <= cap + 1e-9
            if io_gbps + mem <= cap:
                assert backlog == 0.0


def test_all_primary_interval_matches_curve():
    cfg = memory_bound_scenario(r_star=1.0, n_intervals=20)
    expected = latency_at(cfg.system.primary_curve, cfg.demand_mean / cfg.system.b_p)
    metrics = run(cfg)
    for record in metrics.records:
        assert record.amat_ns == pytest.approx(expected, rel=1e-12)
        assert record.cxl_ns == 0.0


@pytest.mark.parametrize("r_star", [0.5, 0.7, 0.9])
def test_simulation_agrees_with_analytical_model(r_star):
    cfg = memory_bound_scenario(r_star=r_star, n_intervals=50)
    summary = run(cfg).summary
    assert summary.mean_amat_ns == pytest.approx(amat_of(r_star, cfg.demand_mean, cfg.system), rel=0.05)


def test_decomposition_identity():
    cfg = memory_bound_scenario(r_star=0.7, demand_cv=0.3, io_rx_level=0.5, io_tx_level=0.1, n_intervals=200)
    metrics = run(cfg)
    for record in metrics.records:
        assert record.service_ns + record.queuing_ns + record.cxl_ns == pytest.approx(record.amat_ns)
    s = metrics.summary
    assert s.mean_service_ns + s.mean_queuing_ns + s.mean_cxl_ns == pytest.approx(s.mean_amat_ns)
    assert s.service_share + s.queuing_share + s.cxl_share == pytest.approx(1.0)


def test_backlog_conservation_under_io_pressure():
    cfg = memory_bound_scenario(r_star=0.3, io_rx_level=0.8, io_tx_level=0.8, n_intervals=300).model_copy(
        update={"demand_mean": 60.0}
    )
    state = new_state(cfg)
    records = [step(state, cfg) for _ in range(cfg.n_intervals)]

    assert state.backlog_ing > 0
    assert state.new_ing == pytest.approx(state.granted_ing + state.backlog_ing, rel=1e-9)
    assert state.new_egr == pytest.approx(state.granted_egr + state.backlog_egr, rel=1e-9)
    # memory never gets more than I/O leaves over
    assert all(r.u_ing <= 1.0 + 1e-12 and r.u_egr <= 1.0 + 1e-12 for r in records)
    assert records[-1].backlog_ing == pytest.approx(state.backlog_ing * cfg.interval_ns)


def test_run_is_deterministic():
    cfg = memory_bound_scenario(r_star=0.7, demand_cv=0.3, io_rx_level=0.5, n_intervals=100, seed=11)
    assert run(cfg) == run(cfg)
    assert run(cfg) != run(cfg.model_copy(update={"seed": 12}))


def test_achieved_split_tracks_r_star():
    summary = run(memory_bound_scenario(r_star=0.7, n_intervals=10)).summary
    assert summary.achieved_split == pytest.approx(0.7, abs=0.005)


def test_planner_split_beats_all_primary():
    cfg = memory_bound_scenario(n_intervals=100)
    r_star = optimal_split(cfg.demand_mean, cfg.system).r
    assert r_star < 1.0
    planned = run(cfg.model_copy(update={"r_star": r_star})).summary
    all_primary = run(cfg.model_copy(update={"r_star": 1.0})).summary
    assert planned.mean_amat_ns < all_primary.mean_amat_ns


def test_planner_split_reduces_variance():
    cfg = memory_bound_scenario(demand_cv=0.3, n_intervals=400)
    r_star = optimal_split(cfg.demand_mean, cfg.system).r
    planned = run(cfg.model_copy(update={"r_star": r_star})).summary
    all_primary = run(cfg.model_copy(update={"r_star": 1.0})).summary
    assert planned.std_amat_ns < all_primary.std_amat_ns


def test_io_spill_raises_primary_demand():
    quiet = run(memory_bound_scenario(r_star=0.7, io_rx_level=0.1, io_tx_level=0.1, n_intervals=100)).summary
    busy = run(memory_bound_scenario(r_star=0.7, io_rx_level=0.8, io_tx_level=0.8, n_intervals=100)).summary
    assert busy.mean_primary_demand_gbps > quiet.mean_primary_demand_gbps
    assert busy.mean_u_p > quiet.mean_u_p


SHIPPED_IO_SCENARIOS = ["none"] + [f"{rx}_{tx}" for rx in ("low", "med", "high") for tx in ("low", "med", "high")]


@pytest.mark.parametrize("scenario", SHIPPED_IO_SCENARIOS)
def test_shipped_scenario_stays_below_saturation(scenario):
    rx, tx = parse_io_scenario(scenario)
    cfg = memory_bound_scenario(io_rx_level=rx, io_tx_level=tx, n_intervals=100)
    cfg = cfg.model_copy(update={"r_star": optimal_split(cfg.demand_mean, cfg.system).r})
    summary = run(cfg).summary
    assert summary.mean_u_p < cfg.system.primary_curve.max_utilization
    assert summary.saturated is False


def test_io_scenarios_are_told_apart():
    amat = {}
    for scenario in ("low_low", "med_med", "high_high"):
        rx, tx = parse_io_scenario(scenario)
        cfg = memory_bound_scenario(r_star=0.7, io_rx_level=rx, io_tx_level=tx, n_intervals=100)
        amat[scenario] = run(cfg).summary.mean_amat_ns
    assert amat["low_low"] < amat["med_med"] < amat["high_high"]


def test_saturation_is_flagged(caplog):
    cfg = memory_bound_scenario(r_star=0.7, io_rx_level=0.8, io_tx_level=0.8, n_intervals=20).model_copy(
        update={"io_mem_spill_rx": 1.0, "io_mem_spill_tx": 1.0}
    )
    with caplog.at_level(logging.WARNING):
        metrics = run(cfg)
    assert all(r.saturated for r in metrics.records)
    assert metrics.summary.saturated_intervals == 20
    assert metrics.summary.model_dump()["saturated"] is True
    assert "clamped" in caplog.text


def test_metrics_rows_follow_header():
    metrics = run(memory_bound_scenario(r_star=0.7, n_intervals=5))
    rows = list(metrics_rows(metrics))
    assert len(rows) == 5
    assert all(len(row) == len(METRICS_CSV_HEADER) for row in rows)
    assert [row[0] for row in rows] == [0, 1, 2, 3, 4]


def test_sim_config_validation(system):
    with pytest.raises(ValidationError):
        SimConfig(system=system, r_star=0.5, demand_mean=10.0, n_intervals=0)
    with pytest.raises(ValidationError):
        SimConfig(system=system, r_star=0.5, demand_mean=10.0, io_rx_level=1.5)
    assert SimConfig(system=system, r_star=0.5, demand_mean=10.0).interval_ns == pytest.approx(416.6667, abs=1e-3)


@pytest.mark.slow
def test_planned_split_sits_on_a_plateau():
    cfg = memory_bound_scenario(r_star=0.7, n_intervals=50)
    sweep = SweepSplitsUseCase().execute(cfg)
    assert len(sweep.points) == 20
    best = sweep.best.mean_amat_ns
    for point in sweep.plateau(0.10):
        assert point.mean_amat_ns <= 1.10 * best
    assert sweep.planned_gap <= 0.05


@pytest.mark.slow
def test_io_robustness_rows():
    cfg = memory_bound_scenario(r_star=0.7, n_intervals=30)
    rows = IoRobustnessUseCase().execute(cfg, ["low_low", "high_high"])
    assert [r.scenario for r in rows] == ["low_low", "high_high"]
    assert all(r.planned_r == 0.7 for r in rows)
    assert all(r.gap >= -1e-12 for r in rows)


@pytest.mark.slow
def test_link_sensitivity_rows():
    cfg = memory_bound_scenario(n_intervals=30)
    rows = LinkSensitivityUseCase().execute(cfg, [50.0, 200.0], [0.5])
    assert [(r.premium_ns, r.boost) for r in rows] == [(50.0, 0.5), (200.0, 0.5)]
    assert all(r.r_star < 1.0 for r in rows)
    assert all(r.amat_reduction > 0 for r in rows)
    assert rows[0].planned_amat_ns < rows[1].planned_amat_ns
