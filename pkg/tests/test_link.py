import math

import numpy as np
import pytest
from pydantic import ValidationError

from app.core.exceptions import DomainError
from app.modules.curves.services import flat_curve
from app.modules.link.schemas import LinkSpec
from app.modules.link.services import (
    build_link_spec,
    direction_utilization,
    effective_direction_bandwidth,
    link_efficiency,
    link_latency,
    rebase_link_premium,
)


def _flat_link(ing: float = 50.0, egr: float = 50.0, **kwargs) -> LinkSpec:
    return LinkSpec(
        base_overhead=ing + egr,
        ingress_share=ing / (ing + egr),
        ingress_curve=flat_curve(ing),
        egress_curve=flat_curve(egr),
        **kwargs,
    )


def test_efficiency_from_flit_format():
    assert link_efficiency(_flat_link(eta=None)) == pytest.approx(0.9412, abs=1e-4)


def test_efficiency_honors_configured_eta():
    assert link_efficiency(_flat_link(eta=0.94)) == 0.94


def test_efficiency_without_flit_overhead():
    assert link_efficiency(_flat_link(eta=None, flit_payload=68, flit_total=68)) == 1.0


def test_effective_bandwidth_at_two_to_one_read_write():
    spec = build_link_spec()
    rx, tx = effective_direction_bandwidth(spec, 2.0 / 3.0)
    raw = spec.raw_bw_per_dir
    assert rx == pytest.approx(0.80 * raw, abs=0.02 * raw)
    assert tx == pytest.approx(0.40 * raw, abs=0.02 * raw)


def test_effective_bandwidth_read_only():
    spec = build_link_spec()
    rx, tx = effective_direction_bandwidth(spec, 1.0)
    assert rx > 0.80 * spec.raw_bw_per_dir
    assert rx == pytest.approx(0.94 * 64.0 * 64.0 / 72.0)
    assert tx == 0.0


def test_effective_bandwidth_write_only():
    spec = build_link_spec()
    rx, tx = effective_direction_bandwidth(spec, 0.0)
    assert rx == 0.0
    assert tx == pytest.approx(0.94 * 64.0 * 64.0 / 86.0)


def test_effective_bandwidth_is_monotone_and_bounded():
    spec = build_link_spec()
    samples = [effective_direction_bandwidth(spec, f) for f in np.linspace(0.0, 1.0, 101)]
    rx = [s[0] for s in samples]
    tx = [s[1] for s in samples]
    assert all(a <= b + 1e-12 for a, b in zip(rx, rx[1:]))
    assert all(a >= b - 1e-12 for a, b in zip(tx, tx[1:]))
    assert max(rx + tx) <= spec.raw_bw_per_dir


@pytest.mark.parametrize("fraction", [-0.1, 1.1])
def test_effective_bandwidth_rejects_bad_fraction(fraction):
    with pytest.raises(DomainError):
        effective_direction_bandwidth(build_link_spec(), fraction)


def test_direction_utilization_example():
    spec = _flat_link(raw_bw_per_dir=63.0, eta=0.94)
    u_ing, u_egr = direction_utilization(spec, 10.0, 0.75)
    assert u_ing == pytest.approx(0.1267, abs=1e-4)
    assert u_egr == pytest.approx(0.0422, abs=1e-4)


def test_direction_utilization_zero_traffic():
    assert direction_utilization(build_link_spec(), 0.0, 0.75) == (0.0, 0.0)


def test_direction_utilization_is_linear_in_demand():
    spec = build_link_spec()
    one = direction_utilization(spec, 7.0, 0.75)
    three = direction_utilization(spec, 21.0, 0.75)
    assert three[0] == pytest.approx(3 * one[0])
    assert three[1] == pytest.approx(3 * one[1])


def test_direction_utilization_against_available_capacity():
    spec = build_link_spec()
    assert direction_utilization(spec, 10.0, 0.75, ing_capacity=32.0)[0] == pytest.approx(
        2 * direction_utilization(spec, 10.0, 0.75)[0]
    )
    assert math.isinf(direction_utilization(spec, 10.0, 0.75, ing_capacity=0.0)[0])


def test_link_latency_flat_curves():
    assert link_latency(_flat_link(), 0.3, 0.9) == (50.0, 50.0)


def test_link_latency_saturates_per_direction():
    spec = build_link_spec()
    l_ing, l_egr = link_latency(spec, 0.99, 0.0)
    assert math.isinf(l_ing)
    assert l_egr == pytest.approx(50.0)


def test_default_premium_is_split_evenly():
    spec = build_link_spec(premium_ns=100.0)
    l_ing, l_egr = link_latency(spec, 0.0, 0.0)
    assert (l_ing, l_egr) == (pytest.approx(50.0), pytest.approx(50.0))
    assert l_ing + l_egr == pytest.approx(100.0)


def test_link_spec_checks_zero_load_consistency():
    with pytest.raises(ValidationError):
        LinkSpec(
            base_overhead=100.0,
            ingress_curve=flat_curve(30.0),
            egress_curve=flat_curve(50.0),
        )


def test_link_spec_checks_eta_and_flit():
    with pytest.raises(ValidationError):
        _flat_link(eta=1.2)
    with pytest.raises(ValidationError):
        _flat_link(flit_payload=72, flit_total=68)


def test_rebase_premium_keeps_curve_shape():
    spec = build_link_spec(premium_ns=100.0)
    rebased = rebase_link_premium(spec, 200.0)
    assert rebased.base_overhead == 200.0
    assert link_latency(rebased, 0.0, 0.0) == (pytest.approx(100.0), pytest.approx(100.0))
    delta = link_latency(rebased, 0.5, 0.5)[0] - link_latency(spec, 0.5, 0.5)[0]
    assert delta == pytest.approx(50.0)
