import numpy as np
import pytest
from pydantic import ValidationError
from scipy.stats import binom

from app.core.enums import SalvageTopology
from app.core.exceptions import DomainError
from app.modules.utility.schemas import PodConfig
from app.modules.utility.services import (
    pod_utility,
    provisioned_utility,
    provisioned_utility_mc,
    solo_utility,
    topology_utility,
    utility_point,
)


@pytest.mark.parametrize("p", [0.2, 0.0, 1.0])
def test_solo_utility_is_p(p):
    assert solo_utility(p) == p


def test_pod_of_sixteen():
    assert pod_utility(16, 0.2) == pytest.approx(0.971853, abs=1e-6)
    assert pod_utility(16, 0.2) == pytest.approx(1 - 0.8**16, abs=1e-9)


def test_pod_utility_direct_value():
    assert pod_utility(8, 0.5) == 0.99609375


def test_pod_of_one_is_solo():
    rng = np.random.default_rng(1)
    for p in rng.uniform(0.0, 1.0, size=100):
        assert pod_utility(1, float(p)) == pytest.approx(solo_utility(float(p)), abs=1e-15)


def test_pod_utility_grows_with_n_and_p():
    for p in (0.05, 0.2, 0.5):
        values = [pod_utility(n, p) for n in range(1, 17)]
        assert all(a <= b for a, b in zip(values, values[1:]))
    for n in (1, 4, 16):
        values = [pod_utility(n, p) for p in np.linspace(0.0, 1.0, 21)]
        assert all(a <= b for a, b in zip(values, values[1:]))


def test_provisioned_utility_at_unit_ratio_is_pod_utility():
    rng = np.random.default_rng(3)
    for _ in range(50):
        n = int(rng.integers(1, 33))
        p = float(rng.uniform(0.0, 1.0))
        assert provisioned_utility(n, p, 1.0) == pod_utility(n, p)


def test_provisioned_utility_four_links():
    value = provisioned_utility(16, 0.2, 4.0)
    assert value == pytest.approx(0.720284, abs=1e-6)
    # E[min(K, x)] <= min(E[K], x), so n*p/x = 0.8 bounds it from above
    assert value < 16 * 0.2 / 4.0
    k = np.arange(17)
    assert value == pytest.approx(float(np.sum(np.minimum(k, 4) * binom.pmf(k, 16, 0.2)) / 4))


def test_all_links_idle():
    for x in (1.0, 2.5, 8.0, 16.0):
        assert provisioned_utility(16, 1.0, x) == pytest.approx(1.0)


def test_provisioned_utility_declines_with_ratio():
    for n, p in ((4, 0.2), (16, 0.2), (16, 0.5)):
        values = [provisioned_utility(n, p, x) for x in (1.0, 2.0, 4.0, 8.0)]
        assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))


def test_smaller_pods_decline_faster():
    assert provisioned_utility(4, 0.2, 4.0) < provisioned_utility(16, 0.2, 4.0)


@pytest.mark.slow
def test_monte_carlo_matches_binomial_sum():
    mc = provisioned_utility_mc(16, 0.2, 4.0, 1_000_000, seed=7)
    assert mc == pytest.approx(provisioned_utility(16, 0.2, 4.0), abs=0.005)
    mc_unit = provisioned_utility_mc(16, 0.2, 1.0, 1_000_000, seed=8)
    assert mc_unit == pytest.approx(pod_utility(16, 0.2), abs=0.005)


def test_monte_carlo_is_deterministic_per_seed():
    assert provisioned_utility_mc(8, 0.3, 2.0, 5000, seed=1) == provisioned_utility_mc(8, 0.3, 2.0, 5000, seed=1)


def test_monte_carlo_without_idle_links():
    assert provisioned_utility_mc(16, 0.0, 4.0, 10, seed=0) == 0.0


@pytest.mark.parametrize("args", [(0, 0.5, 1.0), (4, 1.5, 1.0), (4, 0.5, 0.0)])
def test_bad_inputs(args):
    with pytest.raises(DomainError):
        provisioned_utility(*args)


def test_pod_config_validation():
    with pytest.raises(ValidationError):
        PodConfig(n=0, p=0.5)
    assert PodConfig(n=4, p=0.5).x == 1.0


def test_topology_utility():
    assert topology_utility(SalvageTopology.SOLO, 16, 0.2) == 0.2
    assert topology_utility(SalvageTopology.POD, 16, 0.2) == pod_utility(16, 0.2)


def test_utility_point():
    point = utility_point(PodConfig(n=16, p=0.2, x=4.0), samples=20_000, seed=7)
    assert point.utility_analytic == provisioned_utility(16, 0.2, 4.0)
    assert point.utility_mc == pytest.approx(point.utility_analytic, abs=0.02)


def test_solo_utility_point_is_a_pod_of_one():
    point = utility_point(PodConfig(n=16, p=0.3), samples=1000, seed=2, topology=SalvageTopology.SOLO)
    assert point.n == 1
    assert point.utility_analytic == 0.3
    provisioned = utility_point(PodConfig(n=16, p=0.3, x=2.0), samples=1000, seed=2, topology=SalvageTopology.SOLO)
    assert provisioned.utility_analytic == pytest.approx(0.15)
