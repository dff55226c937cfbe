from pathlib import Path

import pytest

from app.config.presets import default_system
from app.core.messaging import DecisionPublisher
from app.modules.amat.schemas import SystemConfig
from app.modules.curves.services import flat_curve
from app.modules.link.schemas import LinkSpec
from app.modules.splitplan.services import default_demand_grid, generate_set

CONFIGS_DIR = Path(__file__).resolve().parent.parent / "configs"

# Availability levels for the shared test curve set (81 curves).
TEST_LEVELS = (0.5, 0.75, 1.0)
TEST_DEMAND_POINTS = 12


def _flat_system(
    l_p: float = 80.0,
    l_s: float = 130.0,
    l_ing: float = 60.0,
    l_egr: float = 40.0,
    b_p: float = 38.4,
    b_s: float = 19.2,
    raw: float = 64.0,
) -> SystemConfig:
    premium = l_ing + l_egr
    link = LinkSpec(
        raw_bw_per_dir=raw,
        eta=0.94,
        base_overhead=premium,
        ingress_share=l_ing / premium if premium else 0.5,
        ingress_curve=flat_curve(l_ing),
        egress_curve=flat_curve(l_egr),
    )
    return SystemConfig(
        b_p=b_p,
        b_s=b_s,
        primary_curve=flat_curve(l_p),
        salvage_curve=flat_curve(l_s),
        link=link,
        label="flat",
    )


@pytest.fixture(scope="session")
def system() -> SystemConfig:
    return default_system()


@pytest.fixture(scope="session")
def curve_set(system):
    return generate_set(system, TEST_LEVELS, default_demand_grid(system, TEST_DEMAND_POINTS))


@pytest.fixture
def publisher() -> DecisionPublisher:
    return DecisionPublisher()


@pytest.fixture
def configs_dir() -> Path:
    return CONFIGS_DIR


@pytest.fixture
def flat_system():
    """Factory for systems whose curves are constant latencies."""
    return _flat_system
