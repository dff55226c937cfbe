"""
Salvage-memory utility: the expected share of a salvage device's
provisioned bandwidth that idle links can actually reach.

With K ~ Binomial(n, p) idle links, each able to carry one unit of
bandwidth, a device provisioned for x units delivers min(K, x) of them.
"""

import logging

import numpy as np
from scipy.stats import binom

from app.core.enums import SalvageTopology
from app.core.exceptions import DomainError
from app.modules.utility.schemas import PodConfig, UtilityPoint

logger = logging.getLogger(__name__)


def _check(n: int, p: float, x: float = 1.0) -> None:
    if n < 1 or not (0.0 <= p <= 1.0) or not x > 0:
        raise DomainError(
            "utility needs n >= 1, 0 <= p <= 1 and x > 0",
            details={"n": n, "p": p, "x": x},
        )


def solo_utility(p: float) -> float:
    _check(1, p)
    return p


def pod_utility(n: int, p: float) -> float:
    """Probability that at least one of ``n`` links is idle: 1 - (1-p)^n."""
    _check(n, p)
    return 1.0 - (1.0 - p) ** n


def provisioned_utility(n: int, p: float, x: float) -> float:
    """E[min(K, x)] / x by exact binomial summation."""
    _check(n, p, x)
    if x == 1:
        # exact closed form; E[min(K, 1)] = P(K >= 1)
        return pod_utility(n, p)
    k = np.arange(n + 1)
    return float(np.sum(np.minimum(k, x) * binom.pmf(k, n, p)) / x)


def provisioned_utility_mc(n: int, p: float, x: float, samples: int, seed: int) -> float:
    """Monte Carlo estimate of provisioned_utility from seeded binomial draws."""
    _check(n, p, x)
    if samples < 1:
        raise DomainError("samples must be >= 1", details={"samples": samples})
    rng = np.random.default_rng(seed)
    k = rng.binomial(n, p, size=samples)
    return float(np.mean(np.minimum(k, x)) / x)


def topology_utility(topology: SalvageTopology, n: int, p: float) -> float:
    """Utility at a provisioning ratio of one; a Solo device serves only its own server."""
    if topology == SalvageTopology.SOLO:
        return solo_utility(p)
    return pod_utility(n, p)


def utility_point(
    pod: PodConfig, samples: int, seed: int, topology: SalvageTopology = SalvageTopology.POD
) -> UtilityPoint:
    if topology == SalvageTopology.SOLO:
        pod = pod.model_copy(update={"n": 1})
    if pod.x == 1:
        analytic = topology_utility(topology, pod.n, pod.p)
    else:
        analytic = provisioned_utility(pod.n, pod.p, pod.x)
    return UtilityPoint(
        n=pod.n,
        p=pod.p,
        x=pod.x,
        utility_analytic=analytic,
        utility_mc=provisioned_utility_mc(pod.n, pod.p, pod.x, samples, seed),
    )
