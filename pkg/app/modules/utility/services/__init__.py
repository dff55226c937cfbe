from app.modules.utility.services.utility_service import (
    solo_utility,
    pod_utility,
    provisioned_utility,
    provisioned_utility_mc,
    topology_utility,
    utility_point,
)

__all__ = [
    "solo_utility",
    "pod_utility",
    "provisioned_utility",
    "provisioned_utility_mc",
    "topology_utility",
    "utility_point",
]
