import json

import numpy as np
import pytest

from app.core.enums import DecisionEventType
from app.core.exceptions import ConflictException, NotFoundException
from app.core.messaging import DecisionEvent, DecisionPublisher
from app.modules.cluster.repositories import ServerStore
from app.modules.cluster.schemas import WorkloadProfile
from app.modules.cluster.services import (
    CAPACITY_REASON,
    RULE3_REASON,
    complete,
    deploy,
    new_server,
    recompute_committed,
    residual,
)
from app.modules.cluster.services.cluster_service import ClusterService
from app.modules.cluster.use_cases import CompleteWorkloadUseCase, DeployWorkloadUseCase
from app.modules.splitplan.services import probe, select_curve

MEMORY_BOUND = WorkloadProfile(name="membound", demand_mean=30.72)
SMALL = WorkloadProfile(name="small", demand_mean=5.0)
IO_HEAVY = WorkloadProfile(name="nic", demand_mean=0.0, io_rx_level=0.5)


def _assert_close(a, b):
    assert a.as_tuple() == pytest.approx(b.as_tuple(), abs=1e-9)


def test_empty_server_residual_is_nominal(system):
    server = new_server("s0", system)
    assert residual(server) == server.nominal
    assert server.nominal.b_p_avail == system.b_p


def test_capacity_exceeded_plan_is_rejected(system, curve_set):
    server = new_server("s0", system)
    decision, updated = deploy(server, WorkloadProfile(name="huge", demand_mean=200.0), curve_set)
    assert decision.accepted is False
    assert decision.reason == CAPACITY_REASON
    assert decision.capacity_exceeded is True
    assert updated == server


def test_all_primary_deploy_reduces_primary_only(system, curve_set):
    server = new_server("s0", system)
    decision, updated = deploy(server, WorkloadProfile(name="w", demand_mean=10.0), curve_set)
    assert decision.accepted
    assert decision.r_star == 1.0
    after = residual(updated)
    assert after.b_p_avail == pytest.approx(system.b_p - 10.0)
    assert after.b_s_avail == system.b_s
    assert after.link_ing_avail == system.ing_capacity
    assert decision.residual_after == after


def test_memory_bound_workload_salvages(system, curve_set):
    decision, updated = deploy(new_server("s0", system), MEMORY_BOUND, curve_set)
    assert decision.accepted
    assert decision.r_star < 1.0
    assert updated.find("membound").profile.salvaging
    assert residual(updated).b_s_avail < system.b_s


def test_zero_demand_stays_on_primary(system, curve_set):
    decision, _ = deploy(new_server("s0", system), WorkloadProfile(name="idle", demand_mean=0.0), curve_set)
    assert decision.accepted
    assert decision.r_star == 1.0


def test_io_heavy_workload_rejected_next_to_salvaging_one(system, curve_set):
    _, server = deploy(new_server("s0", system), MEMORY_BOUND, curve_set)
    decision, unchanged = deploy(server, IO_HEAVY, curve_set)
    assert not decision.accepted
    assert decision.reason == RULE3_REASON
    assert decision.reason.startswith("rule 3:")
    assert unchanged == server


def test_salvaging_workload_rejected_next_to_io_heavy_one(system, curve_set):
    _, server = deploy(new_server("s0", system), IO_HEAVY, curve_set)
    decision, unchanged = deploy(server, MEMORY_BOUND, curve_set)
    assert not decision.accepted
    assert decision.reason == RULE3_REASON
    assert decision.r_star < 1.0
    assert unchanged == server


def test_duplicate_workload_name_is_rejected(system, curve_set):
    _, server = deploy(new_server("s0", system), SMALL, curve_set)
    decision, _ = deploy(server, SMALL, curve_set)
    assert not decision.accepted
    assert "already deployed" in decision.reason


def test_split_comes_from_the_curve_for_the_residual(system, curve_set):
    server = new_server("s0", system)
    for profile in (SMALL, MEMORY_BOUND):
        decision, server = deploy(server, profile, curve_set)
        assert decision.accepted
        curve = select_curve(curve_set, decision.residual_before)
        assert decision.r_star == probe(curve, profile.demand_mean)[0]
        assert decision.curve_key == curve.availability


def test_deploy_then_complete_restores_residual(system, curve_set):
    server = new_server("s0", system)
    _, deployed = deploy(server, MEMORY_BOUND, curve_set)
    released_server, released, advisory = complete(deployed, "membound")
    assert residual(released_server) == residual(server)
    assert released.profile.name == "membound"
    assert not advisory


def test_completion_advisory(system, curve_set):
    server = new_server("s0", system)
    _, server = deploy(server, SMALL, curve_set)
    decision, server = deploy(server, MEMORY_BOUND, curve_set)
    assert decision.accepted and decision.r_star < 1.0

    _, _, advisory = complete(server, "small")
    assert advisory


def test_complete_unknown_workload(system):
    with pytest.raises(NotFoundException):
        complete(new_server("s0", system), "ghost")


def test_random_schedule_keeps_bookkeeping_consistent(system, curve_set):
    rng = np.random.default_rng(5)
    server = new_server("s0", system)
    threshold = 0.5
    for i in range(200):
        if server.deployed and rng.random() < 0.4:
            victim = server.deployed[int(rng.integers(len(server.deployed)))].profile.name
            server, _, _ = complete(server, victim)
        else:
            profile = WorkloadProfile(
                name=f"w{i}",
                demand_mean=float(rng.uniform(0.0, 35.0)),
                io_rx_level=float(rng.choice([0.0, 0.1, 0.5, 0.8])),
                io_tx_level=float(rng.choice([0.0, 0.1, 0.5])),
            )
            _, server = deploy(server, profile, curve_set, io_heavy_threshold=threshold)

        _assert_close(server.committed, recompute_committed(server.deployed))
        assert server.committed.fits_within(server.nominal, tolerance=1e-6)
        heavy = {d.profile.name for d in server.deployed if d.profile.is_io_heavy(threshold)}
        salvaging = {d.profile.name for d in server.salvaging}
        for name in heavy:
            assert not (salvaging - {name})


def test_decision_event_carries_every_field():
    event = DecisionEvent(event="deploy.accepted", workload="w", server="s", r_star=0.7, data={"demand_gbps": 30.72})
    body = json.loads(json.dumps(event.to_dict()))
    assert sorted(body) == ["data", "event", "event_id", "r_star", "reason", "server", "timestamp", "workload"]
    assert body["r_star"] == 0.7
    assert body["data"] == {"demand_gbps": 30.72}
    assert body["event_id"] == event.event_id


def test_publisher_appends_json_lines(tmp_path):
    path = tmp_path / "logs" / "decisions.jsonl"
    publisher = DecisionPublisher(str(path))
    publisher.publish(DecisionEvent(event="deploy.rejected", workload="w", server="s", reason="no"))
    publisher.publish(DecisionEvent(event="deploy.accepted", workload="v", server="s", r_star=1.0))
    lines = [json.loads(line) for line in path.read_text().splitlines()]
    assert [line["event"] for line in lines] == ["deploy.rejected", "deploy.accepted"]
    assert len(publisher.recent) == 2


def test_publisher_keeps_last_events():
    publisher = DecisionPublisher(keep_last=3)
    for i in range(5):
        publisher.publish(DecisionEvent(event="deploy.accepted", workload=f"w{i}", server="s"))
    assert [e.workload for e in publisher.recent] == ["w2", "w3", "w4"]


@pytest.mark.asyncio
async def test_store_conflict_and_not_found(system):
    store = ServerStore()
    await store.add(new_server("s0", system))
    with pytest.raises(ConflictException):
        await store.add(new_server("s0", system))
    with pytest.raises(NotFoundException):
        await store.get("s1")
    assert [s.name for s in await store.list()] == ["s0"]


@pytest.mark.asyncio
async def test_use_cases_publish_decisions(system, curve_set, publisher):
    store = ServerStore()
    await store.add(new_server("s0", system))
    deploy_uc = DeployWorkloadUseCase(store, curve_set, publisher)
    complete_uc = CompleteWorkloadUseCase(store, publisher)

    assert (await deploy_uc.execute("s0", SMALL)).accepted
    assert (await deploy_uc.execute("s0", MEMORY_BOUND)).accepted
    rejected = await deploy_uc.execute("s0", IO_HEAVY)
    assert not rejected.accepted
    await complete_uc.execute("s0", "small")

    events = [e.event for e in publisher.recent]
    assert events == [
        DecisionEventType.ACCEPTED.value,
        DecisionEventType.ACCEPTED.value,
        DecisionEventType.REJECTED.value,
        DecisionEventType.COMPLETED.value,
        DecisionEventType.ADVISORY.value,
    ]
    assert publisher.recent[2].reason == RULE3_REASON
    assert publisher.recent[-1].data["salvaging"] == ["membound"]
    stored = await store.get("s0")
    assert [d.profile.name for d in stored.deployed] == ["membound"]


@pytest.mark.asyncio
async def test_rejected_deploy_leaves_store_untouched(system, curve_set):
    store = ServerStore()
    await store.add(new_server("s0", system))
    await DeployWorkloadUseCase(store, curve_set).execute("s0", WorkloadProfile(name="huge", demand_mean=500.0))
    assert (await store.get("s0")).deployed == ()


@pytest.mark.asyncio
async def test_cluster_service_views(system, curve_set, publisher):
    service = ClusterService(ServerStore(), curve_set, publisher)
    view = await service.register_server("s0", system)
    assert view.residual == view.nominal
    decision = await service.deploy("s0", SMALL)
    assert decision.accepted
    view = await service.get_server("s0")
    assert [w.profile.name for w in view.workloads] == ["small"]
    assert view.residual.b_p_avail == pytest.approx(system.b_p - 5.0)
    view = await service.complete("s0", "small")
    assert view.workloads == []
    assert [v.name for v in await service.list_servers()] == ["s0"]
    with pytest.raises(NotFoundException):
        await service.complete("s0", "small")
