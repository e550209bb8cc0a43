import json
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barClasses import ClassLabel, generate
from distsim import (
    PhaseOrderError,
    Scenario,
    SeedNotTriangle,
    metrics,
    run_full,
    run_phase1,
    run_phase2,
    run_phase3,
    simulate,
)
from ftg import build_ftg, ftt
from graphModel import Graph, Triangle, enumerate_triangles
from rigidityOracle import is_globally_rigid


def _make_k(n: int) -> Graph:
    return Graph(range(n), combinations(range(n), 2))


def _run(spec: str, scheduler_seed: int = 0):
    inst = generate(spec)
    return inst, simulate(inst.graph, inst.seed_triangle, scheduler_seed)


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------

COMPLETE = [
    "wheel:6",
    "cycle:5",
    "cycle:8,zigzag=1",
    "circuit:4",
    "circuit:5",
    "circuit:6",
    "bridge:2",
    "bridge:3",
    "bridge:5",
    "notch:tree=claw",
    "net:linked",
    "trilat:n=10,seed=1",
    "wheelext:sizes=5-6-4,seed=2",
    "stitched:circuit7+wheel9+cycle8,seed=1",
]


@pytest.mark.parametrize("spec", COMPLETE)
def test_bar_corpus_fully_localizable(spec):
    inst, sim = _run(spec)
    assert sim.localizable_nodes() == set(inst.graph.nodes)


def test_chain_marks_only_seed():
    _, sim = _run("chain:5")
    assert sim.localizable_nodes() == {0, 1, 2}
    assert sim.bar_ids() == []


def test_graft_leaves_tail_unmarked():
    inst, sim = _run("graft:bar=wheel6,m=3")
    tail = set(inst.witness["chain_nodes"])
    assert tail == {6, 7, 8}
    assert sim.localizable_nodes() == set(inst.witness["bar_nodes"])


def test_disjoint_marks_seed_component():
    inst, sim = _run("disjoint:wheel4+wheel4")
    assert sim.localizable_nodes() == set(inst.witness["components"][0])


def test_cycle_has_one_closing_id():
    _, sim = _run("cycle:5")
    assert [b.kind for b in sim.bar_ids() if b.kind == "cycle"] == ["cycle"]
    (bar,) = sim.bars
    assert bar.nodes == frozenset(range(6))


def test_circuit_id_carries_knot():
    inst, sim = _run("circuit:6")
    circuits = [b for b in sim.bar_ids() if b.kind == "circuit"]
    assert len(circuits) == 1
    assert circuits[0].nodes == (inst.witness["knot"],)
    assert ClassLabel.CIRCUIT in {b.label for b in sim.bars}


def test_hub_emits_wheel_witness():
    _, sim = _run("wheel:6")
    wheels = [b for b in sim.bar_ids() if b.kind == "wheel"]
    assert [b.nodes for b in wheels] == [(0,)]
    assert len(wheels[0].triangles) == 5


def test_distributed_tree_matches_central_on_chain():
    inst, sim = _run("chain:6")
    central = ftt(build_ftg(inst.graph), inst.seed_triangle)
    assert sim.tree.parent == central.parent
    assert sim.tree.depth == central.depth


# ---------------------------------------------------------------------------
# Phase ordering and seeds
# ---------------------------------------------------------------------------

def test_phase3_needs_phase2():
    sim = run_phase1(_make_k(4))
    with pytest.raises(PhaseOrderError, match="phase2"):
        run_phase3(sim)


def test_phase2_runs_once():
    sim = run_phase1(_make_k(4))
    run_phase2(sim, (0, 1, 2))
    with pytest.raises(PhaseOrderError, match="already ran"):
        run_phase2(sim, (0, 1, 2))


@pytest.mark.parametrize("seed", [(0, 1, 5), (0, 1, 3), (0, 0, 1)])
def test_bad_seed_rejected(seed):
    g = Graph(range(4), [(0, 1), (0, 2), (1, 2), (2, 3)])
    with pytest.raises(SeedNotTriangle):
        simulate(g, seed)


def test_k3_seed_marks_itself():
    report = run_full(_make_k(3), (0, 1, 2))
    assert report.localizable_nodes == {0, 1, 2}
    assert report.seed_triangle == Triangle(0, 1, 2)


# ---------------------------------------------------------------------------
# Metrics and reports
# ---------------------------------------------------------------------------

def test_k4_metrics():
    report = run_full(_make_k(4), (0, 1, 2))
    m = metrics(report, message_constant=120)
    assert report.localizable_nodes == {0, 1, 2, 3}
    assert m["max_phase1_clock"] <= 9
    assert m["clock_violations"] == []
    assert m["within_budget"]
    assert m["ratio"] == report.total_messages / 6
    assert set(m["per_phase"]) == {"phase1", "phase2", "phase3"}
    assert sum(p["messages"] for p in m["per_phase"].values()) == report.total_messages


@pytest.mark.parametrize("scheduler_seed", range(5))
def test_trilateration_run_stays_within_budget(scheduler_seed):
    inst = generate("trilat:n=10,seed=1")
    report = run_full(inst.graph, inst.seed_triangle, scheduler_seed)
    m = metrics(report)
    assert report.localizable_nodes == set(inst.graph.nodes)
    assert m["within_budget"]
    assert report.per_phase["phase3"]["messages"] <= 40 * inst.graph.num_edges


def test_metrics_constant_from_environment(monkeypatch):
    monkeypatch.setenv("TRIBAR_MESSAGE_CONSTANT", "1")
    m = metrics(run_full(_make_k(4), (0, 1, 2)))
    assert m["message_constant"] == 1
    assert not m["within_budget"]


def test_report_json_is_sorted_and_complete():
    inst, sim = _run("wheel:6")
    data = json.loads(sim.report().to_json())
    assert data["localizable_nodes"] == list(range(6))
    assert data["seed_triangle"] == [0, 1, 2]
    assert data["num_edges"] == inst.graph.num_edges
    assert all(b["label"] for b in data["elementary_bars"])


def test_trace_lines_follow_clock_order():
    inst = generate("cycle:5")
    sim = simulate(inst.graph, inst.seed_triangle, trace=True)
    assert len(sim.trace) == sim.net.messages
    first = sim.trace[0].split()
    assert first[1] == "NBR_LIST"


# ---------------------------------------------------------------------------
# Scenarios
# ---------------------------------------------------------------------------

def test_scenario_load(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"graph": "cycle:6", "seed_triangle": [2, 0, 1], "scheduler_seed": 4}))
    scenario = Scenario.load(path)
    assert scenario.seed_triangle == (2, 0, 1)
    assert scenario.to_dict()["scheduler_seed"] == 4
    assert not scenario.trace


@pytest.mark.parametrize("data", [{}, {"graph": "cycle:6", "seed_triangle": [0, 1]}])
def test_scenario_rejects(data):
    with pytest.raises(ValueError):
        Scenario.from_dict(data)


# ---------------------------------------------------------------------------
# Properties
# ---------------------------------------------------------------------------

@st.composite
def seeded_graphs(draw, max_nodes=16):
    n = draw(st.integers(min_value=4, max_value=max_nodes))
    p = draw(st.floats(min_value=0.3, max_value=0.6))
    seed = draw(st.integers(min_value=0, max_value=2**20))
    g = Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))
    tris = enumerate_triangles(g)
    if not tris:
        return g, None, seed
    return g, draw(st.sampled_from(sorted(tris))), seed


@settings(max_examples=40, deadline=None)
@given(seeded_graphs())
def test_localizable_set_is_globally_rigid(case):
    g, seed, _ = case
    if seed is None:
        return
    marked = simulate(g, seed).localizable_nodes()
    assert set(seed.nodes) <= marked
    if len(marked) >= 4:
        assert is_globally_rigid(g.induced(marked)).globally_rigid


ORDER_GRAPHS = [(n, p, s) for n, p, s in zip([8, 10, 12, 14, 16] * 4, [0.35, 0.45, 0.55, 0.65] * 5, range(20))]


@pytest.mark.parametrize("n,p,graph_seed", ORDER_GRAPHS)
def test_outcome_independent_of_delivery_order(n, p, graph_seed):
    g = Graph.from_networkx(nx.gnp_random_graph(n, p, seed=graph_seed))
    tris = enumerate_triangles(g)
    if not tris:
        pytest.skip("no triangle to seed from")
    seed = min(tris)
    runs = [simulate(g, seed, scheduler_seed=k) for k in range(10)]
    assert len({frozenset(sim.localizable_nodes()) for sim in runs}) == 1
    assert len({tuple(sim.bar_ids()) for sim in runs}) == 1


@settings(max_examples=25, deadline=None)
@given(seeded_graphs(max_nodes=12))
def test_distributed_tree_matches_central(case):
    g, seed, sched = case
    if seed is None:
        return
    sim = run_phase1(g, scheduler_seed=sched)
    tree, _ = run_phase2(sim, seed)
    central = ftt(build_ftg(g), seed)
    assert tree.parent == central.parent
    assert tree.depth == central.depth
