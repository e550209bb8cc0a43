from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barClasses import gen_triangle_cycle
from distsim import Message, NodeState, SignalKind, handle_recv_nbr_list, handle_recv_triangle, run_phase1
from ftg import build_ftg
from graphModel import Graph, Triangle


def _make_k(n: int) -> Graph:
    return Graph(range(n), combinations(range(n), 2))


def _make_state(g: Graph, v: int) -> NodeState:
    return NodeState(id=v, nbrs=g.neighbors(v))


def _nbr_list(g: Graph, src: int, dst: int) -> Message:
    return Message(SignalKind.NBR_LIST, src, dst, {"nbrs": list(g.neighbors(src))})


def _batch(src: int, dst: int, tris, relay: bool) -> Message:
    return Message(SignalKind.TRIANGLE, src, dst, {"triangles": sorted(tris), "relay": relay})


def _sends(out: list[Message]) -> dict[int, list[Triangle]]:
    return {m.dst: m.payload["triangles"] for m in out}


# ---------------------------------------------------------------------------
# Handler traces
# ---------------------------------------------------------------------------

def test_k4_leader_finds_triangles_through_sender():
    g = _make_k(4)
    state = _make_state(g, 0)
    assert handle_recv_nbr_list(state, _nbr_list(g, 1, 0)) == []
    assert set(state.trngls) == {Triangle(0, 1, 2), Triangle(0, 1, 3)}
    assert state.trngls[Triangle(0, 1, 2)].nbr_triangles == {Triangle(0, 1, 3)}


def test_k4_leader_announces_once_all_lists_are_in():
    g = _make_k(4)
    state = _make_state(g, 0)
    handle_recv_nbr_list(state, _nbr_list(g, 1, 0))
    handle_recv_nbr_list(state, _nbr_list(g, 2, 0))
    out = handle_recv_nbr_list(state, _nbr_list(g, 3, 0))
    leader = [m for m in out if not m.payload["relay"]]
    relay = [m for m in out if m.payload["relay"]]
    assert _sends(leader) == {
        1: [Triangle(0, 1, 2), Triangle(0, 1, 3)],
        2: [Triangle(0, 1, 2), Triangle(0, 2, 3)],
        3: [Triangle(0, 1, 3), Triangle(0, 2, 3)],
    }
    assert _sends(relay) == {1: [Triangle(0, 2, 3)], 2: [Triangle(0, 1, 3)], 3: [Triangle(0, 1, 2)]}
    assert all(len(r.nbr_triangles) == 2 for r in state.trngls.values())


def test_k4_second_node_leads_the_triangle_without_zero():
    g = _make_k(4)
    state = _make_state(g, 1)
    handle_recv_nbr_list(state, _nbr_list(g, 2, 1))
    assert set(state.trngls) == {Triangle(1, 2, 3)}
    assert Triangle(0, 1, 2) in state.member_of


def test_path_leaf_finds_nothing():
    g = Graph(range(3), [(0, 1), (1, 2)])
    state = _make_state(g, 0)
    assert handle_recv_nbr_list(state, _nbr_list(g, 1, 0)) == []
    assert state.trngls == {}
    assert state.member_of == set()


def test_member_relays_own_triangle_past_the_other_members():
    g = Graph(range(4), [(0, 1), (0, 2), (1, 2), (1, 3)])
    state = _make_state(g, 1)
    for u in (0, 2, 3):
        assert handle_recv_nbr_list(state, _nbr_list(g, u, 1)) == []
    out = handle_recv_triangle(state, _batch(0, 1, [Triangle(0, 1, 2)], relay=False))
    assert _sends(out) == {3: [Triangle(0, 1, 2)]}
    assert handle_recv_triangle(state, _batch(0, 1, [Triangle(0, 1, 2)], relay=False)) == []


def test_member_waits_for_every_leader():
    g = _make_k(4)
    state = _make_state(g, 3)
    for u in (0, 1, 2):
        assert handle_recv_nbr_list(state, _nbr_list(g, u, 3)) == []
    assert handle_recv_triangle(state, _batch(0, 3, [Triangle(0, 1, 3), Triangle(0, 2, 3)], relay=False)) == []
    out = handle_recv_triangle(state, _batch(1, 3, [Triangle(1, 2, 3)], relay=False))
    assert _sends(out) == {0: [Triangle(1, 2, 3)], 1: [Triangle(0, 2, 3)], 2: [Triangle(0, 1, 3)]}


def test_non_member_records_edges_and_stays_quiet():
    g = Graph(range(4), [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    state = _make_state(g, 0)
    for u in (1, 2):
        handle_recv_nbr_list(state, _nbr_list(g, u, 0))
    out = handle_recv_triangle(state, _batch(2, 0, [Triangle(1, 2, 3)], relay=True))
    assert out == []
    assert state.trngls[Triangle(0, 1, 2)].nbr_triangles == {Triangle(1, 2, 3)}


def test_batch_before_own_record_is_kept():
    g = Graph(range(4), [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    state = _make_state(g, 0)
    handle_recv_triangle(state, _batch(1, 0, [Triangle(1, 2, 3)], relay=True))
    for u in (1, 2):
        handle_recv_nbr_list(state, _nbr_list(g, u, 0))
    assert state.trngls[Triangle(0, 1, 2)].nbr_triangles == {Triangle(1, 2, 3)}


# ---------------------------------------------------------------------------
# Whole phase
# ---------------------------------------------------------------------------

def test_k4_phase_one():
    g = _make_k(4)
    sim = run_phase1(g)
    assert sum(len(s.trngls) for s in sim.net.states.values()) == 4
    assert sim.ftg == build_ftg(g)
    assert sim.ftg.num_edges == 6
    assert all(c <= 9 for c in sim.phase1_clocks.values())


def test_triangle_free_sends_no_triangles():
    g = Graph(range(5), [(i, (i + 1) % 5) for i in range(5)])
    sim = run_phase1(g)
    assert len(sim.ftg) == 0
    assert sim.net.per_phase["phase1"]["messages"] == 2 * g.num_edges


@pytest.mark.parametrize("scheduler_seed", range(10))
def test_cycle_ftg_same_for_every_seed(scheduler_seed):
    g, s = gen_triangle_cycle(6)
    ftg = run_phase1(g, scheduler_seed).ftg
    assert ftg == build_ftg(g)
    assert nx.is_isomorphic(ftg.to_networkx(), nx.cycle_graph(6))


def test_empty_graph():
    sim = run_phase1(Graph([], []))
    assert len(sim.ftg) == 0
    assert sim.net.messages == 0


@st.composite
def random_graphs(draw, max_nodes=14):
    n = draw(st.integers(min_value=3, max_value=max_nodes))
    p = draw(st.floats(min_value=0.2, max_value=0.6))
    seed = draw(st.integers(min_value=0, max_value=2**20))
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed)), seed


@settings(max_examples=60, deadline=None)
@given(random_graphs())
def test_distributed_ftg_matches_central(case):
    g, seed = case
    sim = run_phase1(g, scheduler_seed=seed)
    assert sim.ftg == build_ftg(g)
    for v in g.nodes:
        assert sim.phase1_clocks[v] <= 3 * g.degree(v)
        assert all(r.triangle.leader == v for r in sim.net[v].trngls.values())
