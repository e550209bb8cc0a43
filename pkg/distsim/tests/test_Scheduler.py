from unittest.mock import MagicMock

import pytest

from distsim import EventCeilingExceeded, Message, Network, NotOneHop, Scheduler, SignalKind
from graphModel import Graph


def _make_msg(src: int, dst: int, i: int = 0) -> Message:
    return Message(SignalKind.MARK, src, dst, {"i": i})


def _make_network(g: Graph, seed: int = 0) -> tuple[Network, MagicMock]:
    net = Network(g, Scheduler(seed, g.num_edges))
    phase = MagicMock()
    phase.name = "test"
    phase.handle.return_value = []
    net.begin_phase(phase)
    return net, phase


# ---------------------------------------------------------------------------
# Scheduler
# ---------------------------------------------------------------------------

def test_fifo_on_each_channel():
    s = Scheduler(rng_seed=7)
    for i in range(5):
        s.push(_make_msg(0, 1, i))
        s.push(_make_msg(1, 0, i))
        s.push(_make_msg(2, 1, i))
    seen: dict[tuple[int, int], list[int]] = {}
    while not s.empty():
        m = s.pop()
        seen.setdefault((m.src, m.dst), []).append(m.payload["i"])
    assert seen == {(0, 1): list(range(5)), (1, 0): list(range(5)), (2, 1): list(range(5))}


def test_same_seed_same_interleaving():
    def order(seed):
        s = Scheduler(rng_seed=seed)
        for ch in range(6):
            for i in range(3):
                s.push(_make_msg(ch, ch + 1, i))
        return [(m.src, m.payload["i"]) for m in iter(lambda: None if s.empty() else s.pop(), None)]

    assert order(3) == order(3)
    assert sorted(order(3)) == sorted(order(4))


def test_drain_counts_events():
    s = Scheduler()
    for i in range(4):
        s.push(_make_msg(0, 1, i))
    delivered = []
    assert s.drain(delivered.append, wave="w") == 4
    assert len(delivered) == 4
    assert s.events == 4
    assert s.empty()


def test_ceiling_trips_on_endless_wave():
    s = Scheduler(num_edges=1, event_factor=2, event_slack=3)
    s.push(_make_msg(0, 1))
    with pytest.raises(EventCeilingExceeded, match="did not quiesce within 5 events"):
        s.drain(lambda m: s.push(_make_msg(m.dst, m.src)), wave="loop")


def test_ceiling_from_environment(monkeypatch):
    monkeypatch.setenv("TRIBAR_EVENT_FACTOR", "3")
    monkeypatch.setenv("TRIBAR_EVENT_SLACK", "4")
    assert Scheduler(num_edges=2).ceiling == 10
    assert Scheduler(num_edges=2, event_factor=1, event_slack=0).ceiling == 2


def test_default_ceiling():
    assert Scheduler(num_edges=6).ceiling == 50 * 6 + 100


def test_pop_from_empty():
    with pytest.raises(IndexError):
        Scheduler().pop()


# ---------------------------------------------------------------------------
# Network routing
# ---------------------------------------------------------------------------

def test_direct_message_ticks_receiver():
    net, phase = _make_network(Graph(range(2), [(0, 1)]))
    net.run_wave("w", [_make_msg(0, 1)])
    assert net.messages == 1
    assert net[0].sent == 1
    assert net[1].received == 1
    assert net[1].clock.read() == 1
    phase.handle.assert_called_once()


def test_two_hop_message_goes_through_lowest_common_neighbour():
    g = Graph(range(4), [(0, 2), (0, 3), (2, 1), (3, 1)])
    net, phase = _make_network(g)
    net.run_wave("w", [_make_msg(0, 1)])
    assert net.messages == 2
    assert net[2].received == 1 and net[3].received == 0
    assert net[1].received == 1
    (state, msg), = [c.args[1:] for c in phase.handle.call_args_list]
    assert state.id == 1 and msg.src == 2


def test_no_route_beyond_two_hops():
    net, _ = _make_network(Graph(range(4), [(0, 1), (1, 2), (2, 3)]))
    with pytest.raises(NotOneHop, match="from 0 to 3"):
        net.post(_make_msg(0, 3))


def test_local_message_is_not_counted():
    net, phase = _make_network(Graph(range(2), [(0, 1)]))
    net.run_wave("w", [_make_msg(0, 0)])
    assert net.messages == 0
    assert net[0].clock.read() == 0
    assert net.per_phase["test"] == {"messages": 0, "events": 1}
    phase.handle.assert_called_once()


def test_trace_lines():
    g = Graph(range(2), [(0, 1)])
    net = Network(g, Scheduler(0, 1), trace=True)
    phase = MagicMock()
    phase.name = "test"
    phase.handle.return_value = []
    net.begin_phase(phase)
    net.run_wave("w", [Message(SignalKind.NBR_LIST, 0, 1, {"nbrs": [1]})])
    assert net.trace == ["1 NBR_LIST 0 1 nbrs=[1]"]
