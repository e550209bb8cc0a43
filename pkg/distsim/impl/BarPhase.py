"""Phase II: flip-triangle tree, base cycles and elementary bars.

The tree grows one breadth-first layer per sub-wave. A triangle reached in
layer k keeps the smallest sender as its parent, registers with it as a
CHILD, visits its flip neighbours for layer k+1 and sends VISIT_NODE to its
pendant. A settled triangle that is visited again closes a base cycle.
Graph nodes then hear the triangles whose pendant they are and each other,
which yields circuit, bridge and net witnesses.

Every witness id climbs the tree one depth per sub-wave, its branches
merging where they meet. The meeting triangle judges the candidate from
the paths it received and the verdict travels back down the same
branches, a rejection as a delete. Leaders finally tell the members of
their triangles which bars they belong to; hubs do the same for the
wheels around them.
"""
from __future__ import annotations

import bisect
import logging
from functools import partial
from itertools import islice
from typing import Iterator, Optional

import networkx as nx

from barClasses import (
    BarClassError,
    ClassLabel,
    TriangleStream,
    classify_stream,
    is_triangle_bridge,
    is_triangle_circuit,
    is_triangle_cycle,
    spanning_reduction,
    verify_net,
)
from graphModel import Graph, Triangle, shared_edge

from ..Outbox import Outbox
from ..Phase import Kickoff, Phase
from ..SignalKind import SignalKind
from ..Status import Status
from ..struct.BarId import BarId
from ..struct.ElementaryBar import ElementaryBar
from ..struct.Message import Message
from ..struct.NodeState import NodeState
from ..struct.TriangleRecord import TriangleRecord

logger = logging.getLogger("distsim.phase2")

WHEEL_LIMIT = 32


def _insert(lst: list[BarId], bar: BarId) -> bool:
    if bar in lst:
        return False
    lst.append(bar)
    return True


def _records(net, depth: Optional[int] = None) -> Iterator[tuple[int, TriangleRecord]]:
    for v, state in sorted(net.states.items()):
        for _, rec in sorted(state.trngls.items()):
            if depth is None or rec.depth == depth:
                yield v, rec


def _max_depth(net) -> int:
    return max((rec.depth for _, rec in _records(net) if rec.visited), default=-1)


def _pendants(rec: TriangleRecord) -> tuple[int, ...]:
    """Nodes a triangle visits: all three at the root, else the one its parent lacks."""
    if rec.parent is None:
        return rec.triangle.nodes
    return (rec.triangle.opposite(shared_edge(rec.triangle, rec.parent)),)


def _install(state: NodeState, bar: BarId, nodes: frozenset[int]) -> bool:
    """Record membership of `bar` unless a bar with the same nodes is already known."""
    if bar in state.bars or nodes in state.bars.values():
        return False
    state.bars[bar] = nodes
    _insert(state.element_lst, bar)
    return True


def _settle(rec: TriangleRecord, bar: BarId, found: Optional[ElementaryBar]) -> None:
    rec.outcome[bar] = found
    if found is not None and rec.triangle in found.triangles:
        rec.bars[bar] = found.nodes
    elif bar in rec.element_lst:
        rec.element_lst.remove(bar)


def _link_graph(node: int, tris: list[Triangle]) -> nx.Graph:
    """Triangles at `node`, joined when they share an edge through `node`."""
    link = nx.Graph()
    link.add_nodes_from(tris)
    by_spoke: dict[int, list[Triangle]] = {}
    for t in tris:
        for other in t.others(node):
            by_spoke.setdefault(other, []).append(t)
    for group in by_spoke.values():
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                link.add_edge(group[i], group[j])
    return link


# ---------------------------------------------------------------------------
# Judging a candidate where its branches meet
# ---------------------------------------------------------------------------

def _ring_bar(bar: BarId, ring: list[Triangle]) -> Optional[ElementaryBar]:
    if not is_triangle_cycle(ring):
        return None
    local = TriangleStream.of(ring).to_graph()
    try:
        spanning_reduction(local, ring)
    except BarClassError as e:
        logger.debug("Bar %s rejected: %s", bar, e)
        return None
    return ElementaryBar(bar, classify_stream(local, ring), tuple(ring), frozenset(local.nodes))


def _pair_bar(rec: TriangleRecord, bar: BarId) -> Optional[ElementaryBar]:
    first, second = rec.branches[bar][:2]
    path = list(first) + list(reversed(second[:-1]))
    nodes = frozenset(n for t in path for n in t)
    if bar.kind == "cycle":
        return _ring_bar(bar, path)
    if bar.kind == "circuit" and is_triangle_circuit(path, bar.nodes[0]):
        return ElementaryBar(bar, ClassLabel.CIRCUIT, tuple(path), nodes)
    if bar.kind == "bridge" and len(path) >= 2:
        local = TriangleStream.of(path).to_graph().with_edges([bar.nodes])
        if is_triangle_bridge(local, path, bar.nodes):
            return ElementaryBar(bar, ClassLabel.BRIDGE, tuple(path), nodes)
    return None


def _spanned(rec: TriangleRecord, bar: BarId) -> set[Triangle]:
    """Smallest subtree holding every branch start, cut from the paths that reached the root."""
    below: dict[Triangle, set[Triangle]] = {}
    starts = set()
    for branch in rec.branches[bar]:
        starts.add(branch[0])
        for lo, hi in zip(branch, branch[1:]):
            below.setdefault(hi, set()).add(lo)
    top = rec.triangle
    while top not in starts and len(below.get(top, ())) == 1:
        (top,) = below[top]
    tris: set[Triangle] = set()
    stack = [top]
    while stack:
        t = stack.pop()
        tris.add(t)
        stack.extend(below.get(t, ()))
    return tris


def _net_bar(rec: TriangleRecord, bar: BarId) -> Optional[ElementaryBar]:
    tris = _spanned(rec, bar)
    ext = rec.ext.get(bar, {})
    edges = [e for t in tris for e in t.edges()]
    edges += [(v, n) for v, nbrs in ext.items() for n in nbrs]
    verdict = verify_net(Graph((), edges), tris, sorted(ext))
    if not verdict.ok:
        logger.debug("Net %s rejected: %s", bar, verdict.reason)
        return None
    label = ClassLabel.NOTCH if len(ext) == 1 else ClassLabel.NET
    nodes = frozenset(n for t in tris for n in t) | frozenset(ext)
    return ElementaryBar(bar, label, tuple(sorted(tris)), nodes)


def _met(rec: TriangleRecord, bar: BarId) -> bool:
    if bar.kind == "net":
        return rec.parent is None
    return len(rec.branches[bar]) >= 2


def _judge(rec: TriangleRecord, bar: BarId) -> Optional[ElementaryBar]:
    found = _net_bar(rec, bar) if bar.kind == "net" else _pair_bar(rec, bar)
    if found is not None:
        logger.debug("Admitted %s %s at %s nodes=%s", found.label.value, bar, rec.triangle, sorted(found.nodes))
    return found


def _wheels(state: NodeState) -> list[tuple[BarId, ElementaryBar]]:
    """Chordless rings of triangles around this node, known from Phase I alone."""
    link = _link_graph(state.id, sorted(state.member_of))
    out = []
    for ring in islice(nx.chordless_cycles(link), WHEEL_LIMIT):
        if len(ring) < 3:
            continue
        bar = BarId.wheel(state.id, ring)
        found = _ring_bar(bar, list(bar.triangles))
        if found is not None:
            out.append((bar, found))
    return out


# ---------------------------------------------------------------------------
# Handlers
# ---------------------------------------------------------------------------

def handle_visit_triangle(state: NodeState, msg: Message) -> list[Message]:
    """Hear a batch of visits from one layer.

    An unvisited or still forming triangle keeps the smallest sender as its
    parent. A triangle settled in an earlier layer, or in the same layer
    when it is the larger end, was visited again: it pushes the closing
    pair and sends CYCLE to the sender.
    """
    box = Outbox()
    for e in msg.payload["batch"]:
        rec = state.trngls[e["tri"]]
        sender, depth = e["from"], e["depth"]
        rec.hear_lst.append(sender)
        if rec.depth is None or rec.depth == depth:
            rec.offer(depth, sender)
            continue
        if rec.depth == depth - 1 and rec.triangle < sender:
            continue
        bar = BarId.closing(rec.triangle, sender)
        if not _insert(rec.element_lst, bar):
            continue
        rec.start_branch(bar)
        logger.debug("Base cycle %s closed at %s", bar, rec.triangle)
        box.add(SignalKind.CYCLE, state.id, sender.leader, {"op": "start", "tri": sender, "bar": bar})
    return box.messages()


def handle_child(state: NodeState, msg: Message) -> list[Message]:
    for e in msg.payload["batch"]:
        rec = state.trngls[e["tri"]]
        if e["child"] not in rec.children:
            bisect.insort(rec.children, e["child"])
    return []


def handle_visit_node(state: NodeState, msg: Message) -> list[Message]:
    """A graph node hears from a visiting triangle or from a neighbouring node."""
    box = Outbox()
    for e in msg.payload["batch"]:
        if "tri" in e:
            state.hear_lst.append(e["tri"])
            state.pendant = True
            continue
        sender = e["node"]
        if e.get("via") == state.id and sender not in state.children:
            state.children.append(sender)
        if state.parent is not None:
            if e["extended"] or sender > state.id:
                continue
            if any(sender in t for t in state.member_of):
                continue
            _bridge_witness(state, sender, e["parent"], box)
            continue
        state.anchors[sender] = e["extended"]
    return box.messages()


def _bridge_witness(state: NodeState, sender: int, sender_parent: Triangle, box: Outbox) -> None:
    bar = BarId.bridge(sender, sender_parent, state.id, state.parent)
    if not _insert(state.element_lst, bar):
        return
    logger.debug("Bridge witness %s", bar)
    box.add(SignalKind.CYCLE, state.id, state.parent.leader,
            {"op": "start", "tri": state.parent, "bar": bar, "holder": state.id})
    box.add(SignalKind.CYCLE, state.id, sender, {"op": "bridge", "bar": bar})


def handle_elementary_bars(state: NodeState, msg: Message) -> list[Message]:
    """Start, climb, settle or install bar ids at a triangle or a node."""
    box = Outbox()
    for e in msg.payload["batch"]:
        op = e["op"]
        if op == "start":
            _start(state, e)
        elif op == "climb":
            _climb(state, e)
        elif op == "verdict":
            _verdict(state, e, box)
        elif op == "bridge":
            _node_start(state, e["bar"], box)
        elif op == "net":
            _flood_net(state, e, box)
        elif op == "member":
            _install(state, e["bar"], e["nodes"])
        else:
            raise ValueError(f"Unknown CYCLE entry {op!r}")
    return box.messages()


def _start(state: NodeState, e: dict) -> None:
    rec = state.trngls[e["tri"]]
    bar = e["bar"]
    _insert(rec.element_lst, bar)
    rec.start_branch(bar)
    if e.get("holder") is not None:
        rec.holders.setdefault(bar, set()).add(e["holder"])
    if e.get("ext"):
        rec.ext.setdefault(bar, {}).update(e["ext"])


def _climb(state: NodeState, e: dict) -> None:
    rec = state.trngls[e["tri"]]
    bar = e["bar"]
    if not _insert(rec.element_lst, bar):
        logger.debug("Branches of %s meet at %s", bar, rec.triangle)
    rec.branches.setdefault(bar, []).extend(e["branches"])
    rec.down.setdefault(bar, set()).add(e["child"])
    if e.get("ext"):
        rec.ext.setdefault(bar, {}).update(e["ext"])


def _verdict(state: NodeState, e: dict, box: Outbox) -> None:
    bar, found = e["bar"], e["found"]
    if e.get("tri") is not None:
        _settle(state.trngls[e["tri"]], bar, found)
        return
    if bar in state.settled:
        return
    state.settled.add(bar)
    if found is not None and state.id in found.nodes:
        _install(state, bar, found.nodes)
    elif bar in state.element_lst:
        state.element_lst.remove(bar)
    for w in sorted(state.net_from.get(bar, ())):
        box.add(SignalKind.CYCLE, state.id, w, {"op": "verdict", "bar": bar, "found": found}, delete=found is None)


def _node_start(state: NodeState, bar: BarId, box: Outbox, ext: Optional[dict] = None) -> None:
    """A node-held id goes on to the node's parent triangle."""
    if state.parent is None:
        return
    entry = {"op": "start", "tri": state.parent, "bar": bar, "holder": state.id}
    if ext:
        entry["ext"] = ext
    _insert(state.element_lst, bar)
    box.add(SignalKind.CYCLE, state.id, state.parent.leader, entry)


def _flood_net(state: NodeState, e: dict, box: Outbox) -> None:
    """Pass a net id down to every anchor; pendants hand it to their parent triangle."""
    bar = e["bar"]
    state.net_from.setdefault(bar, set()).add(e["from"])
    if bar in state.element_lst:
        return
    ext = dict(e["ext"])
    if state.extended:
        state.element_lst.append(bar)
        ext[state.id] = state.nbrs
        for a in sorted(state.anchors):
            if a != e["from"]:
                box.add(SignalKind.CYCLE, state.id, a, {"op": "net", "bar": bar, "from": state.id, "ext": ext})
        return
    _node_start(state, bar, box, ext)


class BarPhase(Phase):
    """Phase II started from the seed triangle's leader."""

    name = "phase2"

    def __init__(self, seed: Triangle):
        self.seed = seed

    def waves(self, net) -> Iterator[tuple[str, Kickoff]]:
        k = 0
        while k == 0 or any(True for _ in _records(net, k)):
            yield f"visit:{k}", partial(self._kickoff_visit, k)
            k += 1
        yield "node:0", self._kickoff_nodes
        r = 1
        while True:
            msgs = self._kickoff_extend(net)
            if not msgs:
                break
            yield f"node:{r}", lambda _net, msgs=msgs: msgs
            r += 1
        deepest = _max_depth(net)
        for d in range(deepest, -1, -1):
            yield f"climb:{d}", partial(self._kickoff_climb, d)
        for d in range(deepest + 1):
            yield f"verdict:{d}", partial(self._kickoff_verdict, d)
        yield "member", self._kickoff_member

    def handle(self, net, state: NodeState, msg: Message) -> list[Message]:
        if msg.kind == SignalKind.VISIT:
            return handle_visit_triangle(state, msg)
        if msg.kind == SignalKind.CHILD:
            return handle_child(state, msg)
        if msg.kind == SignalKind.VISIT_NODE:
            return handle_visit_node(state, msg)
        if msg.kind == SignalKind.CYCLE:
            return handle_elementary_bars(state, msg)
        raise ValueError(f"Phase II cannot handle signal {msg.kind!r}")

    # -- Waves ----------------------------------------------------------------

    def _kickoff_visit(self, k: int, net) -> list[Message]:
        if k == 0:
            net.states[self.seed.leader].trngls[self.seed].offer(0, None)
        box = Outbox()
        for v, rec in _records(net, k):
            t = rec.triangle
            if rec.parent is not None:
                box.add(SignalKind.CHILD, v, rec.parent.leader, {"tri": rec.parent, "child": t})
            for n in sorted(rec.nbr_triangles):
                if n != rec.parent:
                    box.add(SignalKind.VISIT, v, n.leader, {"tri": n, "from": t, "depth": k + 1})
            for s in _pendants(rec):
                box.add(SignalKind.VISIT_NODE, v, s, {"tri": t})
        return box.messages()

    @staticmethod
    def _kickoff_nodes(net) -> list[Message]:
        """Visited nodes fix their parent, name circuits through themselves and call on their neighbours."""
        box = Outbox()
        for v, state in sorted(net.states.items()):
            if not state.hear_lst:
                continue
            state.parent = min(state.hear_lst)
            state.status = Status.VISITED
            for tj in sorted(set(state.hear_lst) - {state.parent}):
                bar = BarId.circuit(tj, v, state.parent)
                if _insert(state.element_lst, bar):
                    for t in (tj, state.parent):
                        box.add(SignalKind.CYCLE, v, t.leader, {"op": "start", "tri": t, "bar": bar, "holder": v})
            entry = {"node": v, "parent": state.parent, "extended": False}
            for n in state.nbrs:
                if n not in state.parent:
                    box.add(SignalKind.VISIT_NODE, v, n, entry)
        return box.messages()

    @staticmethod
    def _kickoff_extend(net) -> list[Message]:
        """Unvisited nodes that heard three anchors turn extended and flood a net id to them."""
        box = Outbox()
        for v, state in sorted(net.states.items()):
            if state.visited or len(state.anchors) < 3:
                continue
            if not state.extended:
                state.mark = "extended"
                logger.debug("Node %d extended by %s", v, sorted(state.anchors))
                entry = {"node": v, "parent": None, "extended": True, "via": min(state.anchors)}
                for n in state.nbrs:
                    box.add(SignalKind.VISIT_NODE, v, n, entry)
            if len(state.anchors) > state.net_size:
                state.net_size = len(state.anchors)
                bar = BarId.net(v, state.anchors)
                _insert(state.element_lst, bar)
                ext = {v: state.nbrs}
                for a in sorted(state.anchors):
                    box.add(SignalKind.CYCLE, v, a, {"op": "net", "bar": bar, "from": v, "ext": ext})
        return box.messages()

    @staticmethod
    def _kickoff_climb(depth: int, net) -> list[Message]:
        box = Outbox()
        for v, rec in _records(net, depth):
            for bar in sorted(rec.branches):
                if bar in rec.climbed:
                    continue
                rec.climbed.add(bar)
                if _met(rec, bar):
                    found = _judge(rec, bar)
                    rec.judged[bar] = found
                    _settle(rec, bar, found)
                    continue
                if rec.parent is None:
                    logger.warning("Bar %s reached the root on a single branch", bar)
                    _settle(rec, bar, None)
                    continue
                box.add(SignalKind.CYCLE, v, rec.parent.leader, {
                    "op": "climb",
                    "tri": rec.parent,
                    "child": rec.triangle,
                    "bar": bar,
                    "branches": [b + (rec.parent,) for b in rec.branches[bar]],
                    "ext": rec.ext.get(bar, {}),
                })
        return box.messages()

    @staticmethod
    def _kickoff_verdict(depth: int, net) -> list[Message]:
        box = Outbox()
        for v, rec in _records(net, depth):
            for bar in sorted(rec.outcome):
                if bar in rec.passed:
                    continue
                rec.passed.add(bar)
                found = rec.outcome[bar]
                entry = {"op": "verdict", "bar": bar, "found": found}
                for child in sorted(rec.down.get(bar, ())):
                    box.add(SignalKind.CYCLE, v, child.leader, {**entry, "tri": child}, delete=found is None)
                for h in sorted(rec.holders.get(bar, ())):
                    box.add(SignalKind.CYCLE, v, h, entry, delete=found is None)
        return box.messages()

    @staticmethod
    def _kickoff_member(net) -> list[Message]:
        """Leaders tell the members of their triangles, hubs the rims of their wheels."""
        updates: dict[tuple[int, int], dict[BarId, frozenset[int]]] = {}
        for v, state in sorted(net.states.items()):
            for t, rec in sorted(state.trngls.items()):
                for bar, nodes in rec.bars.items():
                    for n in t:
                        updates.setdefault((v, n), {})[bar] = nodes
            if state.parent is None:
                continue
            for bar, found in _wheels(state):
                state.wheels[bar] = found
                for n in found.nodes:
                    updates.setdefault((v, n), {})[bar] = found.nodes
        box = Outbox()
        for (v, n), bars in sorted(updates.items()):
            for bar, nodes in sorted(bars.items()):
                box.add(SignalKind.CYCLE, v, n, {"op": "member", "bar": bar, "nodes": nodes})
        return box.messages()
