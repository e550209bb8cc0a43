"""Phase I: every leader learns the flip-triangle neighbours of the triangles it leads.

Nodes swap neighbour lists, leaders announce their triangles to the other
members, and members relay the triangles they belong to one hop further.
A node hears at most three messages from each neighbour: its list, one
leader batch and one relay batch.
"""
from __future__ import annotations

import logging

from graphModel import Triangle, shared_edge

from ..Phase import Kickoff, Phase
from ..SignalKind import SignalKind
from ..struct.Message import Message
from ..struct.NodeState import NodeState
from ..struct.TriangleRecord import TriangleRecord

logger = logging.getLogger("distsim.phase1")


def _link(rec: TriangleRecord, others) -> None:
    for t in others:
        if t != rec.triangle and shared_edge(rec.triangle, t) is not None:
            rec.nbr_triangles.add(t)


def _expected_leaders(state: NodeState) -> set[int]:
    return {t.leader for t in state.member_of if t.leader != state.id}


def _leader_batches(state: NodeState) -> list[Message]:
    members = sorted({n for t in state.trngls for n in t if n != state.id})
    out = []
    for w in members:
        batch = sorted(t for t in state.trngls if w in t)
        out.append(Message(SignalKind.TRIANGLE, state.id, w, {"triangles": batch, "relay": False}))
    return out


def _relay_batches(state: NodeState) -> list[Message]:
    if state.relayed or not state.lists_complete():
        return []
    if not _expected_leaders(state) <= state.leader_batches:
        return []
    state.relayed = True
    out = []
    for z in state.nbrs:
        batch = sorted(t for t in state.member_of if z not in t)
        if batch:
            out.append(Message(SignalKind.TRIANGLE, state.id, z, {"triangles": batch, "relay": True}))
    return out


def handle_recv_nbr_list(state: NodeState, msg: Message) -> list[Message]:
    """Find the triangles through the sender; keep the ones this node leads."""
    u = msg.src
    nbrs_u = frozenset(msg.payload["nbrs"])
    state.nbr_lists[u] = nbrs_u
    for w in sorted(nbrs_u.intersection(state.nbrs)):
        t = Triangle.of(state.id, u, w)
        state.member_of.add(t)
        if t.leader != state.id or t in state.trngls:
            continue
        rec = TriangleRecord(t)
        _link(rec, state.heard_triangles)
        for other in state.trngls.values():
            if shared_edge(t, other.triangle) is not None:
                rec.nbr_triangles.add(other.triangle)
                other.nbr_triangles.add(t)
        state.trngls[t] = rec
        logger.debug("Node %d leads %s", state.id, t)
    if not state.lists_complete():
        return []
    return _leader_batches(state) + _relay_batches(state)


def handle_recv_triangle(state: NodeState, msg: Message) -> list[Message]:
    """Record flip edges against the received triangles; relay once every leader has reported."""
    tris = msg.payload["triangles"]
    state.heard_triangles.update(tris)
    for rec in state.trngls.values():
        _link(rec, tris)
    if msg.payload.get("relay"):
        return []
    state.leader_batches.add(msg.src)
    return _relay_batches(state)


class FtgPhase(Phase):
    name = "phase1"

    def waves(self, net) -> list[tuple[str, Kickoff]]:
        return [("nbr_list", self._kickoff)]

    def handle(self, net, state: NodeState, msg: Message) -> list[Message]:
        if msg.kind == SignalKind.NBR_LIST:
            return handle_recv_nbr_list(state, msg)
        if msg.kind == SignalKind.TRIANGLE:
            return handle_recv_triangle(state, msg)
        raise ValueError(f"Phase I cannot handle signal {msg.kind!r}")

    @staticmethod
    def _kickoff(net) -> list[Message]:
        out = []
        for v, state in sorted(net.states.items()):
            for u in state.nbrs:
                out.append(Message(SignalKind.NBR_LIST, v, u, {"nbrs": list(state.nbrs)}))
        return out
