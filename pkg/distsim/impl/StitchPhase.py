"""Phase III: grow the localizable set from the seed triangle.

Nodes exchange news in rounds, at most one STITCH message per neighbour
per round. A node announces once that it has joined. For every bar it
belongs to it passes the joined members it knows, up to three, to the
bar's members among its neighbours whenever that count grows. A node
joins once three neighbours have joined or once it knows three joined
members of one of its bars. After the last round a MARK flood from the
seed leader over joined nodes sets their status to localizable.
"""
from __future__ import annotations

import logging
from typing import Iterable, Iterator

from graphModel import Triangle

from ..Outbox import Outbox
from ..Phase import Kickoff, Phase
from ..SignalKind import SignalKind
from ..Status import Status
from ..struct.Message import Message
from ..struct.NodeState import NodeState

logger = logging.getLogger("distsim.phase3")

JOIN_THRESHOLD = 3


def _learn(state: NodeState, nodes: frozenset[int], joined: Iterable[int]) -> None:
    state.bar_known.setdefault(nodes, set()).update(joined)


def _ready(state: NodeState) -> bool:
    if len(state.joined_nbrs) >= JOIN_THRESHOLD:
        return True
    return any(len(k) >= JOIN_THRESHOLD for k in state.bar_known.values())


def _join(state: NodeState) -> None:
    state.joined = True
    logger.debug("Node %d joined", state.id)
    for nodes in state.bars.values():
        _learn(state, nodes, [state.id])


def handle_stitch(state: NodeState, msg: Message) -> list[Message]:
    """Take in one round's news from a neighbour; sending waits for the next round."""
    members = set(state.bars.values())
    for e in msg.payload["batch"]:
        if "seed" in e:
            seed = set(e["seed"])
            for nodes in members:
                if seed <= nodes:
                    _learn(state, nodes, seed)
            if not state.joined:
                _join(state)
        elif "joined" in e:
            u = e["joined"]
            state.joined_nbrs.add(u)
            for nodes in members:
                if u in nodes:
                    _learn(state, nodes, [u])
        else:
            nodes = frozenset(e["bar"])
            if nodes in members:
                _learn(state, nodes, e["known"])
    if not state.joined and _ready(state):
        _join(state)
    return []


def handle_mark(state: NodeState, msg: Message) -> list[Message]:
    if not state.joined or state.status == Status.LOCALIZABLE:
        return []
    state.status = Status.LOCALIZABLE
    return [Message(SignalKind.MARK, state.id, n, {}) for n in sorted(state.joined_nbrs) if n != msg.src]


def _kickoff_round(net) -> list[Message]:
    """Every node with news sends it, batched per neighbour."""
    box = Outbox()
    for v, state in sorted(net.states.items()):
        if state.joined and not state.join_sent:
            state.join_sent = True
            for n in state.nbrs:
                box.add(SignalKind.STITCH, v, n, {"joined": v})
        for nodes, known in sorted(state.bar_known.items(), key=lambda kv: sorted(kv[0])):
            level = min(len(known), JOIN_THRESHOLD)
            if level <= state.bar_sent.get(nodes, 0):
                continue
            state.bar_sent[nodes] = level
            entry = {"bar": tuple(sorted(nodes)), "known": tuple(sorted(known)[:JOIN_THRESHOLD])}
            for n in state.nbrs:
                if n in nodes:
                    box.add(SignalKind.STITCH, v, n, entry)
    return box.messages()


class StitchPhase(Phase):
    name = "phase3"

    def __init__(self, seed: Triangle):
        self.seed = seed

    def waves(self, net) -> Iterator[tuple[str, Kickoff]]:
        yield "stitch:0", self._kickoff_seed
        r = 1
        while True:
            msgs = _kickoff_round(net)
            if not msgs:
                break
            yield f"stitch:{r}", lambda _net, msgs=msgs: msgs
            r += 1
        logger.debug("Stitching settled after %d rounds", r - 1)
        yield "mark", self._kickoff_mark

    def handle(self, net, state: NodeState, msg: Message) -> list[Message]:
        if msg.kind == SignalKind.STITCH:
            return handle_stitch(state, msg)
        if msg.kind == SignalKind.MARK:
            return handle_mark(state, msg)
        raise ValueError(f"Phase III cannot handle signal {msg.kind!r}")

    def _kickoff_seed(self, net) -> list[Message]:
        leader = net.states[self.seed.leader]
        seed = set(self.seed.nodes)
        _join(leader)
        for nodes in leader.bars.values():
            if seed <= nodes:
                _learn(leader, nodes, seed)
        box = Outbox()
        for n in self.seed.others(leader.id):
            box.add(SignalKind.STITCH, leader.id, n, {"seed": self.seed.nodes})
        return box.messages()

    def _kickoff_mark(self, net) -> list[Message]:
        state = net.states[self.seed.leader]
        state.status = Status.LOCALIZABLE
        return [Message(SignalKind.MARK, state.id, n, {}) for n in sorted(state.joined_nbrs)]
