from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Optional

from graphModel import Graph

from .Scheduler import Scheduler
from .errors import NotOneHop
from .struct.Message import Message
from .struct.NodeState import NodeState

if TYPE_CHECKING:
    from .Phase import Phase

logger = logging.getLogger("distsim.network")


class Network:
    """Simulated nodes of a graph wired to a scheduler.

    Handlers hand their outgoing messages to `post`, which routes them over
    one edge, or over two through the lowest-id common neighbour. A message
    a node sends to itself stays local: it is queued for ordering but is
    neither counted nor ticks a clock.
    """

    def __init__(self, g: Graph, scheduler: Scheduler, trace: bool = False):
        self.graph = g
        self.scheduler = scheduler
        self.states: dict[int, NodeState] = {v: NodeState(id=v, nbrs=g.neighbors(v)) for v in g.nodes}
        self.trace_enabled = trace
        self.trace: list[str] = []
        self.messages = 0
        self.phase: Optional["Phase"] = None
        self.per_phase: dict[str, dict[str, int]] = {}

    def __getitem__(self, node: int) -> NodeState:
        return self.states[node]

    def post(self, msg: Message) -> None:
        sender = self.states[msg.src]
        msg.send_clock = sender.clock.read()
        if msg.src == msg.dst:
            self.scheduler.push(msg)
            return
        if not self.graph.has_edge(msg.src, msg.dst):
            relay = self.relay_for(msg.src, msg.dst)
            logger.debug("Relaying %s %d->%d via %d", msg.kind, msg.src, msg.dst, relay)
            msg.relay_to = msg.dst
            msg.dst = relay
        sender.sent += 1
        self.messages += 1
        self._count("messages")
        self.scheduler.push(msg)

    def post_all(self, msgs) -> None:
        for m in msgs:
            self.post(m)

    def relay_for(self, src: int, dst: int) -> int:
        common = self.graph.common_neighbors(src, dst)
        if not common:
            raise NotOneHop(src, dst)
        return min(common)

    def deliver(self, msg: Message) -> None:
        state = self.states[msg.dst]
        self._count("events")
        if msg.src != msg.dst:
            state.clock.tick()
            state.received += 1
            if self.trace_enabled:
                self.trace.append(msg.trace_line(state.clock.read()))
        if msg.relay_to is not None and msg.relay_to != msg.dst:
            self.post(
                Message(msg.kind, msg.dst, msg.relay_to, msg.payload, delete_flag=msg.delete_flag)
            )
            return
        self.post_all(self.phase.handle(self, state, msg))

    def run_wave(self, name: str, kickoff: list[Message]) -> int:
        self.post_all(kickoff)
        return self.scheduler.drain(self.deliver, wave=name)

    def begin_phase(self, phase: "Phase") -> None:
        self.phase = phase
        self.per_phase.setdefault(phase.name, {"messages": 0, "events": 0})

    @property
    def max_clock(self) -> int:
        return max((s.clock.read() for s in self.states.values()), default=0)

    # -- Internal -------------------------------------------------------------

    def _count(self, key: str) -> None:
        if self.phase is not None:
            self.per_phase[self.phase.name][key] += 1
