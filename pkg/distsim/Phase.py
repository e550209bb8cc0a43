from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Callable, Iterable

from .struct.Message import Message
from .struct.NodeState import NodeState

if TYPE_CHECKING:
    from .Network import Network

logger = logging.getLogger("distsim.phase")

Kickoff = Callable[["Network"], list[Message]]


class Phase(ABC):
    """One phase of the protocol: a sequence of waves, each run to quiescence."""

    @property
    @abstractmethod
    def name(self) -> str:
        ...

    @abstractmethod
    def waves(self, net: "Network") -> Iterable[tuple[str, Kickoff]]:
        """Named kickoff functions, run in order with a drain after each.

        Phases whose sub-waves depend on what earlier ones left in the
        network yield them lazily.
        """
        ...

    @abstractmethod
    def handle(self, net: "Network", state: NodeState, msg: Message) -> list[Message]:
        """Process one delivered message at `state` and return what it sends."""
        ...

    def run(self, net: "Network") -> None:
        net.begin_phase(self)
        for wave, kickoff in self.waves(net):
            events = net.run_wave(f"{self.name}:{wave}", kickoff(net))
            logger.debug("Phase %s wave %s took %d events", self.name, wave, events)
        totals = net.per_phase[self.name]
        logger.info("Phase %s done messages=%d events=%d", self.name, totals["messages"], totals["events"])
