from __future__ import annotations

import logging
import os
import random
from collections import deque
from typing import Callable, Optional

from .errors import EventCeilingExceeded
from .struct.Message import Message

logger = logging.getLogger("distsim.scheduler")

DEFAULT_EVENT_FACTOR = 50
DEFAULT_EVENT_SLACK = 100

Channel = tuple[int, int]


class Scheduler:
    """Reliable delivery queue: FIFO on every directed channel, seeded random choice across channels.

    Every posted message is delivered exactly once. A drain stops at
    quiescence and fails once it has delivered more than
    `factor * num_edges + slack` events.
    """

    def __init__(
        self,
        rng_seed: int = 0,
        num_edges: int = 0,
        event_factor: Optional[int] = None,
        event_slack: Optional[int] = None,
    ):
        self.rng = random.Random(rng_seed)
        self.event_factor = event_factor if event_factor is not None else int(
            os.environ.get("TRIBAR_EVENT_FACTOR", DEFAULT_EVENT_FACTOR)
        )
        self.event_slack = event_slack if event_slack is not None else int(
            os.environ.get("TRIBAR_EVENT_SLACK", DEFAULT_EVENT_SLACK)
        )
        self.num_edges = num_edges
        self.events = 0
        self._queues: dict[Channel, deque[Message]] = {}
        self._active: list[Channel] = []
        self._slot: dict[Channel, int] = {}

    @property
    def ceiling(self) -> int:
        return self.event_factor * self.num_edges + self.event_slack

    def __len__(self) -> int:
        return sum(len(q) for q in self._queues.values())

    def empty(self) -> bool:
        return not self._active

    def push(self, msg: Message) -> None:
        ch = (msg.src, msg.dst)
        q = self._queues.setdefault(ch, deque())
        q.append(msg)
        if ch not in self._slot:
            self._slot[ch] = len(self._active)
            self._active.append(ch)

    def pop(self) -> Message:
        if not self._active:
            raise IndexError("pop from an empty scheduler")
        ch = self._active[self.rng.randrange(len(self._active))]
        q = self._queues[ch]
        msg = q.popleft()
        if not q:
            self._deactivate(ch)
        return msg

    def drain(self, deliver: Callable[[Message], None], wave: str = "") -> int:
        """Deliver until quiescent; return the number of events this drain took."""
        ceiling = self.ceiling
        count = 0
        while self._active:
            if count >= ceiling:
                raise EventCeilingExceeded(wave, ceiling)
            deliver(self.pop())
            count += 1
        self.events += count
        logger.debug("Drained wave=%s events=%d ceiling=%d", wave, count, ceiling)
        return count

    # -- Internal -------------------------------------------------------------

    def _deactivate(self, ch: Channel) -> None:
        i = self._slot.pop(ch)
        last = self._active.pop()
        if last != ch:
            self._active[i] = last
            self._slot[last] = i
        del self._queues[ch]
