from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from ..SignalKind import SignalKind


def _fmt(value: Any) -> str:
    if isinstance(value, dict):
        return "{" + ",".join(f"{k}:{_fmt(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return "[" + ",".join(_fmt(v) for v in items) + "]"
    if isinstance(value, bool):
        return "1" if value else "0"
    return str(value)


@dataclass
class Message:
    """One transmission over a single graph edge.

    Parameters:
        kind: Signal carried.
        src: Sending node.
        dst: Receiving node, always a neighbour of `src`.
        payload: Signal fields, e.g. a neighbour list, triangles or a bar id.
        delete_flag: Marks a CYCLE signal that unwinds a bar id.
        send_clock: Sender's logical clock when the message left.
        relay_to: Final receiver when `dst` only relays the message.
    """

    kind: SignalKind
    src: int
    dst: int
    payload: dict = field(default_factory=dict)
    delete_flag: bool = False
    send_clock: int = 0
    relay_to: Optional[int] = None

    @property
    def final_dst(self) -> int:
        return self.relay_to if self.relay_to is not None else self.dst

    def payload_text(self) -> str:
        parts = [f"{k}={_fmt(v)}" for k, v in sorted(self.payload.items())]
        if self.delete_flag:
            parts.append("delete")
        if self.relay_to is not None and self.relay_to != self.dst:
            parts.append(f"to={self.relay_to}")
        return " ".join(parts) if parts else "-"

    def trace_line(self, clock: int) -> str:
        return f"{clock} {self.kind} {self.src} {self.dst} {self.payload_text()}"
