from __future__ import annotations

from .SignalKind import SignalKind
from .struct.Message import Message


class Outbox:
    """Entries gathered into one message per signal, sender, receiver and delete flag.

    Handlers and kickoffs add entries as they go; `messages` turns them
    into batched messages whose payload carries the entries under "batch".
    """

    def __init__(self):
        self._entries: dict[tuple[str, int, int, bool], list[dict]] = {}

    def add(self, kind: SignalKind, src: int, dst: int, entry: dict, delete: bool = False) -> None:
        self._entries.setdefault((kind.value, src, dst, delete), []).append(entry)

    def __len__(self) -> int:
        return len(self._entries)

    def messages(self) -> list[Message]:
        return [
            Message(SignalKind(kind), src, dst, {"batch": entries}, delete_flag=delete)
            for (kind, src, dst, delete), entries in sorted(self._entries.items())
        ]
