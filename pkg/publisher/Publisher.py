from __future__ import annotations

import json
from abc import ABC, abstractmethod


class Publisher(ABC):
    """Where generated graphs, reports and traces are written, and stored graphs read back.

    Keys are relative to the publisher's root, a local directory or a
    bucket prefix.
    """

    @abstractmethod
    def publish(self, key: str, data: bytes) -> None:
        """Write `data` under `key`, replacing whatever was there."""
        ...

    @abstractmethod
    def get(self, key: str) -> bytes:
        ...

    def publish_json(self, key: str, obj: dict) -> None:
        self.publish(key, json.dumps(obj, sort_keys=True).encode("utf-8"))

    def publish_text(self, key: str, text: str) -> None:
        self.publish(key, text.encode("utf-8"))

    def read_text(self, key: str) -> str:
        return self.get(key).decode("utf-8")
