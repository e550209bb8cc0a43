from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Optional, TextIO

from .Publisher import Publisher

logger = logging.getLogger("publisher.file")


class FilePublisher(Publisher):
    """Writes artifacts below a local root directory.

    With no root, `publish` writes to `stream` (stdout by default) and
    `get` is unavailable.
    """

    def __init__(self, root: Optional[str | Path] = None, stream: Optional[TextIO] = None):
        self._root = Path(root) if root is not None else None
        self._stream = stream

    def _path(self, key: str) -> Path:
        if self._root is None:
            raise ValueError(f"Stream publisher cannot address key {key!r}")
        return self._root / key

    def publish(self, key: str, data: bytes) -> None:
        if self._root is None:
            out = self._stream or sys.stdout
            out.write(data.decode("utf-8"))
            if not data.endswith(b"\n"):
                out.write("\n")
            out.flush()
            return
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
        logger.info("Wrote %s bytes=%d", path, len(data))

    def get(self, key: str) -> bytes:
        return self._path(key).read_bytes()
