from __future__ import annotations

from pathlib import Path
from typing import Optional

from .FilePublisher import FilePublisher
from .Publisher import Publisher
from .S3Publisher import S3Publisher


def publisher_for(target: Optional[str]) -> tuple[Publisher, str]:
    """Publisher and key for an `-o` target: `s3://bucket/prefix/key`, a local path, or None for stdout."""
    if target is None or target == "-":
        return FilePublisher(), "-"
    if target.startswith("s3://"):
        return S3Publisher.from_uri(target)
    path = Path(target)
    return FilePublisher(path.parent), path.name
