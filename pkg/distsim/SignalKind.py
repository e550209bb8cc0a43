from enum import Enum


class SignalKind(str, Enum):
    """Message kinds exchanged between nodes."""

    NBR_LIST = "NBR_LIST"
    TRIANGLE = "TRIANGLE"
    VISIT = "VISIT"
    CHILD = "CHILD"
    VISIT_NODE = "VISIT_NODE"
    CYCLE = "CYCLE"
    STITCH = "STITCH"
    MARK = "MARK"

    def __str__(self) -> str:
        return self.value
