from .BarId import BarId
from .ElementaryBar import ElementaryBar
from .LocalizabilityReport import LocalizabilityReport
from .Message import Message
from .NodeState import NodeState
from .Scenario import Scenario
from .TriangleRecord import TriangleRecord

__all__ = [
    "BarId",
    "ElementaryBar",
    "LocalizabilityReport",
    "Message",
    "NodeState",
    "Scenario",
    "TriangleRecord",
]
