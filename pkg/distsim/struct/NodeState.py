from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

from graphModel import Triangle

from ..LogicalClock import LogicalClock
from ..Status import Status
from .BarId import BarId
from .TriangleRecord import TriangleRecord

if TYPE_CHECKING:
    from .ElementaryBar import ElementaryBar


@dataclass
class NodeState:
    """Everything one simulated node knows.

    Only the leader of a triangle keeps its `TriangleRecord`. The remaining
    fields are the node's own Phase II and Phase III bookkeeping and the
    protocol scratch the handlers need between deliveries.

    Parameters:
        id: Node id.
        nbrs: Sorted neighbour ids.
        trngls: Records of the triangles this node leads.
        status: Visit status, localizable once Phase III marks it.
        mark: "extended" once three pendant or extended neighbours reached it.
        parent: Smallest triangle that visited this node.
        children: Neighbours that extended through this node.
        hear_lst: Triangles that visited this node, in arrival order.
        element_lst: Bar ids that name this node.
        clock: Logical clock.
        sent: One-hop messages sent.
        received: One-hop messages received.
        anchors: Pendant or extended neighbours heard by an unvisited node, True for extended ones.
        net_from: Per net id, the extended nodes that passed it to this node.
        bars: Admitted bars this node belongs to, at most one id per node set.
        bar_known: Per bar node set, joined members this node has learned of.
    """

    id: int
    nbrs: tuple[int, ...]
    trngls: dict[Triangle, TriangleRecord] = field(default_factory=dict)
    status: Status = Status.IDLE
    mark: str = ""
    parent: Optional[Triangle] = None
    children: list[int] = field(default_factory=list)
    hear_lst: list[Triangle] = field(default_factory=list)
    element_lst: list[BarId] = field(default_factory=list)
    clock: LogicalClock = field(default_factory=LogicalClock)
    sent: int = 0
    received: int = 0

    # Phase I
    nbr_lists: dict[int, frozenset[int]] = field(default_factory=dict)
    member_of: set[Triangle] = field(default_factory=set)
    leader_batches: set[int] = field(default_factory=set)
    heard_triangles: set[Triangle] = field(default_factory=set)
    relayed: bool = False
    phase1_clock: int = 0

    # Phase II
    pendant: bool = False
    anchors: dict[int, bool] = field(default_factory=dict)
    net_size: int = 0
    net_from: dict[BarId, set[int]] = field(default_factory=dict)
    settled: set[BarId] = field(default_factory=set)
    wheels: dict[BarId, "ElementaryBar"] = field(default_factory=dict)
    bars: dict[BarId, frozenset[int]] = field(default_factory=dict)

    # Phase III
    joined: bool = False
    join_sent: bool = False
    joined_nbrs: set[int] = field(default_factory=set)
    bar_known: dict[frozenset[int], set[int]] = field(default_factory=dict)
    bar_sent: dict[frozenset[int], int] = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return len(self.nbrs)

    @property
    def extended(self) -> bool:
        return self.mark == "extended"

    @property
    def visited(self) -> bool:
        return bool(self.hear_lst)

    def leads(self, t: Triangle) -> bool:
        return t in self.trngls

    def is_nbr(self, node: int) -> bool:
        return node in self.nbrs

    def lists_complete(self) -> bool:
        return len(self.nbr_lists) == len(self.nbrs)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "status": self.status.value,
            "mark": self.mark,
            "parent": self.parent.to_list() if self.parent else None,
            "element_lst": [str(b) for b in self.element_lst],
            "trngls": [r.to_dict() for _, r in sorted(self.trngls.items())],
            "clock": self.clock.read(),
            "sent": self.sent,
            "received": self.received,
        }
