from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

from graphModel import Triangle

from ..Status import Status
from .BarId import BarId

if TYPE_CHECKING:
    from .ElementaryBar import ElementaryBar

Branch = tuple[Triangle, ...]


@dataclass
class TriangleRecord:
    """A triangle as stored at its leader.

    Parameters:
        triangle: The triangle; its leader is `triangle.leader`.
        nbr_triangles: Flip-triangle neighbours learned in Phase I.
        status: Visit status in Phase II.
        element_lst: Bar ids whose witness passes through this triangle.
        parent: Parent in the flip-triangle tree, None at the root or when unvisited.
        children: Tree children in canonical order.
        hear_lst: Triangles that visited this one, in arrival order.
        depth: Tree depth, None until visited.
        branches: Per bar id, the tree paths that reached this triangle, each ending here.
        down: Per bar id, the children its branches came up from.
        holders: Per bar id, graph nodes that started a branch here.
        ext: Per net id, adjacency of the extended nodes its branches carried.
        climbed: Bar ids already passed up or judged here.
        outcome: Verdicts this triangle has received or reached, None when rejected.
        passed: Bar ids whose verdict has been passed down.
        judged: Verdicts reached here because this is where the branches met.
        bars: Admitted bars this triangle is a member of, with their node sets.
    """

    triangle: Triangle
    nbr_triangles: set[Triangle] = field(default_factory=set)
    status: Status = Status.IDLE
    element_lst: list[BarId] = field(default_factory=list)
    parent: Optional[Triangle] = None
    children: list[Triangle] = field(default_factory=list)
    hear_lst: list[Triangle] = field(default_factory=list)
    depth: Optional[int] = None

    branches: dict[BarId, list[Branch]] = field(default_factory=dict)
    down: dict[BarId, set[Triangle]] = field(default_factory=dict)
    holders: dict[BarId, set[int]] = field(default_factory=dict)
    ext: dict[BarId, dict[int, tuple[int, ...]]] = field(default_factory=dict)
    climbed: set[BarId] = field(default_factory=set)
    outcome: dict[BarId, Optional["ElementaryBar"]] = field(default_factory=dict)
    passed: set[BarId] = field(default_factory=set)
    judged: dict[BarId, Optional["ElementaryBar"]] = field(default_factory=dict)
    bars: dict[BarId, frozenset[int]] = field(default_factory=dict)

    @property
    def leader(self) -> int:
        return self.triangle.leader

    @property
    def visited(self) -> bool:
        return self.depth is not None

    def offer(self, depth: int, parent: Optional[Triangle]) -> bool:
        """Keep (depth, parent) when it is smaller than the current one."""
        if self.depth is not None:
            current = (self.depth, self.parent) if self.parent is not None else (self.depth,)
            candidate = (depth, parent) if parent is not None else (depth,)
            if candidate >= current:
                return False
        self.depth = depth
        self.parent = parent
        self.status = Status.VISITED
        return True

    def start_branch(self, bar: BarId) -> None:
        own = (self.triangle,)
        known = self.branches.setdefault(bar, [])
        if own not in known:
            known.append(own)

    def to_dict(self) -> dict:
        return {
            "triangle": self.triangle.to_list(),
            "nbr_triangles": [t.to_list() for t in sorted(self.nbr_triangles)],
            "status": self.status.value,
            "element_lst": [str(b) for b in self.element_lst],
            "parent": self.parent.to_list() if self.parent else None,
            "children": [t.to_list() for t in self.children],
            "depth": self.depth,
            "bars": sorted(str(b) for b in self.bars),
        }
