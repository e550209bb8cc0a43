from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Iterator

from .FlipTriangleGraph import FlipTriangleGraph
from .FlipTriangleTree import FlipTriangleTree
from .struct.BaseCycle import BaseCycle

logger = logging.getLogger("ftg.cycles")


@dataclass
class BaseCycleSet:
    """One base cycle per FTG edge that the tree leaves out.

    Parameters:
        cycles: Base cycles ordered by their non-tree edge.
    """

    cycles: list[BaseCycle] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self) -> Iterator[BaseCycle]:
        return iter(self.cycles)

    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def to_dict(self) -> dict:
        return {"cycles": [c.to_dict() for c in self.cycles]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "BaseCycleSet":
        return cls([BaseCycle.from_dict(c) for c in data.get("cycles", [])])


def base_cycles(ftg: FlipTriangleGraph, tree: FlipTriangleTree) -> BaseCycleSet:
    """Fundamental cycles of the FTG edges inside the tree's component that are not tree edges."""
    cycles = []
    for t1, t2 in ftg.edges():
        if t1 not in tree or t2 not in tree or tree.is_tree_edge(t1, t2):
            continue
        cycles.append(BaseCycle(non_tree_edge=(t1, t2), path=tuple(tree.path_between(t1, t2))))
    logger.debug("Base cycles root=%s count=%d", tree.root, len(cycles))
    return BaseCycleSet(cycles)
