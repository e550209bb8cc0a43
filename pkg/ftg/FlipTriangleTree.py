from __future__ import annotations

import json
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from graphModel import Triangle

from .FlipTriangleGraph import FlipTriangleGraph
from .errors import RootAbsent

logger = logging.getLogger("ftg.tree")


@dataclass
class FlipTriangleTree:
    """Breadth-first spanning tree of one FTG component.

    Parameters:
        root: The triangle the search started from.
        parent: Parent of every non-root vertex.
        children: Children of every vertex in canonical order.
        depth: Hop distance of every vertex from the root.
    """

    root: Triangle
    parent: dict[Triangle, Triangle] = field(default_factory=dict)
    children: dict[Triangle, list[Triangle]] = field(default_factory=dict)
    depth: dict[Triangle, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.depth)

    def __contains__(self, t: object) -> bool:
        return t in self.depth

    @property
    def vertices(self) -> list[Triangle]:
        """Layer by layer, canonical order inside a layer."""
        return sorted(self.depth, key=lambda t: (self.depth[t], t))

    def parent_of(self, t: Triangle) -> Optional[Triangle]:
        return self.parent.get(t)

    def tree_edges(self) -> set[frozenset[Triangle]]:
        return {frozenset((c, p)) for c, p in self.parent.items()}

    def is_tree_edge(self, t1: Triangle, t2: Triangle) -> bool:
        return self.parent.get(t1) == t2 or self.parent.get(t2) == t1

    def path_to_root(self, t: Triangle) -> list[Triangle]:
        path = [t]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        return path

    def path_between(self, t1: Triangle, t2: Triangle) -> list[Triangle]:
        """Tree path from t1 to t2 through their lowest common ancestor."""
        up1, up2 = self.path_to_root(t1), self.path_to_root(t2)
        on2 = set(up2)
        i = next(k for k, t in enumerate(up1) if t in on2)
        lca = up1[i]
        j = up2.index(lca)
        return up1[:i + 1] + list(reversed(up2[:j]))

    def leaves(self) -> list[Triangle]:
        return sorted(t for t in self.depth if not self.children.get(t))

    def to_dict(self) -> dict:
        return {
            "root": self.root.to_list(),
            "parent": {str(c): p.to_list() for c, p in sorted(self.parent.items())},
            "depth": {str(t): d for t, d in sorted(self.depth.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def ftt(ftg: FlipTriangleGraph, root: Triangle) -> FlipTriangleTree:
    """BFS tree of `root`'s component.

    Each triangle hangs under its canonically smallest neighbour one layer up,
    which makes the tree unique for a given root.
    """
    if root not in ftg:
        raise RootAbsent(root)
    depth = {root: 0}
    queue = deque([root])
    while queue:
        t = queue.popleft()
        for n in ftg.neighbors(t):
            if n not in depth:
                depth[n] = depth[t] + 1
                queue.append(n)

    tree = FlipTriangleTree(root=root, depth=depth)
    tree.children = {t: [] for t in depth}
    for t in sorted(depth, key=lambda x: (depth[x], x)):
        if t == root:
            continue
        p = min(n for n in ftg.adjacency[t] if depth[n] == depth[t] - 1)
        tree.parent[t] = p
        tree.children[p].append(t)
    logger.debug("FTT root=%s vertices=%d height=%d", root, len(tree), max(depth.values()))
    return tree
