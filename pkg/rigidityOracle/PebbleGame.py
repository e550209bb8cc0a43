from __future__ import annotations

from typing import Iterable, Optional

from graphModel import Edge, Graph, edge_key


class PebbleGame:
    """(2,3) pebble game over a fixed node set.

    Every node starts with two pebbles. An edge is accepted as independent when
    four pebbles can be gathered on its ends; one of them then covers the edge
    and the edge is directed away from the node that paid for it.
    """

    def __init__(self, nodes: Iterable[int]):
        self.pebbles: dict[int, int] = {n: 2 for n in nodes}
        self.out: dict[int, set[int]] = {n: set() for n in self.pebbles}
        self.accepted: list[Edge] = []
        self.rejected: list[Edge] = []

    @classmethod
    def play(cls, g: Graph, skip: Optional[Edge] = None) -> "PebbleGame":
        game = cls(g.nodes)
        drop = edge_key(*skip) if skip is not None else None
        for u, v in g.edges():
            if (u, v) == drop:
                continue
            game.add_edge(u, v)
        return game

    @property
    def free_pebbles(self) -> int:
        return sum(self.pebbles.values())

    def add_edge(self, u: int, v: int) -> bool:
        for end, other in ((u, v), (v, u)):
            while self.pebbles[end] < 2 and self._draw_pebble(end, other):
                pass
        if self.pebbles[u] + self.pebbles[v] < 4:
            self.rejected.append(edge_key(u, v))
            return False
        self.pebbles[u] -= 1
        self.out[u].add(v)
        self.accepted.append(edge_key(u, v))
        return True

    def is_rigid(self) -> bool:
        n = len(self.pebbles)
        return n <= 1 or len(self.accepted) == 2 * n - 3

    # -- Internal --------------------------------------------------------------

    def _draw_pebble(self, start: int, keep: int) -> bool:
        """Move a free pebble to `start` along a directed path, never taking one from `keep`."""
        parent: dict[int, int] = {start: start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y in parent:
                    continue
                parent[y] = x
                if y != keep and self.pebbles[y] > 0:
                    self._reverse_path(parent, y)
                    self.pebbles[y] -= 1
                    self.pebbles[start] += 1
                    return True
                stack.append(y)
        return False

    def _reverse_path(self, parent: dict[int, int], end: int) -> None:
        y = end
        while parent[y] != y:
            x = parent[y]
            self.out[x].discard(y)
            self.out[y].add(x)
            y = x
