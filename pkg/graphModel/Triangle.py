from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical (low, high) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, order=True)
class Triangle:
    """A 3-clique in canonical form.

    Parameters:
        a: Smallest node id; also the leader that stores the triangle's record.
        b: Middle node id.
        c: Largest node id.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        if not (self.a < self.b < self.c):
            raise ValueError(f"Triangle ids must be strictly increasing, got {(self.a, self.b, self.c)!r}")

    @classmethod
    def of(cls, u: int, v: int, w: int) -> "Triangle":
        x, y, z = sorted((u, v, w))
        if x == y or y == z:
            raise ValueError(f"Triangle needs three distinct nodes, got {(u, v, w)!r}")
        return cls(x, y, z)

    @property
    def leader(self) -> int:
        return self.a

    @property
    def nodes(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __iter__(self) -> Iterator[int]:
        return iter(self.nodes)

    def __contains__(self, node: object) -> bool:
        return node in self.nodes

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"

    def edges(self) -> tuple[Edge, Edge, Edge]:
        return ((self.a, self.b), (self.a, self.c), (self.b, self.c))

    def others(self, node: int) -> tuple[int, int]:
        """The two members other than `node`."""
        rest = tuple(n for n in self.nodes if n != node)
        if len(rest) != 2:
            raise ValueError(f"Node {node!r} is not a member of {self}")
        return rest  # type: ignore[return-value]

    def opposite(self, edge: Iterable[int]) -> int:
        """The member not on `edge`."""
        u, v = edge
        rest = [n for n in self.nodes if n != u and n != v]
        if len(rest) != 1 or u not in self or v not in self:
            raise ValueError(f"Edge {(u, v)!r} is not a side of {self}")
        return rest[0]

    def side_opposite(self, node: int) -> Edge:
        x, y = self.others(node)
        return (x, y)

    def to_list(self) -> list[int]:
        return [self.a, self.b, self.c]

    @classmethod
    def from_list(cls, data: Iterable[int]) -> "Triangle":
        u, v, w = data
        return cls.of(int(u), int(v), int(w))
