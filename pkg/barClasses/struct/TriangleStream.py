from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from graphModel import Edge, Graph, Triangle, shared_edge


@dataclass(frozen=True)
class TriangleStream:
    """An ordered sequence of distinct triangles.

    Parameters:
        triangles: Stream members T_1 .. T_m in order.
    """

    triangles: tuple[Triangle, ...]

    def __post_init__(self):
        if len(set(self.triangles)) != len(self.triangles):
            raise ValueError("Stream triangles must be pairwise distinct")

    @classmethod
    def of(cls, triangles: Iterable) -> "TriangleStream":
        return cls(tuple(t if isinstance(t, Triangle) else Triangle.of(*t) for t in triangles))

    def __len__(self) -> int:
        return len(self.triangles)

    def __iter__(self) -> Iterator[Triangle]:
        return iter(self.triangles)

    def __getitem__(self, i):
        return self.triangles[i]

    @property
    def first(self) -> Triangle:
        return self.triangles[0]

    @property
    def last(self) -> Triangle:
        return self.triangles[-1]

    def nodes(self) -> set[int]:
        return {n for t in self.triangles for n in t}

    def edges(self) -> set[Edge]:
        return {e for t in self.triangles for e in t.edges()}

    def link(self, i: int) -> Optional[Edge]:
        """Edge shared by T_i and T_{i+1} (0-based)."""
        return shared_edge(self.triangles[i], self.triangles[i + 1])

    def rotated(self, start: int) -> "TriangleStream":
        return TriangleStream(self.triangles[start:] + self.triangles[:start])

    def without(self, index: int) -> "TriangleStream":
        return TriangleStream(self.triangles[:index] + self.triangles[index + 1:])

    def to_graph(self) -> Graph:
        return Graph(self.nodes(), self.edges())

    def to_dict(self) -> dict:
        return {"triangles": [t.to_list() for t in self.triangles]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "TriangleStream":
        return cls.of(data["triangles"])
