from __future__ import annotations

from dataclasses import dataclass

from graphModel import Triangle


@dataclass(frozen=True)
class BaseCycle:
    """Fundamental cycle of one non-tree FTG edge.

    Parameters:
        non_tree_edge: The FTG edge outside the tree, smaller triangle first.
        path: Tree path from the first end of the edge to the second; the edge closes it.
    """

    non_tree_edge: tuple[Triangle, Triangle]
    path: tuple[Triangle, ...]

    def __len__(self) -> int:
        return len(self.path)

    @property
    def triangles(self) -> tuple[Triangle, ...]:
        return self.path

    def to_dict(self) -> dict:
        return {
            "non_tree_edge": [t.to_list() for t in self.non_tree_edge],
            "path": [t.to_list() for t in self.path],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BaseCycle":
        a, b = data["non_tree_edge"]
        return cls(
            non_tree_edge=(Triangle.from_list(a), Triangle.from_list(b)),
            path=tuple(Triangle.from_list(t) for t in data["path"]),
        )
