from __future__ import annotations

from dataclasses import dataclass

from graphModel import Edge, Triangle


@dataclass(frozen=True)
class StreamRole:
    """How one triangle sits inside a stream.

    Parameters:
        triangle: The stream member.
        pendants: Members whose opposite edge is shared with another stream triangle.
        inner_sides: Edges shared with another stream triangle.
        outer_sides: The remaining edges.
    """

    triangle: Triangle
    pendants: frozenset[int]
    inner_sides: frozenset[Edge]
    outer_sides: frozenset[Edge]

    def to_dict(self) -> dict:
        return {
            "triangle": self.triangle.to_list(),
            "pendants": sorted(self.pendants),
            "inner_sides": sorted(list(e) for e in self.inner_sides),
            "outer_sides": sorted(list(e) for e in self.outer_sides),
        }
