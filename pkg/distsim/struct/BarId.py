from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from graphModel import Triangle


@dataclass(frozen=True, order=True)
class BarId:
    """Canonical name of an elementary-bar witness.

    Both ends of a discovery build the same id, so ids can be matched by
    equality wherever they meet.

    Parameters:
        kind: One of cycle, wheel, circuit, bridge or net.
        triangles: Triangles the witness starts from, in canonical order.
        nodes: Graph nodes the witness names, aligned with `triangles` where both apply.
    """

    kind: str
    triangles: tuple[Triangle, ...] = ()
    nodes: tuple[int, ...] = ()

    @classmethod
    def closing(cls, t1: Triangle, t2: Triangle) -> "BarId":
        """Non-tree FTG edge t1-t2 closing a base cycle."""
        return cls("cycle", tuple(sorted((t1, t2))))

    @classmethod
    def circuit(cls, tj: Triangle, knot: int, tk: Triangle) -> "BarId":
        return cls("circuit", tuple(sorted((tj, tk))), (knot,))

    @classmethod
    def bridge(cls, p: int, tp: Triangle, q: int, tq: Triangle) -> "BarId":
        (a, ta), (b, tb) = sorted(((p, tp), (q, tq)))
        return cls("bridge", (ta, tb), (a, b))

    @classmethod
    def net(cls, extended: int, anchors: Sequence[int]) -> "BarId":
        """Net flooded from `extended` through the anchors it has heard."""
        return cls("net", (), (extended, *sorted(anchors)))

    @classmethod
    def wheel(cls, hub: int, ring: Sequence[Triangle]) -> "BarId":
        """Ring of triangles around `hub`, rotated to start at its smallest member."""
        ring = list(ring)
        i = ring.index(min(ring))
        forward = ring[i:] + ring[:i]
        backward = [forward[0]] + list(reversed(forward[1:]))
        return cls("wheel", tuple(min(forward, backward)), (hub,))

    @property
    def ends(self) -> tuple[Triangle, Triangle]:
        """The two triangles a two-branch witness climbs from."""
        if self.kind in ("wheel", "net"):
            raise ValueError(f"A {self.kind} witness has no pair of branch ends")
        return self.triangles[0], self.triangles[1]

    def __str__(self) -> str:
        tris = "".join(str(t) for t in self.triangles)
        nodes = ",".join(str(n) for n in self.nodes)
        return f"{self.kind}[{tris}{'|' + nodes if nodes else ''}]"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "triangles": [t.to_list() for t in self.triangles],
            "nodes": list(self.nodes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BarId":
        return cls(
            kind=str(data["kind"]),
            triangles=tuple(Triangle.from_list(t) for t in data.get("triangles", [])),
            nodes=tuple(int(n) for n in data.get("nodes", [])),
        )
