from __future__ import annotations

from dataclasses import dataclass, field

from barClasses import ClassLabel
from graphModel import Triangle

from .BarId import BarId


@dataclass
class ElementaryBar:
    """An elementary bar admitted after Phase II.

    Parameters:
        bar_id: The witness id the protocol recorded.
        label: Recognized class: cycle, wheel, circuit, bridge or net.
        triangles: Member triangles in stream order.
        nodes: All graph nodes of the bar, extended nodes included.
    """

    bar_id: BarId
    label: ClassLabel
    triangles: tuple[Triangle, ...] = ()
    nodes: frozenset[int] = field(default_factory=frozenset)

    def __str__(self) -> str:
        return f"{self.label.value}[" + ",".join(str(n) for n in sorted(self.nodes)) + "]"

    def to_dict(self) -> dict:
        return {
            "id": str(self.bar_id),
            "label": self.label.value,
            "triangles": [t.to_list() for t in self.triangles],
            "nodes": sorted(self.nodes),
        }
