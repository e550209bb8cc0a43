from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from graphModel import Graph, Triangle


@dataclass
class GeneratedInstance:
    """A generated graph with the structure that witnesses its class.

    Parameters:
        graph: The generated graph.
        spec: Canonical generator spec string that produced it.
        family: Generator family name.
        witness: JSON-ready witness (stream, knot, apex, ordering, parts ...).
        seed_triangle: Triangle a recognition run should start from.
    """

    graph: Graph
    spec: str
    family: str
    witness: dict = field(default_factory=dict)
    seed_triangle: Optional[Triangle] = None

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "family": self.family,
            "graph": self.graph.to_dict(),
            "witness": self.witness,
            "seed_triangle": self.seed_triangle.to_list() if self.seed_triangle else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())
