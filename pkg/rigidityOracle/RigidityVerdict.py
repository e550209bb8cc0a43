from __future__ import annotations

import json
from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class RigidityVerdict:
    """Generic planar rigidity properties of one graph.

    Parameters:
        rigid: Contains a spanning (2,3)-tight subgraph.
        redundantly_rigid: Rigid after deleting any single edge.
        three_connected: No vertex cut of two or fewer nodes.
        globally_rigid: Complete on at most three nodes, or three-connected and redundantly rigid.
    """

    rigid: bool
    redundantly_rigid: bool
    three_connected: bool
    globally_rigid: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "RigidityVerdict":
        return cls(
            rigid=bool(data["rigid"]),
            redundantly_rigid=bool(data["redundantly_rigid"]),
            three_connected=bool(data["three_connected"]),
            globally_rigid=bool(data["globally_rigid"]),
        )
