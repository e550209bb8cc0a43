from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union


@dataclass
class Scenario:
    """A run request read from JSON.

    Parameters:
        graph: Path of a graph file, or a generator spec such as `cycle:6`.
        seed_triangle: Seed triple; None uses the generator's seed.
        scheduler_seed: Seed of the delivery interleaving.
        trace: Whether to record delivery trace lines.
    """

    graph: str
    seed_triangle: Optional[tuple[int, int, int]] = None
    scheduler_seed: int = 0
    trace: bool = False

    @classmethod
    def from_dict(cls, data: dict) -> "Scenario":
        if "graph" not in data:
            raise ValueError(f"Scenario has no graph entry: {sorted(data)!r}")
        seed = data.get("seed_triangle")
        if seed is not None:
            if len(seed) != 3:
                raise ValueError(f"Invalid seed_triangle {seed!r}")
            seed = tuple(int(n) for n in seed)
        return cls(
            graph=str(data["graph"]),
            seed_triangle=seed,
            scheduler_seed=int(data.get("scheduler_seed", 0)),
            trace=bool(data.get("trace", False)),
        )

    @classmethod
    def load(cls, path: Union[str, Path]) -> "Scenario":
        with open(path) as f:
            return cls.from_dict(json.load(f))

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "seed_triangle": list(self.seed_triangle) if self.seed_triangle else None,
            "scheduler_seed": self.scheduler_seed,
            "trace": self.trace,
        }
