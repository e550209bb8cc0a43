from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from graphModel import Triangle

from .ElementaryBar import ElementaryBar


@dataclass
class LocalizabilityReport:
    """Outcome of a full three-phase run.

    Parameters:
        localizable_nodes: Nodes Phase III marked localizable.
        elementary_bars: Bars admitted after Phase II.
        total_messages: One-hop transmissions over all phases.
        max_clock: Largest logical clock at the end of the run.
        per_phase: Message and event totals keyed by phase name.
        sent: One-hop messages sent by every node.
        phase1_clocks: Every node's clock when Phase I quiesced.
        degrees: Every node's degree.
        num_nodes: Graph order.
        num_edges: Graph size.
        seed_triangle: The seed the run started from.
        scheduler_seed: Seed of the delivery interleaving.
    """

    localizable_nodes: set[int] = field(default_factory=set)
    elementary_bars: list[ElementaryBar] = field(default_factory=list)
    total_messages: int = 0
    max_clock: int = 0
    per_phase: dict[str, dict[str, int]] = field(default_factory=dict)
    sent: dict[int, int] = field(default_factory=dict)
    phase1_clocks: dict[int, int] = field(default_factory=dict)
    degrees: dict[int, int] = field(default_factory=dict)
    num_nodes: int = 0
    num_edges: int = 0
    seed_triangle: Optional[Triangle] = None
    scheduler_seed: int = 0

    def to_dict(self) -> dict:
        return {
            "localizable_nodes": sorted(self.localizable_nodes),
            "elementary_bars": [b.to_dict() for b in self.elementary_bars],
            "total_messages": self.total_messages,
            "max_clock": self.max_clock,
            "per_phase": {k: dict(v) for k, v in self.per_phase.items()},
            "sent": {str(k): v for k, v in sorted(self.sent.items())},
            "phase1_clocks": {str(k): v for k, v in sorted(self.phase1_clocks.items())},
            "num_nodes": self.num_nodes,
            "num_edges": self.num_edges,
            "seed_triangle": self.seed_triangle.to_list() if self.seed_triangle else None,
            "scheduler_seed": self.scheduler_seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
