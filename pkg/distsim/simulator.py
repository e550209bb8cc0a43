from __future__ import annotations

import logging
import os
from typing import Optional

from ftg import FlipTriangleGraph, FlipTriangleTree
from graphModel import Graph, NotATriangle, Triangle, require_triangle

from .Network import Network
from .Scheduler import Scheduler
from .Status import Status
from .assembly import bar_holders, distributed_ftt, elementary_bars
from .errors import PhaseOrderError, SeedNotTriangle
from .impl.BarPhase import BarPhase
from .impl.FtgPhase import FtgPhase
from .impl.StitchPhase import StitchPhase
from .struct.BarId import BarId
from .struct.ElementaryBar import ElementaryBar
from .struct.LocalizabilityReport import LocalizabilityReport

logger = logging.getLogger("distsim.simulator")

DEFAULT_MESSAGE_CONSTANT = 120


class Simulation:
    """One run of the protocol on one graph, advanced phase by phase.

    Parameters:
        g: The graph whose nodes are simulated.
        scheduler_seed: Seed of the delivery interleaving.
        trace: Record one line per delivered message.
    """

    def __init__(self, g: Graph, scheduler_seed: int = 0, trace: bool = False):
        self.graph = g
        self.scheduler_seed = scheduler_seed
        self.net = Network(g, Scheduler(scheduler_seed, g.num_edges), trace=trace)
        self.done: list[str] = []
        self.seed_triangle: Optional[Triangle] = None
        self.tree: Optional[FlipTriangleTree] = None
        self.bars: list[ElementaryBar] = []
        self.phase1_clocks: dict[int, int] = {}

    @property
    def trace(self) -> list[str]:
        return self.net.trace

    @property
    def ftg(self) -> FlipTriangleGraph:
        """Union of the leaders' records: the flip-triangle graph as the network learned it."""
        records = [r for s in self.net.states.values() for r in s.trngls.values()]
        return FlipTriangleGraph(
            (r.triangle for r in records),
            {r.triangle: r.nbr_triangles for r in records},
        )

    def bar_ids(self) -> list[BarId]:
        tris, nodes = bar_holders(self.net)
        return sorted(set(tris) | set(nodes))

    def localizable_nodes(self) -> set[int]:
        return {v for v, s in self.net.states.items() if s.status == Status.LOCALIZABLE}

    def report(self) -> LocalizabilityReport:
        net = self.net
        return LocalizabilityReport(
            localizable_nodes=self.localizable_nodes(),
            elementary_bars=list(self.bars),
            total_messages=net.messages,
            max_clock=net.max_clock,
            per_phase={k: dict(v) for k, v in net.per_phase.items()},
            sent={v: s.sent for v, s in net.states.items()},
            phase1_clocks=dict(self.phase1_clocks),
            degrees={v: s.degree for v, s in net.states.items()},
            num_nodes=len(self.graph),
            num_edges=self.graph.num_edges,
            seed_triangle=self.seed_triangle,
            scheduler_seed=self.scheduler_seed,
        )

    def _require(self, phase: str, before: str) -> None:
        if before not in self.done:
            raise PhaseOrderError(phase, before)
        if phase in self.done:
            raise PhaseOrderError(phase, f"a fresh simulation ({phase} already ran)")


def seed_of(g: Graph, seed) -> Triangle:
    try:
        return require_triangle(g, seed)
    except NotATriangle:
        raise SeedNotTriangle(seed) from None


def run_phase1(g: Graph, scheduler_seed: int = 0, trace: bool = False) -> Simulation:
    """Build the flip-triangle graph by message passing; `.ftg` of the result is the network's view."""
    sim = Simulation(g, scheduler_seed, trace)
    FtgPhase().run(sim.net)
    sim.phase1_clocks = {v: s.clock.read() for v, s in sim.net.states.items()}
    for v, s in sim.net.states.items():
        s.phase1_clock = sim.phase1_clocks[v]
    sim.done.append("phase1")
    return sim


def run_phase2(sim: Simulation, seed_triangle) -> tuple[FlipTriangleTree, list[ElementaryBar]]:
    """Tree, base cycles and witnesses from the seed; returns the tree and the admitted bars."""
    seed = seed_of(sim.graph, seed_triangle)
    sim._require("phase2", "phase1")
    sim.seed_triangle = seed
    BarPhase(seed).run(sim.net)
    sim.tree = distributed_ftt(sim.net, seed)
    sim.bars = elementary_bars(sim.net)
    sim.done.append("phase2")
    return sim.tree, sim.bars


def run_phase3(sim: Simulation) -> LocalizabilityReport:
    sim._require("phase3", "phase2")
    StitchPhase(sim.seed_triangle).run(sim.net)
    sim.done.append("phase3")
    report = sim.report()
    logger.info(
        "Localizable %d of %d nodes messages=%d max_clock=%d",
        len(report.localizable_nodes), report.num_nodes, report.total_messages, report.max_clock,
    )
    return report


def simulate(g: Graph, seed_triangle, scheduler_seed: int = 0, trace: bool = False) -> Simulation:
    """All three phases in order; the returned simulation keeps the network state and trace."""
    seed = seed_of(g, seed_triangle)
    sim = run_phase1(g, scheduler_seed, trace)
    run_phase2(sim, seed)
    run_phase3(sim)
    return sim


def run_full(g: Graph, seed_triangle, scheduler_seed: int = 0, trace: bool = False) -> LocalizabilityReport:
    return simulate(g, seed_triangle, scheduler_seed, trace).report()


def metrics(report: LocalizabilityReport, message_constant: Optional[int] = None) -> dict:
    """Message and clock summary of a finished run.

    `clock_violations` lists nodes whose Phase I clock exceeds three times
    their degree; `within_budget` compares the total against c * |E|.
    """
    c = message_constant if message_constant is not None else int(
        os.environ.get("TRIBAR_MESSAGE_CONSTANT", DEFAULT_MESSAGE_CONSTANT)
    )
    m = report.num_edges
    violations = sorted(v for v, clock in report.phase1_clocks.items() if clock > 3 * report.degrees.get(v, 0))
    return {
        "sent": dict(sorted(report.sent.items())),
        "max_clock": report.max_clock,
        "max_phase1_clock": max(report.phase1_clocks.values(), default=0),
        "per_phase": {k: dict(v) for k, v in report.per_phase.items()},
        "total_messages": report.total_messages,
        "num_edges": m,
        "ratio": report.total_messages / m if m else 0.0,
        "message_constant": c,
        "within_budget": report.total_messages <= c * m,
        "clock_violations": violations,
    }
