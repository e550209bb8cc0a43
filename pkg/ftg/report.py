from __future__ import annotations

import logging
from typing import Optional

from graphModel import Graph, Triangle

from .BaseCycleSet import base_cycles
from .FlipTriangleGraph import FlipTriangleGraph
from .FlipTriangleTree import ftt

logger = logging.getLogger("ftg.report")


def ftg_report(g: Graph, root: Optional[Triangle] = None) -> dict:
    """FTG of `g` with the FTT and base cycles of the root's component.

    Without a root the smallest triangle is used. A triangle-free graph
    reports an empty FTG and no tree.
    """
    graph = FlipTriangleGraph.build(g)
    report = {"ftg": graph.to_dict(), "components": len(graph.components())}
    if not len(graph):
        report.update(ftt=None, base_cycles=[])
        return report
    root = root if root is not None else graph.vertices[0]
    tree = ftt(graph, root)
    cycles = base_cycles(graph, tree)
    report.update(ftt=tree.to_dict(), base_cycles=cycles.to_dict()["cycles"])
    logger.info("FTG report triangles=%d tree=%d base_cycles=%d", len(graph), len(tree), len(cycles))
    return report
