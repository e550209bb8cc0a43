from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Sequence

from graphModel import Edge, Graph, enumerate_triangles

from .errors import InvalidPlan
from .generators import gen_triangle_bridge, gen_triangle_chain, gen_triangle_circuit, gen_triangle_cycle, gen_wheel

logger = logging.getLogger("barClasses.composites")

STITCH_FAMILIES = ("cycle", "circuit", "bridge", "wheel")


@dataclass
class Part:
    """One elementary bar of a composite graph.

    Parameters:
        family: Generator family name.
        size: Generator size argument.
        graph: The part on its own labels.
        forbidden: Nodes that must not carry a glue point (knots, bridge end pendants).
        nodes: Member ids in the composite labelling, filled once placed.
    """

    family: str
    size: int
    graph: Graph
    forbidden: set[int] = field(default_factory=set)
    nodes: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"family": self.family, "size": self.size, "nodes": list(self.nodes)}


def build_part(token: str) -> Part:
    """Build a part from `family:size`, e.g. `circuit:6`."""
    family, _, size_s = token.partition(":")
    if family not in STITCH_FAMILIES or not size_s.isdigit():
        raise InvalidPlan(f"Part must be one of {STITCH_FAMILIES} with a size, got {token!r}")
    size = int(size_s)
    if family == "wheel":
        return Part(family, size, gen_wheel(size))
    if family == "cycle":
        return Part(family, size, gen_triangle_cycle(size)[0])
    if family == "circuit":
        g, _, knot = gen_triangle_circuit(size)
        return Part(family, size, g, {knot})
    g, _, bridging = gen_triangle_bridge(size)
    return Part(family, size, g, set(bridging))


def _single_triangle_edges(g: Graph) -> list[Edge]:
    count: dict[Edge, int] = {}
    for t in enumerate_triangles(g):
        for e in t.edges():
            count[e] = count.get(e, 0) + 1
    return sorted(e for e, k in count.items() if k == 1)


def _glue_points(g: Graph, forbidden: set[int]) -> list[tuple[int, int, int]]:
    """(a, b, c): edge ab in exactly one triangle, c adjacent to neither end."""
    points = []
    for a, b in _single_triangle_edges(g):
        if a in forbidden or b in forbidden:
            continue
        for c in g.nodes:
            if c in (a, b) or c in forbidden or g.has_edge(a, c) or g.has_edge(b, c):
                continue
            points.append((a, b, c))
    return points


def gen_stitched_bar(parts: Sequence[str], rng_seed: int = 0) -> tuple[Graph, list[Part]]:
    """Glue elementary bars one after another, each sharing three nodes with the part before.

    Each new part shares an edge lying in one triangle on both sides, plus one
    node adjacent to neither end of it. No triangle is created by the glue and
    exactly one flip-triangle edge joins the two sides.
    """
    if len(parts) < 2:
        raise InvalidPlan(f"A stitched bar needs at least two parts, got {len(parts)}")
    rng = random.Random(rng_seed)
    built = [build_part(p) for p in parts]

    first = built[0]
    first.nodes = list(first.graph.nodes)
    acc = first.graph
    forbidden = set(first.forbidden)
    for prev, part in zip(built, built[1:]):
        mine = [p for p in _glue_points(acc, forbidden) if set(p) <= set(prev.nodes)]
        theirs = _glue_points(part.graph, part.forbidden)
        if not mine or not theirs:
            raise InvalidPlan(f"No glue point between the stitched graph and part {part.family}:{part.size}")
        a, b, c = rng.choice(mine)
        pa, pb, pc = rng.choice(theirs)
        if rng.random() < 0.5:
            pa, pb = pb, pa
        mapping = {pa: a, pb: b, pc: c}
        next_id = max(acc.nodes) + 1
        for n in part.graph.nodes:
            if n not in mapping:
                mapping[n] = next_id
                next_id += 1
        placed = part.graph.relabel(mapping)
        part.nodes = sorted(placed.nodes)
        forbidden |= {mapping[n] for n in part.forbidden} | {a, b, c}
        acc = Graph(list(acc.nodes) + list(placed.nodes), acc.edges() + placed.edges())
        logger.debug("Stitched %s:%d on nodes %s", part.family, part.size, (a, b, c))
    return acc, built


def gen_chain_graft(bar_spec: str, m: int) -> tuple[Graph, list[int], list[int]]:
    """A bar with a triangle chain hanging off one of its outer sides.

    Returns the graph, the bar's nodes and the chain's new nodes.
    """
    part = build_part(bar_spec)
    outer = [e for e in _single_triangle_edges(part.graph) if not (set(e) & part.forbidden)]
    if not outer:
        raise InvalidPlan(f"Part {bar_spec!r} has no outer side to graft on")
    a, b = outer[0]
    chain, _ = gen_triangle_chain(m)
    next_id = max(part.graph.nodes) + 1
    mapping = {0: a, 1: b}
    for n in chain.nodes:
        if n not in mapping:
            mapping[n] = next_id
            next_id += 1
    grafted = chain.relabel(mapping)
    g = Graph(list(part.graph.nodes) + list(grafted.nodes), part.graph.edges() + grafted.edges())
    tail = sorted(n for n in grafted.nodes if n not in (a, b))
    return g, list(part.graph.nodes), tail


def gen_disjoint(*graphs: Graph) -> Graph:
    """Disjoint union, relabelling each graph onto the next free ids in order."""
    nodes: list[int] = []
    edges: list[Edge] = []
    offset = 0
    for g in graphs:
        mapping = {n: offset + i for i, n in enumerate(g.nodes)}
        moved = g.relabel(mapping)
        nodes.extend(moved.nodes)
        edges.extend(moved.edges())
        offset += len(g)
    return Graph(nodes, edges)
