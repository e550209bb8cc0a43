"""Equivalences between triangle streams in a graph and subgraphs of its FTG.

Each check evaluates both sides independently, the stream side with the bar
recognizers and the FTG side with networkx, and returns whether they agree.
"""
from __future__ import annotations

import logging
from typing import Optional

import networkx as nx

from barClasses import TriangleStream, is_linked_stream, is_triangle_cycle, is_triangle_tree
from graphModel import Graph, Triangle, enumerate_triangles, shared_edge

from .FlipTriangleGraph import FlipTriangleGraph
from .FlipTriangleTree import ftt

logger = logging.getLogger("ftg.propositions")


def _stream(stream) -> TriangleStream:
    return stream if isinstance(stream, TriangleStream) else TriangleStream.of(stream)


def is_ftg_cycle(ftg: FlipTriangleGraph, stream) -> bool:
    """The stream's triangles induce a cycle in the FTG, visited in stream order."""
    tris = list(_stream(stream))
    n = len(tris)
    if n < 3 or any(t not in ftg for t in tris):
        return False
    sub = ftg.induced(tris)
    ring = {frozenset((tris[i], tris[(i + 1) % n])) for i in range(n)}
    return {frozenset(e) for e in sub.edges()} == ring


def is_ftg_tree(ftg: FlipTriangleGraph, tris) -> bool:
    tris = set(tris)
    if not tris or any(t not in ftg for t in tris):
        return False
    return nx.is_tree(ftg.induced(tris))


def is_maximal_triangle_tree(g: Graph, stream) -> bool:
    """A triangle tree that no further triangle of `g` extends."""
    tris = list(_stream(stream))
    if not is_triangle_tree(tris, ordered=False):
        return False
    present = set(tris)
    for t in sorted(enumerate_triangles(g) - present):
        if is_triangle_tree(tris + [t], ordered=False):
            return False
    return True


def is_maximal_ftg_tree(ftg: FlipTriangleGraph, tris) -> bool:
    """Induced tree of the FTG that no vertex joins through exactly one neighbour."""
    tris = set(tris)
    if not is_ftg_tree(ftg, tris):
        return False
    for t in ftg.vertices:
        if t in tris:
            continue
        if sum(1 for n in ftg.adjacency[t] if n in tris) == 1:
            return False
    return True


def grow_maximal_tree(g: Graph, root: Optional[Triangle] = None) -> TriangleStream:
    """Greedy triangle tree from `root`: add the smallest triangle touching the tree through one edge until none is left."""
    tris = sorted(enumerate_triangles(g))
    if not tris:
        raise ValueError("Graph has no triangles to grow a tree from")
    order = [root if root is not None else tris[0]]
    placed = set(order)
    grew = True
    while grew:
        grew = False
        for t in tris:
            if t in placed:
                continue
            touching = [p for p in order if shared_edge(p, t) is not None]
            if len(touching) == 1:
                order.append(t)
                placed.add(t)
                grew = True
                break
    return TriangleStream(tuple(order))


def check_prop1(g: Graph, stream, ftg: Optional[FlipTriangleGraph] = None) -> bool:
    """Triangle cycle of length n in `g` exactly when the stream is an n-cycle of the FTG."""
    s = _stream(stream)
    ftg = ftg or FlipTriangleGraph.build(g)
    lhs = is_triangle_cycle(s)
    rhs = is_linked_stream(s) and is_ftg_cycle(ftg, s)
    if lhs != rhs:
        logger.warning("Cycle equivalence fails stream=%s recognizer=%s ftg=%s", [str(t) for t in s], lhs, rhs)
    return lhs == rhs


def check_prop2(g: Graph, stream, ftg: Optional[FlipTriangleGraph] = None) -> bool:
    """Triangle tree in `g` exactly when the triangles induce a tree in the FTG."""
    s = _stream(stream)
    ftg = ftg or FlipTriangleGraph.build(g)
    lhs = is_triangle_tree(s, ordered=False)
    rhs = is_ftg_tree(ftg, s)
    if lhs != rhs:
        logger.warning("Tree equivalence fails stream=%s recognizer=%s ftg=%s", [str(t) for t in s], lhs, rhs)
    return lhs == rhs


def check_prop3(g: Graph, stream, ftg: Optional[FlipTriangleGraph] = None) -> bool:
    """Maximal triangle tree in `g` exactly when the triangles form a maximal tree of the FTG.

    When the component holding the triangles is itself a tree, a maximal tree
    must also cover the whole component, i.e. equal its FTT.
    """
    s = _stream(stream)
    ftg = ftg or FlipTriangleGraph.build(g)
    lhs = is_maximal_triangle_tree(g, s)
    rhs = is_maximal_ftg_tree(ftg, s)
    agree = lhs == rhs
    if agree and rhs:
        component = ftg.component(s.first)
        if nx.is_tree(ftg.induced(component)):
            agree = set(s) == set(ftt(ftg, s.first).depth)
    if not agree:
        logger.warning("Maximal tree equivalence fails stream=%s recognizer=%s ftg=%s", [str(t) for t in s], lhs, rhs)
    return agree
