from __future__ import annotations

from typing import Optional

from .Graph import Graph
from .Triangle import Edge, Triangle
from .errors import IdenticalTriangles, NotATriangle


def enumerate_triangles(g: Graph) -> set[Triangle]:
    """Every 3-clique of `g`, each reported once in canonical form."""
    found: set[Triangle] = set()
    for u in g.nodes:
        higher = [v for v in g.neighbors(u) if v > u]
        for v in higher:
            for w in g.neighbors(v):
                if w > v and g.has_edge(u, w):
                    found.add(Triangle(u, v, w))
    return found


def triangles_at(g: Graph, node: int) -> list[Triangle]:
    """Triangles containing `node`, sorted canonically."""
    nb = g.neighbors(node)
    out = {Triangle.of(node, v, w) for i, v in enumerate(nb) for w in nb[i + 1:] if g.has_edge(v, w)}
    return sorted(out)


def shared_edge(t1: Triangle, t2: Triangle) -> Optional[Edge]:
    if t1 == t2:
        raise IdenticalTriangles(t1)
    common = sorted(set(t1.nodes) & set(t2.nodes))
    if len(common) == 2:
        return (common[0], common[1])
    return None


def require_triangle(g: Graph, nodes) -> Triangle:
    """Canonical Triangle for `nodes`, raising NotATriangle unless all three edges exist."""
    try:
        t = Triangle.of(*nodes)
    except (TypeError, ValueError):
        raise NotATriangle(nodes) from None
    if not all(n in g for n in t) or not all(g.has_edge(u, v) for u, v in t.edges()):
        raise NotATriangle(nodes)
    return t
