from __future__ import annotations

import logging

from graphModel import Edge, Graph, Triangle

from .errors import InvalidPlan, TooSmall
from .struct.TriangleStream import TriangleStream

logger = logging.getLogger("barClasses.generators")


def _stream_graph(triangles: list[Triangle], extra: list[Edge] = ()) -> tuple[Graph, TriangleStream]:
    stream = TriangleStream(tuple(triangles))
    g = Graph(stream.nodes(), list(stream.edges()) + list(extra))
    return g, stream


def gen_wheel(n: int) -> Graph:
    """W_n: hub 0 joined to the rim cycle 1 .. n-1."""
    if n < 4:
        raise TooSmall("wheel", n, 4)
    rim = list(range(1, n))
    edges = [(0, r) for r in rim] + [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return Graph(range(n), edges)


def gen_triangle_chain(m: int) -> tuple[Graph, TriangleStream]:
    """Zigzag chain on nodes 0 .. m+1 with T_i = (i-1, i, i+1)."""
    if m < 1:
        raise TooSmall("triangle chain", m, 1)
    return _stream_graph([Triangle(i, i + 1, i + 2) for i in range(m)])


def gen_triangle_cycle(m: int, zigzag: bool = False) -> tuple[Graph, TriangleStream]:
    """Triangle cycle of m triangles.

    The default is the wheel W_{m+1} with faces (0, i, i+1) in rim order.
    `zigzag` builds the annulus between an inner and an outer ring of m/2
    nodes each; every node then has degree 4 and no spanning wheel exists.
    """
    if m < 3:
        raise TooSmall("triangle cycle", m, 3)
    if not zigzag:
        tris = [Triangle.of(0, i, i + 1) for i in range(1, m)] + [Triangle.of(0, m, 1)]
        return _stream_graph(tris)
    if m < 8 or m % 2:
        raise InvalidPlan(f"Zigzag triangle cycle needs an even m >= 8, got {m!r}")
    k = m // 2
    inner = list(range(k))
    outer = list(range(k, 2 * k))
    tris = []
    for i in range(k):
        j = (i + 1) % k
        tris.append(Triangle.of(inner[i], outer[i], inner[j]))
        tris.append(Triangle.of(outer[i], inner[j], outer[j]))
    return _stream_graph(tris)


def gen_triangle_circuit(m: int) -> tuple[Graph, TriangleStream, int]:
    """Chain T_1 .. T_{m-1} on nodes 0 .. m closed by T_m = (m-1, m, 0); the knot is 0.

    Three triangles cannot form a circuit: sharing a pendant forces the end
    triangles to share an edge. For m >= 6 the union holds no other triangle.
    """
    if m < 4:
        raise TooSmall("triangle circuit", m, 4)
    tris = [Triangle(i, i + 1, i + 2) for i in range(m - 1)] + [Triangle.of(m - 1, m, 0)]
    g, stream = _stream_graph(tris)
    return g, stream, 0


def gen_triangle_bridge(m: int) -> tuple[Graph, TriangleStream, Edge]:
    """Chain of m triangles plus the edge joining its end pendants 0 and m+1."""
    if m < 2:
        raise TooSmall("triangle bridge", m, 2)
    bridging = (0, m + 1)
    g, stream = _stream_graph([Triangle(i, i + 1, i + 2) for i in range(m)], [bridging])
    return g, stream, bridging
