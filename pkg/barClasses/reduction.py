from __future__ import annotations

import logging

from graphModel import Edge, Graph, edge_key, shared_edge

from .ClassLabel import ClassLabel
from .errors import NotCycleOrCircuit
from .recognizers import (
    _as_stream,
    circuit_knot,
    is_triangle_bridge,
    is_triangle_circuit,
    is_triangle_cycle,
    is_wheel,
)
from .struct.TriangleStream import TriangleStream

logger = logging.getLogger("barClasses.reduction")


def _cycle_outer_side(s: TriangleStream, j: int) -> Edge:
    m = len(s)
    inner = {shared_edge(s[j], s[(j - 1) % m]), shared_edge(s[j], s[(j + 1) % m])}
    (outer,) = set(s[j].edges()) - inner
    return outer


def _run_around(s: TriangleStream, v: int) -> list[int]:
    """Indices of the triangles holding `v`, in cyclic stream order from the start of their run."""
    m = len(s)
    holding = [i for i in range(m) if v in s[i]]
    starts = [i for i in holding if (i - 1) % m not in holding]
    if not starts:
        return holding
    start = starts[0]
    return [(start + k) % m for k in range(len(holding))]


def _reduce_cycle(g: Graph, s: TriangleStream) -> tuple[ClassLabel, Graph, TriangleStream]:
    union = s.to_graph()
    if is_wheel(union):
        return ClassLabel.WHEEL, Graph(g.nodes, union.edges()), s

    m = len(s)
    candidates: list[int] = []
    for v in sorted(union.nodes, key=lambda n: (-union.degree(n), n)):
        d = union.degree(v)
        if d < 4:
            continue
        run = _run_around(s, v)
        candidates.append(run[1] if d == 4 and len(run) >= 2 else run[0])
    candidates.extend(range(m))

    tried: set[int] = set()
    for j in candidates:
        if j in tried:
            continue
        tried.add(j)
        e = _cycle_outer_side(s, j)
        rest = s.rotated((j + 1) % m).without(m - 1)
        if is_triangle_circuit(rest) and rest.edges() == set(union.edges()) - {e}:
            logger.debug("Cycle reduced to circuit by deleting %s of %s", e, s[j])
            return ClassLabel.CIRCUIT, Graph(g.nodes, rest.edges()), rest
    raise NotCycleOrCircuit(f"Triangle cycle of {m} triangles has no spanning wheel or circuit by side deletion")


def _reduce_circuit(g: Graph, s: TriangleStream) -> tuple[ClassLabel, Graph, TriangleStream]:
    v = circuit_knot(s)
    f = s.link(1)
    w = s[1].opposite(f)
    (x,) = [n for n in s.first if n not in (v, w)]
    e = edge_key(v, x)
    rest = TriangleStream(s.triangles[1:])
    sub = Graph(g.nodes, set(s.edges()) - {e})
    if not is_triangle_bridge(sub, rest, (v, w)):
        raise NotCycleOrCircuit(f"Deleting {e} from the circuit leaves no triangle bridge")
    logger.debug("Circuit reduced to bridge by deleting %s", e)
    return ClassLabel.BRIDGE, sub, rest


def reduce_with_stream(g: Graph, stream) -> tuple[ClassLabel, Graph, TriangleStream]:
    """Like spanning_reduction, also returning the stream that witnesses the result."""
    s = _as_stream(stream)
    if not all(g.has_edge(u, v) for u, v in s.edges()):
        raise NotCycleOrCircuit("Stream triangles are not all in the graph")
    if is_triangle_cycle(s):
        return _reduce_cycle(g, s)
    if is_triangle_circuit(s):
        return _reduce_circuit(g, s)
    raise NotCycleOrCircuit(f"Stream of {len(s)} triangles is neither a triangle cycle nor a triangle circuit")


def spanning_reduction(g: Graph, stream) -> tuple[ClassLabel, Graph]:
    """Spanning wheel or circuit of a triangle cycle; spanning bridge of a triangle circuit.

    A cycle that is not itself a wheel loses the outer side of one triangle:
    the middle of the three triangles around a degree-4 node, or the first of
    the run around a node of higher degree. A circuit loses the outer side of
    T_1 that avoids the pendant of T_2.
    """
    kind, sub, _ = reduce_with_stream(g, stream)
    return kind, sub
