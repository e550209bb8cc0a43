"""Centralized predicates for the triangle-stream graph classes.

All recognizers accept clean instances only: every triangle of a chain brings
one new node, a circuit's knot appears in its end triangles and nowhere else,
and a cycle is an induced ring of edge-sharing triangles.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

import networkx as nx

from graphModel import Edge, Graph, Triangle, edge_key, shared_edge

from .ClassLabel import ClassLabel
from .struct.StreamRole import StreamRole
from .struct.TriangleStream import TriangleStream

logger = logging.getLogger("barClasses.recognizers")


def _as_stream(stream) -> TriangleStream:
    return stream if isinstance(stream, TriangleStream) else TriangleStream.of(stream)


def _sharing_pairs(tris: Sequence[Triangle]) -> dict[tuple[int, int], Edge]:
    pairs = {}
    for i, j in combinations(range(len(tris)), 2):
        e = shared_edge(tris[i], tris[j])
        if e is not None:
            pairs[(i, j)] = e
    return pairs


def stream_roles(stream) -> list[StreamRole]:
    tris = list(_as_stream(stream))
    inner: dict[int, set[Edge]] = {i: set() for i in range(len(tris))}
    for (i, j), e in _sharing_pairs(tris).items():
        inner[i].add(e)
        inner[j].add(e)
    roles = []
    for i, t in enumerate(tris):
        sides = set(t.edges())
        roles.append(
            StreamRole(
                triangle=t,
                pendants=frozenset(t.opposite(e) for e in inner[i]),
                inner_sides=frozenset(inner[i]),
                outer_sides=frozenset(sides - inner[i]),
            )
        )
    return roles


def is_linked_stream(stream) -> bool:
    """Consecutive triangles share an edge, and each interior triangle uses two distinct ones."""
    s = _as_stream(stream)
    if len(s) == 0:
        return False
    links = [s.link(i) for i in range(len(s) - 1)]
    if any(e is None for e in links):
        return False
    return all(links[i] != links[i + 1] for i in range(len(links) - 1))


def _only_consecutive_share(tris: Sequence[Triangle], cyclic: bool) -> bool:
    m = len(tris)
    for i, j in _sharing_pairs(tris):
        if j == i + 1:
            continue
        if cyclic and i == 0 and j == m - 1:
            continue
        return False
    return True


def chain_pendants(stream) -> tuple[int, int]:
    """End pendants of a linked stream: T_1 opposite its first link, T_m opposite its last."""
    s = _as_stream(stream)
    if len(s) < 2:
        raise ValueError("End pendants need a stream of at least two triangles")
    return s.first.opposite(s.link(0)), s.last.opposite(s.link(len(s) - 2))


def is_triangle_chain(stream) -> bool:
    s = _as_stream(stream)
    if not is_linked_stream(s) or not _only_consecutive_share(list(s), cyclic=False):
        return False
    return len(s.nodes()) == len(s) + 2


def is_triangle_cycle(stream) -> bool:
    s = _as_stream(stream)
    m = len(s)
    if m < 3 or not is_linked_stream(s):
        return False
    closing = shared_edge(s.first, s.last)
    if closing is None or closing == s.link(0) or closing == s.link(m - 2):
        return False
    return _only_consecutive_share(list(s), cyclic=True)


def is_triangle_circuit(stream, knot: Optional[int] = None) -> bool:
    s = _as_stream(stream)
    m = len(s)
    if m < 3 or not is_linked_stream(s):
        return False
    if not _only_consecutive_share(list(s), cyclic=False):
        return False
    p, q = chain_pendants(s)
    if p != q or (knot is not None and knot != p):
        return False
    if any(p in t for t in s.triangles[1:-1]):
        return False
    return len(s.nodes()) == m + 1


def circuit_knot(stream) -> Optional[int]:
    s = _as_stream(stream)
    if not is_triangle_circuit(s):
        return None
    return chain_pendants(s)[0]


def is_triangle_bridge(g: Graph, stream, bridging_edge: Optional[Iterable[int]] = None) -> bool:
    s = _as_stream(stream)
    if len(s) < 2 or not is_triangle_chain(s):
        return False
    p, q = chain_pendants(s)
    if bridging_edge is not None and edge_key(*bridging_edge) != edge_key(p, q):
        return False
    return g.has_edge(p, q)


# ---------------------------------------------------------------------------
# Triangle trees
# ---------------------------------------------------------------------------

def _neighbors_within(tris: Sequence[Triangle]) -> dict[Triangle, list[Triangle]]:
    nbrs: dict[Triangle, list[Triangle]] = {t: [] for t in tris}
    for (i, j) in _sharing_pairs(tris):
        nbrs[tris[i]].append(tris[j])
        nbrs[tris[j]].append(tris[i])
    return nbrs


def triangle_tree_order(triangles: Iterable[Triangle]) -> Optional[list[Triangle]]:
    """An ordering where each later triangle shares an edge with exactly one earlier one, or None.

    Placement is monotone, so a greedy scan from the smallest triangle decides existence.
    """
    tris = sorted(set(triangles))
    if not tris:
        return None
    nbrs = _neighbors_within(tris)
    placed = [tris[0]]
    seen = {tris[0]}
    frontier = deque(nbrs[tris[0]])
    while frontier:
        t = frontier.popleft()
        if t in seen:
            continue
        if sum(1 for n in nbrs[t] if n in seen) != 1:
            return None
        seen.add(t)
        placed.append(t)
        frontier.extend(n for n in sorted(nbrs[t]) if n not in seen)
    return placed if len(placed) == len(tris) else None


def is_triangle_tree(stream, ordered: bool = True) -> bool:
    """True when the triangles form a triangle tree.

    With `ordered`, the stream's own order must witness it: each T_i (i >= 2)
    shares an edge with exactly one earlier triangle.
    """
    tris = list(_as_stream(stream))
    if not tris:
        return False
    if not ordered:
        return triangle_tree_order(tris) is not None
    for i in range(1, len(tris)):
        earlier = [t for t in tris[:i] if shared_edge(t, tris[i]) is not None]
        if len(earlier) != 1:
            return False
    return True


def leaf_triangles(triangles: Iterable[Triangle]) -> list[Triangle]:
    """Tree triangles with exactly one neighbour in the tree."""
    tris = sorted(set(triangles))
    nbrs = _neighbors_within(tris)
    return [t for t in tris if len(nbrs[t]) == 1]


def leaf_knots(triangles: Iterable[Triangle]) -> dict[Triangle, int]:
    tris = sorted(set(triangles))
    nbrs = _neighbors_within(tris)
    return {t: t.opposite(shared_edge(t, nbrs[t][0])) for t in tris if len(nbrs[t]) == 1}


def tree_pendants(triangles: Iterable[Triangle]) -> set[int]:
    tris = sorted(set(triangles))
    return {
        t.opposite(e)
        for (i, j), e in _sharing_pairs(tris).items()
        for t in (tris[i], tris[j])
    }


# ---------------------------------------------------------------------------
# Triangle nets
# ---------------------------------------------------------------------------

@dataclass
class NetVerdict:
    """Result of checking a triangle-net candidate.

    Parameters:
        ok: Whether every net condition holds.
        reason: The first violated condition, empty when ok.
        apex: An extended node every leaf knot reaches by extending paths.
        order: Extended nodes in an admissible attachment order.
    """

    ok: bool
    reason: str = ""
    apex: Optional[int] = None
    order: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "reason": self.reason, "apex": self.apex, "order": list(self.order)}


def verify_net(
    g: Graph,
    triangles: Iterable[Triangle],
    extended: Iterable[int],
    apex: Optional[int] = None,
) -> NetVerdict:
    tris = sorted(set(triangles))
    ext = list(dict.fromkeys(extended))
    if not tris or triangle_tree_order(tris) is None:
        return NetVerdict(False, "triangles do not form a triangle tree")
    tree_nodes = {n for t in tris for n in t}
    if len(tree_nodes) != len(tris) + 2:
        return NetVerdict(False, "triangle tree revisits a node")
    for t in tris:
        if not all(g.has_edge(u, v) for u, v in t.edges()):
            return NetVerdict(False, f"triangle {t} is not in the graph")
    tree_edges = {e for t in tris for e in t.edges()}
    for u, v in g.induced(tree_nodes).edges():
        if (u, v) not in tree_edges:
            return NetVerdict(False, f"edge {u}-{v} outside the tree triangles closes a triangle cycle, circuit or bridge")
    if not ext:
        return NetVerdict(False, "no extended node")
    for v in ext:
        if v in tree_nodes or v not in g:
            return NetVerdict(False, f"extended node {v} must be a graph node outside the tree")

    # Pendants of a single triangle are its three members.
    anchors = tree_pendants(tris) if len(tris) > 1 else set(tree_nodes)
    accepted: list[int] = []
    pending = sorted(ext)
    progress = True
    while pending and progress:
        progress = False
        for v in list(pending):
            hits = sum(1 for n in g.neighbors(v) if n in anchors or n in accepted)
            if hits >= 3:
                accepted.append(v)
                pending.remove(v)
                progress = True
    if pending:
        return NetVerdict(False, f"extended node {pending[0]} attaches to fewer than three pendants or extended nodes", order=accepted)

    ext_set = set(accepted)

    def extending(u: int, v: int) -> bool:
        return (u in ext_set and (v in ext_set or v in anchors)) or (v in ext_set and u in anchors)

    knots = set(leaf_knots(tris).values())
    candidates = [apex] if apex is not None else list(reversed(accepted))
    for a in candidates:
        if a not in ext_set:
            return NetVerdict(False, f"apex {a} is not an extended node", order=accepted)
        reached = {a}
        queue = deque([a])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if v not in reached and extending(u, v):
                    reached.add(v)
                    if v in ext_set:
                        queue.append(v)
        if knots <= reached:
            logger.debug("Net accepted apex=%d extended=%s", a, accepted)
            return NetVerdict(True, apex=a, order=accepted)
    missing = sorted(knots - reached) if apex is not None else sorted(knots)
    logger.debug("Net rejected: leaf knots %s unreachable", missing)
    return NetVerdict(False, f"leaf knots {missing} have no common extending-path apex", order=accepted)


# ---------------------------------------------------------------------------
# Wheels and classification
# ---------------------------------------------------------------------------

def wheel_hub(g: Graph) -> Optional[int]:
    """Hub of `g` if `g` is a wheel W_n (n >= 4), else None."""
    n = len(g)
    if n < 4 or g.num_edges != 2 * (n - 1):
        return None
    for h in g.nodes:
        if g.degree(h) != n - 1:
            continue
        rim = g.without_nodes([h])
        if all(rim.degree(r) == 2 for r in rim.nodes) and nx.is_connected(rim.to_networkx()):
            return h
    return None


def is_wheel(g: Graph) -> bool:
    return wheel_hub(g) is not None


def classify_stream(g: Graph, stream) -> ClassLabel:
    s = _as_stream(stream)
    if is_triangle_cycle(s):
        return ClassLabel.WHEEL if is_wheel(s.to_graph()) else ClassLabel.CYCLE
    if is_triangle_circuit(s):
        return ClassLabel.CIRCUIT
    if is_triangle_bridge(g, s):
        return ClassLabel.BRIDGE
    if is_triangle_chain(s):
        return ClassLabel.CHAIN
    if is_triangle_tree(s, ordered=False):
        return ClassLabel.TREE
    return ClassLabel.NONE
