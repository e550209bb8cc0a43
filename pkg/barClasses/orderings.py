from __future__ import annotations

import logging
import os
import random
from typing import Iterable, Optional, Sequence

import networkx as nx

from graphModel import Graph, NotATriangle, Triangle, require_triangle

from .errors import InvalidPlan, SeedNotTriangle, TooSmall

logger = logging.getLogger("barClasses.orderings")

DEFAULT_EXHAUSTIVE_LIMIT = 12


def _exhaustive_limit() -> int:
    return int(os.environ.get("TRIBAR_EXHAUSTIVE_LIMIT", DEFAULT_EXHAUSTIVE_LIMIT))


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def gen_trilateration(n: int, rng_seed: int) -> tuple[Graph, list[int]]:
    """K3 on 0, 1, 2; every later node joins three or four random earlier nodes."""
    if n < 4:
        raise TooSmall("trilateration graph", n, 4)
    rng = random.Random(rng_seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    for u in range(3, n):
        k = min(u, rng.choice((3, 4)))
        edges.extend((u, v) for v in rng.sample(range(u), k))
    return Graph(range(n), edges), list(range(n))


def gen_wheel_extension(
    wheel_sizes: Sequence[int],
    rng_seed: int = 0,
    overlap: int = 3,
) -> tuple[Graph, list[int], list[tuple[int, tuple[int, ...]]]]:
    """Chain of wheels, each glued on an unused face of the one before.

    A face is (hub, r_i, r_{i+1}). The new wheel takes one face node as hub and
    the other two as consecutive rim nodes, so successive wheels share exactly
    three nodes. Returns the graph, the ordering and (hub, rim) per wheel.
    """
    if not wheel_sizes:
        raise InvalidPlan("A wheel extension needs at least one wheel")
    if overlap != 3:
        raise InvalidPlan(f"Successive wheels must share 3 nodes, got overlap={overlap!r}")
    for s in wheel_sizes:
        if s < 4:
            raise InvalidPlan(f"Wheel size must be at least 4, got {s!r}")

    rng = random.Random(rng_seed)
    first = wheel_sizes[0]
    hub, rim = 0, tuple(range(1, first))
    wheels = [(hub, rim)]
    ordering = list(range(first))
    next_id = first
    used_faces: set[Triangle] = set()
    edges = []

    def add_wheel(h: int, r: tuple[int, ...]) -> None:
        edges.extend((h, x) for x in r)
        edges.extend((r[i], r[(i + 1) % len(r)]) for i in range(len(r)))

    add_wheel(hub, rim)
    for size in wheel_sizes[1:]:
        prev_hub, prev_rim = wheels[-1]
        faces = [
            Triangle.of(prev_hub, prev_rim[i], prev_rim[(i + 1) % len(prev_rim)])
            for i in range(len(prev_rim))
        ]
        free = [f for f in faces if f not in used_faces]
        if not free:
            raise InvalidPlan(f"Wheel {wheels[-1]!r} has no unused face left")
        face = rng.choice(free)
        used_faces.add(face)
        nodes = list(face.nodes)
        rng.shuffle(nodes)
        h, a, b = nodes
        fresh = tuple(range(next_id, next_id + size - 3))
        next_id += len(fresh)
        r = (a, b) + fresh
        add_wheel(h, r)
        wheels.append((h, r))
        ordering.extend(fresh)

    g = Graph(range(next_id), edges)
    logger.debug("Generated wheel extension sizes=%s nodes=%d", list(wheel_sizes), len(g))
    return g, ordering, wheels


# ---------------------------------------------------------------------------
# Ordering checks
# ---------------------------------------------------------------------------

def _seed(g: Graph, seed) -> Triangle:
    try:
        return require_triangle(g, seed)
    except NotATriangle:
        raise SeedNotTriangle(seed) from None


def is_trilateration_ordering(g: Graph, ordering: Sequence[int]) -> bool:
    if sorted(ordering) != list(g.nodes) or len(ordering) < 3:
        return False
    a, b, c = ordering[:3]
    if not (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
        return False
    placed = set(ordering[:3])
    for u in ordering[3:]:
        if sum(1 for v in g.neighbors(u) if v in placed) < 3:
            return False
        placed.add(u)
    return True


def _greedy_closure(g: Graph, start: Iterable[int]) -> list[int]:
    order = list(start)
    placed = set(order)
    grown = True
    while grown:
        grown = False
        for u in g.nodes:
            if u not in placed and sum(1 for v in g.neighbors(u) if v in placed) >= 3:
                order.append(u)
                placed.add(u)
                grown = True
    return order


def _exhaustive(g: Graph, start: list[int]) -> Optional[list[int]]:
    target = len(g)
    dead: set[frozenset[int]] = set()

    def search(order: list[int], placed: frozenset[int]) -> Optional[list[int]]:
        if len(order) == target:
            return order
        if placed in dead:
            return None
        for u in g.nodes:
            if u in placed or sum(1 for v in g.neighbors(u) if v in placed) < 3:
                continue
            found = search(order + [u], placed | {u})
            if found is not None:
                return found
        dead.add(placed)
        return None

    return search(list(start), frozenset(start))


def trilateration_ordering(
    g: Graph,
    seed,
    exhaustive_limit: Optional[int] = None,
) -> tuple[Optional[list[int]], bool]:
    """A trilateration ordering starting at `seed`, or None, plus whether the search was exhaustive."""
    t = _seed(g, seed)
    limit = _exhaustive_limit() if exhaustive_limit is None else exhaustive_limit
    start = list(t.nodes)
    if len(g) <= limit:
        return _exhaustive(g, start), True
    order = _greedy_closure(g, start)
    logger.warning("Trilateration ordering decided by greedy peeling (heuristic) nodes=%d limit=%d", len(g), limit)
    return (order if len(order) == len(g) else None), False


def has_trilateration_ordering(g: Graph, seed, exhaustive_limit: Optional[int] = None) -> bool:
    order, _ = trilateration_ordering(g, seed, exhaustive_limit)
    return order is not None


def _cycle_hits(sub: nx.Graph, through: Optional[int], earlier: set[int], need: int) -> bool:
    for cycle in nx.simple_cycles(sub):
        if len(cycle) < 3:
            continue
        if through is not None and through not in cycle:
            continue
        if sum(1 for x in cycle if x in earlier) >= need:
            return True
    return False


def _in_wheel_with(g: Graph, nxg: nx.Graph, u: int, earlier: set[int]) -> bool:
    for h in (u,) + g.neighbors(u):
        sub = nxg.subgraph(g.neighbors(h))
        if h == u:
            if _cycle_hits(sub, None, earlier, 3):
                return True
        else:
            need = 3 - (1 if h in earlier else 0)
            if _cycle_hits(sub, u, earlier, need):
                return True
    return False


def has_wheel_extension_ordering(g: Graph, ordering: Sequence[int]) -> bool:
    """Check that each u_i, i > 3, lies in a wheel subgraph with at least three earlier nodes."""
    if sorted(ordering) != list(g.nodes) or len(ordering) < 3:
        return False
    a, b, c = ordering[:3]
    if not (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
        return False
    nxg = g.to_networkx()
    earlier = set(ordering[:3])
    for u in ordering[3:]:
        if not _in_wheel_with(g, nxg, u, earlier):
            return False
        earlier.add(u)
    return True
