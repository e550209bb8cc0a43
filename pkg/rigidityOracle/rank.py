from __future__ import annotations

import logging
import os
from fractions import Fraction
from typing import Optional

import numpy as np

from graphModel import Graph

logger = logging.getLogger("rigidityOracle.rank")

RANK_TOLERANCE = 1e-8
REPETITIONS = 3
EXACT_NODE_LIMIT = 10
COORD_RANGE = 1 << 20


def rigidity_matrix(g: Graph, coords: np.ndarray) -> np.ndarray:
    """|E| x 2|V| matrix whose row for uv holds p_u - p_v under u and p_v - p_u under v."""
    index = {n: i for i, n in enumerate(g.nodes)}
    edges = g.edges()
    m = np.zeros((len(edges), 2 * len(index)), dtype=coords.dtype)
    for row, (u, v) in enumerate(edges):
        i, j = index[u], index[v]
        diff = coords[i] - coords[j]
        m[row, 2 * i:2 * i + 2] = diff
        m[row, 2 * j:2 * j + 2] = -diff
    return m


def exact_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals by Gaussian elimination in exact fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    cols = len(m[0]) if m else 0
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        top = m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][c] != 0:
                f = m[r][c] / top[c]
                m[r] = [a - f * b for a, b in zip(m[r], top)]
        rank += 1
    return rank


def rank_is_rigid(
    g: Graph,
    repetitions: int = REPETITIONS,
    rng_seed: Optional[int] = None,
    tol: float = RANK_TOLERANCE,
    exact: Optional[bool] = None,
) -> bool:
    """Rigidity test: rank 2|V| - 3 at random coordinates.

    Small graphs, up to TRIBAR_EXACT_RANK_LIMIT nodes unless `exact` says
    otherwise, take one placement at random integer coordinates and an
    exact rank. Larger ones vote over floating-point placements.
    """
    n = len(g)
    if n <= 1:
        return True
    target = 2 * n - 3
    if g.num_edges < target:
        return False
    rng = np.random.default_rng(rng_seed)
    if exact is None:
        exact = n <= int(os.environ.get("TRIBAR_EXACT_RANK_LIMIT", EXACT_NODE_LIMIT))
    if exact:
        coords = rng.integers(-COORD_RANGE, COORD_RANGE, size=(n, 2))
        rank = exact_rank(rigidity_matrix(g, coords).tolist())
        logger.debug("Exact rank nodes=%d edges=%d rank=%d", n, g.num_edges, rank)
        return rank == target
    votes = 0
    for _ in range(repetitions):
        coords = rng.uniform(-1.0, 1.0, size=(n, 2))
        rank = np.linalg.matrix_rank(rigidity_matrix(g, coords), tol=tol)
        votes += int(rank == target)
    logger.debug("Rank test nodes=%d edges=%d votes=%d/%d", n, g.num_edges, votes, repetitions)
    return 2 * votes > repetitions
