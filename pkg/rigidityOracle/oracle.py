"""Generic global rigidity in the plane: three-connected and redundantly rigid."""
from __future__ import annotations

import logging
import os
from itertools import combinations
from typing import Optional

import networkx as nx

from graphModel import Graph

from .PebbleGame import PebbleGame
from .RigidityVerdict import RigidityVerdict
from .errors import TooSmall

logger = logging.getLogger("rigidityOracle.oracle")

DEFAULT_PAIR_SCAN_LIMIT = 64


def _pair_scan_limit() -> int:
    return int(os.environ.get("TRIBAR_PAIR_SCAN_LIMIT", DEFAULT_PAIR_SCAN_LIMIT))


def is_rigid(g: Graph) -> bool:
    if len(g) < 2:
        raise TooSmall("Rigidity test", len(g), 2)
    return PebbleGame.play(g).is_rigid()


def is_redundantly_rigid(g: Graph) -> bool:
    if len(g) < 4:
        raise TooSmall("Redundant rigidity test", len(g), 4)
    if not PebbleGame.play(g).is_rigid():
        return False
    for e in g.edges():
        if not PebbleGame.play(g, skip=e).is_rigid():
            logger.debug("Rigidity lost without edge %s", e)
            return False
    return True


def is_three_connected(g: Graph, pair_scan_limit: Optional[int] = None) -> bool:
    """No vertex cut of size two or less.

    Graphs up to the pair-scan limit remove every node and node pair in turn;
    larger graphs use networkx's flow-based node connectivity.
    """
    n = len(g)
    if n < 4:
        raise TooSmall("3-connectivity test", n, 4)
    limit = _pair_scan_limit() if pair_scan_limit is None else pair_scan_limit
    nxg = g.to_networkx()
    if n > limit:
        return nx.node_connectivity(nxg) >= 3
    if not nx.is_connected(nxg):
        return False
    for cut in list(combinations(g.nodes, 1)) + list(combinations(g.nodes, 2)):
        rest = nxg.subgraph(set(g.nodes) - set(cut))
        if not nx.is_connected(rest):
            logger.debug("Vertex cut %s", cut)
            return False
    return True


def is_globally_rigid(g: Graph) -> RigidityVerdict:
    n = len(g)
    if n < 1:
        raise TooSmall("Global rigidity test", n, 1)
    if n <= 3:
        complete = g.is_complete()
        return RigidityVerdict(
            rigid=complete,
            redundantly_rigid=False,
            three_connected=False,
            globally_rigid=complete,
        )
    rigid = is_rigid(g)
    redundant = rigid and is_redundantly_rigid(g)
    connected3 = is_three_connected(g)
    verdict = RigidityVerdict(
        rigid=rigid,
        redundantly_rigid=redundant,
        three_connected=connected3,
        globally_rigid=connected3 and redundant,
    )
    logger.debug("Verdict nodes=%d edges=%d %s", n, g.num_edges, verdict)
    return verdict
