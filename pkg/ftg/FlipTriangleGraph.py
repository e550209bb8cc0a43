from __future__ import annotations

import json
import logging
from collections import defaultdict
from itertools import combinations
from typing import Iterable, Mapping, Optional

import networkx as nx

from graphModel import Edge, Graph, Triangle, enumerate_triangles, shared_edge

logger = logging.getLogger("ftg.graph")


class FlipTriangleGraph:
    """Graph on the triangles of a host graph; two triangles are adjacent when they share an edge.

    Vertices are canonical triangles, so two graphs built from the same host
    compare equal whatever order their triangles were found in.
    """

    def __init__(self, vertices: Iterable[Triangle], adjacency: Optional[Mapping[Triangle, Iterable[Triangle]]] = None):
        self.vertices: list[Triangle] = sorted(set(vertices))
        adjacency = adjacency or {}
        self.adjacency: dict[Triangle, set[Triangle]] = {t: set(adjacency.get(t, ())) for t in self.vertices}
        for t, nbrs in self.adjacency.items():
            for n in nbrs:
                if n not in self.adjacency:
                    raise ValueError(f"Adjacent triangle {n} of {t} is not a vertex")
                self.adjacency[n].add(t)

    @classmethod
    def build(cls, g: Graph) -> "FlipTriangleGraph":
        by_edge: dict[Edge, list[Triangle]] = defaultdict(list)
        tris = enumerate_triangles(g)
        for t in tris:
            for e in t.edges():
                by_edge[e].append(t)
        adjacency: dict[Triangle, set[Triangle]] = {t: set() for t in tris}
        for group in by_edge.values():
            for t1, t2 in combinations(group, 2):
                adjacency[t1].add(t2)
                adjacency[t2].add(t1)
        ftg = cls(tris, adjacency)
        logger.debug("Built FTG vertices=%d edges=%d", len(ftg), ftg.num_edges)
        return ftg

    # -- Queries -------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, t: object) -> bool:
        return t in self.adjacency

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FlipTriangleGraph):
            return NotImplemented
        return self.adjacency == other.adjacency

    def __repr__(self) -> str:
        return f"FlipTriangleGraph(vertices={len(self)}, edges={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return sum(len(n) for n in self.adjacency.values()) // 2

    def neighbors(self, t: Triangle) -> list[Triangle]:
        return sorted(self.adjacency[t])

    def degree(self, t: Triangle) -> int:
        return len(self.adjacency[t])

    def edges(self) -> list[tuple[Triangle, Triangle]]:
        return sorted((t, n) for t in self.vertices for n in self.adjacency[t] if t < n)

    def shared_edge(self, t1: Triangle, t2: Triangle) -> Edge:
        """Host edge behind the FTG edge t1-t2."""
        if t2 not in self.adjacency.get(t1, ()):
            raise ValueError(f"Triangles {t1} and {t2} are not adjacent")
        return shared_edge(t1, t2)

    def component(self, t: Triangle) -> set[Triangle]:
        return set(nx.node_connected_component(self.to_networkx(), t))

    def components(self) -> list[set[Triangle]]:
        return sorted((set(c) for c in nx.connected_components(self.to_networkx())), key=min)

    def induced(self, tris: Iterable[Triangle]) -> nx.Graph:
        return self.to_networkx().subgraph(set(tris)).copy()

    # -- Conversion ----------------------------------------------------------

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        return g

    def to_dict(self) -> dict:
        return {
            "vertices": [t.to_list() for t in self.vertices],
            "edges": [[t1.to_list(), t2.to_list()] for t1, t2 in self.edges()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "FlipTriangleGraph":
        vertices = [Triangle.from_list(t) for t in data["vertices"]]
        adjacency: dict[Triangle, set[Triangle]] = {t: set() for t in vertices}
        for a, b in data.get("edges", []):
            t1, t2 = Triangle.from_list(a), Triangle.from_list(b)
            adjacency[t1].add(t2)
            adjacency[t2].add(t1)
        return cls(vertices, adjacency)

    def to_dot(self, name: str = "FTG") -> str:
        def node_id(t: Triangle) -> str:
            return f"t{t.a}_{t.b}_{t.c}"

        lines = [f"graph {name} {{"]
        for t in self.vertices:
            lines.append(f'  {node_id(t)} [label="{t}"];')
        for t1, t2 in self.edges():
            u, v = shared_edge(t1, t2)
            lines.append(f'  {node_id(t1)} -- {node_id(t2)} [label="{u}-{v}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_ftg(g: Graph) -> FlipTriangleGraph:
    return FlipTriangleGraph.build(g)
