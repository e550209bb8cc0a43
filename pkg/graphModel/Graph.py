from __future__ import annotations

import json
from typing import Iterable, Mapping, Optional

import networkx as nx

from .Triangle import Edge, edge_key
from .errors import GraphError, SelfLoop


class Graph:
    """Undirected simple graph over integer node ids.

    Instances are immutable; every mutating helper returns a new Graph.
    An optional label table maps node ids back to external names.
    """

    __slots__ = ("_adj", "_labels", "_edge_count")

    def __init__(
        self,
        nodes: Iterable[int] = (),
        edges: Iterable[tuple[int, int]] = (),
        labels: Optional[Mapping[int, str]] = None,
    ):
        adj: dict[int, set[int]] = {}
        for n in nodes:
            n = int(n)
            if n < 0:
                raise GraphError(f"Node ids must be non-negative, got {n!r}")
            adj.setdefault(n, set())
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise SelfLoop(u)
            if u < 0 or v < 0:
                raise GraphError(f"Node ids must be non-negative, got {(u, v)!r}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj: dict[int, tuple[int, ...]] = {n: tuple(sorted(adj[n])) for n in sorted(adj)}
        self._edge_count = sum(len(nb) for nb in self._adj.values()) // 2
        self._labels: dict[int, str] = dict(labels or {})

    # -- Queries -------------------------------------------------------------

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(self._adj)

    @property
    def labels(self) -> dict[int, str]:
        return dict(self._labels)

    def label(self, node: int) -> str:
        return self._labels.get(node, str(node))

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, node: object) -> bool:
        return node in self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.nodes, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self)}, |E|={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return self._edge_count

    def neighbors(self, node: int) -> tuple[int, ...]:
        return self._adj[node]

    def degree(self, node: int) -> int:
        return len(self._adj[node])

    def has_edge(self, u: int, v: int) -> bool:
        nb = self._adj.get(u)
        return nb is not None and v in nb

    def edges(self) -> list[Edge]:
        return [(u, v) for u, nb in self._adj.items() for v in nb if u < v]

    def common_neighbors(self, u: int, v: int) -> set[int]:
        return set(self._adj[u]).intersection(self._adj[v])

    def is_complete(self) -> bool:
        n = len(self)
        return self.num_edges == n * (n - 1) // 2

    # -- Derived graphs ------------------------------------------------------

    def induced(self, nodes: Iterable[int]) -> "Graph":
        keep = {n for n in nodes if n in self._adj}
        edges = [(u, v) for u, v in self.edges() if u in keep and v in keep]
        return Graph(keep, edges, {n: l for n, l in self._labels.items() if n in keep})

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.nodes, list(self.edges()) + list(extra), self._labels)

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        drop = {edge_key(u, v) for u, v in removed}
        return Graph(self.nodes, [e for e in self.edges() if e not in drop], self._labels)

    def without_nodes(self, removed: Iterable[int]) -> "Graph":
        drop = set(removed)
        return self.induced(n for n in self.nodes if n not in drop)

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        """Rename nodes; nodes missing from `mapping` keep their id."""
        def m(n: int) -> int:
            return mapping.get(n, n)

        return Graph(
            (m(n) for n in self.nodes),
            ((m(u), m(v)) for u, v in self.edges()),
            {m(n): l for n, l in self._labels.items()},
        )

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        return cls(g.nodes, g.edges)

    # -- Serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        d: dict = {"nodes": list(self.nodes), "edges": [list(e) for e in self.edges()]}
        if self._labels:
            d["labels"] = {str(n): l for n, l in sorted(self._labels.items())}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        labels = {int(k): str(v) for k, v in data.get("labels", {}).items()}
        return cls(data.get("nodes", []), [tuple(e) for e in data.get("edges", [])], labels)


def load_graph(edges: Iterable[tuple[int, int]], nodes: Iterable[int] = ()) -> Graph:
    """Build a Graph from an edge list that may hold duplicates or reversed pairs."""
    return Graph(nodes, edges)


def load_labelled(pairs: Iterable[tuple[str, str]]) -> Graph:
    """Build a Graph from named endpoints, assigning dense ids in first-seen order."""
    ids: dict[str, int] = {}
    edges = []
    for u, v in pairs:
        for name in (u, v):
            if name not in ids:
                ids[name] = len(ids)
        edges.append((ids[u], ids[v]))
    return Graph(ids.values(), edges, {i: name for name, i in ids.items()})
