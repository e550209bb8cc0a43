"""Read-only views of what Phase II left in the network.

Nothing here feeds the protocol: the report and the tests read the tree,
the bar ids and the admitted bars back out of the node states.
"""
from __future__ import annotations

from typing import TYPE_CHECKING

from ftg import FlipTriangleTree
from graphModel import Triangle

from .struct.BarId import BarId
from .struct.ElementaryBar import ElementaryBar

if TYPE_CHECKING:
    from .Network import Network


def distributed_ftt(net: "Network", root: Triangle) -> FlipTriangleTree:
    """The tree the parent and children fields describe."""
    tree = FlipTriangleTree(root=root)
    for state in net.states.values():
        for t, rec in state.trngls.items():
            if not rec.visited:
                continue
            tree.depth[t] = rec.depth
            tree.children[t] = list(rec.children)
            if rec.parent is not None:
                tree.parent[t] = rec.parent
    return tree


def bar_holders(net: "Network") -> tuple[dict[BarId, set[Triangle]], dict[BarId, set[int]]]:
    """Triangles and nodes whose elementLst holds each bar id."""
    tris: dict[BarId, set[Triangle]] = {}
    nodes: dict[BarId, set[int]] = {}
    for v, state in net.states.items():
        for bar in state.element_lst:
            nodes.setdefault(bar, set()).add(v)
        for t, rec in state.trngls.items():
            for bar in rec.element_lst:
                tris.setdefault(bar, set()).add(t)
    return tris, nodes


def elementary_bars(net: "Network") -> list[ElementaryBar]:
    """Bars admitted where their branches met and wheels admitted at hubs, one per node set."""
    found: list[ElementaryBar] = []
    for state in net.states.values():
        found.extend(state.wheels.values())
        for rec in state.trngls.values():
            found.extend(b for b in rec.judged.values() if b is not None)
    seen: set[frozenset[int]] = set()
    out = []
    for bar in sorted(found, key=lambda b: b.bar_id):
        if bar.nodes in seen:
            continue
        seen.add(bar.nodes)
        out.append(bar)
    return out
