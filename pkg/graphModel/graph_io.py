from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Union

from .Graph import Graph, load_labelled
from .errors import GraphError

logger = logging.getLogger("graphModel.io")

FORMATS = ("json", "dot", "edgelist")


def parse_edgelist(text: str) -> Graph:
    """Parse `u v` lines; `#` starts a comment. Non-integer tokens become labels."""
    pairs: list[tuple[str, str]] = []
    isolated: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            isolated.append(parts[0])
        elif len(parts) == 2:
            pairs.append((parts[0], parts[1]))
        else:
            raise GraphError(f"Line {lineno}: expected 'u v', got {raw!r}")

    tokens = [t for p in pairs for t in p] + isolated
    if all(t.isdigit() for t in tokens):
        return Graph((int(t) for t in isolated), ((int(u), int(v)) for u, v in pairs))
    g = load_labelled(pairs)
    if isolated:
        labels = g.labels
        names = set(labels.values())
        extra = [t for t in dict.fromkeys(isolated) if t not in names]
        for offset, name in enumerate(extra):
            labels[len(g) + offset] = name
        g = Graph(labels, g.edges(), labels)
    return g


def parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphError(f"Invalid graph JSON: {e}") from e
    if isinstance(data, dict) and "graph" in data:
        data = data["graph"]
    if not isinstance(data, dict) or "edges" not in data:
        raise GraphError("Graph JSON must hold an 'edges' list")
    return Graph.from_dict(data)


def parse_graph(text: str, source: str = "") -> Graph:
    """JSON when `source` ends in .json or the text opens with a brace, else an edge list."""
    if source.endswith(".json") or text.lstrip().startswith("{"):
        g = parse_json(text)
    else:
        g = parse_edgelist(text)
    logger.debug("Loaded graph source=%s nodes=%d edges=%d", source or "-", len(g), g.num_edges)
    return g


def read_graph(path: Union[str, Path]) -> Graph:
    """Load a graph file."""
    return parse_graph(Path(path).read_text(), str(path))


def to_edgelist(g: Graph) -> str:
    lines = [f"# nodes={len(g)} edges={g.num_edges}"]
    lines += [str(n) for n in g.nodes if g.degree(n) == 0]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for n in g.nodes:
        lines.append(f'  {n} [label="{g.label(n)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_graph(g: Graph, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(g.to_dict(), indent=2) + "\n"
    if fmt == "dot":
        return to_dot(g)
    if fmt == "edgelist":
        return to_edgelist(g)
    raise ValueError(f"Unknown graph format {fmt!r}; expected one of {FORMATS}")
