from .Graph import Graph, load_graph, load_labelled
from .Triangle import Edge, Triangle, edge_key
from .errors import GraphError, IdenticalTriangles, NotATriangle, SelfLoop
from .graph_io import format_graph, parse_edgelist, parse_graph, parse_json, read_graph
from .triangles import enumerate_triangles, require_triangle, shared_edge, triangles_at

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "IdenticalTriangles",
    "NotATriangle",
    "SelfLoop",
    "Triangle",
    "edge_key",
    "enumerate_triangles",
    "format_graph",
    "load_graph",
    "load_labelled",
    "parse_edgelist",
    "parse_graph",
    "parse_json",
    "read_graph",
    "require_triangle",
    "shared_edge",
    "triangles_at",
]
