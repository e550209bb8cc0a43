class GraphError(ValueError):
    """Base class for malformed graph input."""


class SelfLoop(GraphError):
    def __init__(self, node: int):
        super().__init__(f"Self-loop on node {node!r}")
        self.node = node


class IdenticalTriangles(GraphError):
    def __init__(self, triangle):
        super().__init__(f"Cannot compare triangle {triangle} with itself")
        self.triangle = triangle


class NotATriangle(GraphError):
    def __init__(self, nodes):
        super().__init__(f"Nodes {tuple(nodes)!r} do not form a triangle")
        self.nodes = tuple(nodes)
