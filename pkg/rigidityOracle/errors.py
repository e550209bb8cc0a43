class OracleError(ValueError):
    """Base class for rigidity oracle input errors."""


class TooSmall(OracleError):
    def __init__(self, what: str, nodes: int, minimum: int):
        super().__init__(f"{what} needs at least {minimum} nodes, got {nodes!r}")
        self.nodes = nodes
        self.minimum = minimum
