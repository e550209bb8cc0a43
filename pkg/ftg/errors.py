class FtgError(ValueError):
    """Base class for flip-triangle graph input errors."""


class RootAbsent(FtgError):
    def __init__(self, root):
        super().__init__(f"Root triangle {root} is not a vertex of the flip-triangle graph")
        self.root = root
