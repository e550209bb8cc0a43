class BarClassError(ValueError):
    """Base class for generator and recognizer input errors."""


class TooSmall(BarClassError):
    def __init__(self, what: str, value: int, minimum: int):
        super().__init__(f"{what} needs at least {minimum}, got {value!r}")
        self.value = value
        self.minimum = minimum


class InvalidPlan(BarClassError):
    pass


class InsufficientLeaves(BarClassError):
    def __init__(self, leaves: int, needed: int = 3, what: str = "A notch"):
        super().__init__(f"{what} needs at least {needed} leaf knots, the tree has {leaves}")
        self.leaves = leaves
        self.needed = needed


class NotANet(BarClassError):
    def __init__(self, reason: str):
        super().__init__(f"Not a triangle net: {reason}")
        self.reason = reason


class SeedNotTriangle(BarClassError):
    def __init__(self, nodes):
        super().__init__(f"Seed {tuple(nodes)!r} is not a triangle of the graph")
        self.nodes = tuple(nodes)


class NotCycleOrCircuit(BarClassError):
    pass


class BadGeneratorSpec(BarClassError):
    def __init__(self, token: str, detail: str = ""):
        msg = f"Bad generator spec token {token!r}"
        super().__init__(f"{msg}: {detail}" if detail else msg)
        self.token = token
