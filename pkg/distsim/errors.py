from barClasses.errors import SeedNotTriangle


class SimulationError(RuntimeError):
    """Base class for protocol failures inside the simulator."""


class EventCeilingExceeded(SimulationError):
    def __init__(self, wave: str, ceiling: int):
        super().__init__(f"Wave {wave!r} did not quiesce within {ceiling} events")
        self.wave = wave
        self.ceiling = ceiling


class PhaseOrderError(SimulationError):
    def __init__(self, phase: str, missing: str):
        super().__init__(f"Phase {phase!r} needs {missing!r} to run first")
        self.phase = phase
        self.missing = missing


class NotOneHop(SimulationError):
    def __init__(self, src: int, dst: int):
        super().__init__(f"No route of at most two hops from {src!r} to {dst!r}")
        self.src = src
        self.dst = dst


__all__ = ["EventCeilingExceeded", "NotOneHop", "PhaseOrderError", "SeedNotTriangle", "SimulationError"]
