class LogicalClock:
    """Per-node logical clock advanced once for every delivered message.

    Outgoing messages carry the sender's current reading.
    """

    def __init__(self) -> None:
        self.timestamp = 0

    def tick(self) -> int:
        self.timestamp += 1
        return self.timestamp

    def read(self) -> int:
        return self.timestamp

    def __repr__(self) -> str:
        return f"LogicalClock({self.timestamp})"
