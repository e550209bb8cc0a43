from enum import Enum


class Status(str, Enum):
    IDLE = "0"
    VISITED = "visited"
    LOCALIZABLE = "localizable"

    def __str__(self) -> str:
        return self.value
