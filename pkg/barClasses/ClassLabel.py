from enum import Enum


class ClassLabel(Enum):
    CHAIN = "chain"
    CYCLE = "cycle"
    CIRCUIT = "circuit"
    BRIDGE = "bridge"
    TREE = "tree"
    NOTCH = "notch"
    NET = "net"
    WHEEL = "wheel"
    TRILATERATION = "trilateration"
    WHEEL_EXTENSION = "wheel_extension"
    NONE = "none"
