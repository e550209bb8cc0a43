from .GeneratedInstance import GeneratedInstance
from .StreamRole import StreamRole
from .TriangleStream import TriangleStream

__all__ = ["GeneratedInstance", "StreamRole", "TriangleStream"]
