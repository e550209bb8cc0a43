from .BarPhase import BarPhase
from .FtgPhase import FtgPhase
from .StitchPhase import StitchPhase

__all__ = ["BarPhase", "FtgPhase", "StitchPhase"]
