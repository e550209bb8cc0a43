from .BaseCycleSet import BaseCycleSet, base_cycles
from .FlipTriangleGraph import FlipTriangleGraph, build_ftg
from .FlipTriangleTree import FlipTriangleTree, ftt
from .errors import FtgError, RootAbsent
from .propositions import (
    check_prop1,
    check_prop2,
    check_prop3,
    grow_maximal_tree,
    is_ftg_cycle,
    is_ftg_tree,
    is_maximal_ftg_tree,
    is_maximal_triangle_tree,
)
from .report import ftg_report
from .struct import BaseCycle

__all__ = [
    "BaseCycle",
    "BaseCycleSet",
    "FlipTriangleGraph",
    "FlipTriangleTree",
    "FtgError",
    "RootAbsent",
    "base_cycles",
    "build_ftg",
    "check_prop1",
    "check_prop2",
    "check_prop3",
    "ftg_report",
    "ftt",
    "grow_maximal_tree",
    "is_ftg_cycle",
    "is_ftg_tree",
    "is_maximal_ftg_tree",
    "is_maximal_triangle_tree",
]
