from .LogicalClock import LogicalClock
from .Network import Network
from .Phase import Phase
from .Scheduler import Scheduler
from .SignalKind import SignalKind
from .Status import Status
from .assembly import bar_holders, distributed_ftt, elementary_bars
from .errors import EventCeilingExceeded, NotOneHop, PhaseOrderError, SeedNotTriangle, SimulationError
from .impl import BarPhase, FtgPhase, StitchPhase
from .impl.BarPhase import handle_child, handle_elementary_bars, handle_visit_node, handle_visit_triangle
from .impl.FtgPhase import handle_recv_nbr_list, handle_recv_triangle
from .impl.StitchPhase import handle_mark, handle_stitch
from .simulator import Simulation, metrics, run_full, run_phase1, run_phase2, run_phase3, seed_of, simulate
from .struct import BarId, ElementaryBar, LocalizabilityReport, Message, NodeState, Scenario, TriangleRecord

__all__ = [
    "BarId",
    "BarPhase",
    "ElementaryBar",
    "EventCeilingExceeded",
    "FtgPhase",
    "LocalizabilityReport",
    "LogicalClock",
    "Message",
    "Network",
    "NodeState",
    "NotOneHop",
    "Phase",
    "PhaseOrderError",
    "Scenario",
    "Scheduler",
    "SeedNotTriangle",
    "SignalKind",
    "SimulationError",
    "Status",
    "StitchPhase",
    "TriangleRecord",
    "bar_holders",
    "distributed_ftt",
    "elementary_bars",
    "handle_child",
    "handle_elementary_bars",
    "handle_mark",
    "handle_recv_nbr_list",
    "handle_recv_triangle",
    "handle_stitch",
    "handle_visit_node",
    "handle_visit_triangle",
    "metrics",
    "run_full",
    "run_phase1",
    "run_phase2",
    "run_phase3",
    "seed_of",
    "simulate",
]
