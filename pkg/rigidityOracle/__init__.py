from .PebbleGame import PebbleGame
from .RigidityVerdict import RigidityVerdict
from .errors import OracleError, TooSmall
from .oracle import is_globally_rigid, is_redundantly_rigid, is_rigid, is_three_connected
from .rank import exact_rank, rank_is_rigid, rigidity_matrix

__all__ = [
    "OracleError",
    "PebbleGame",
    "RigidityVerdict",
    "TooSmall",
    "exact_rank",
    "is_globally_rigid",
    "is_redundantly_rigid",
    "is_rigid",
    "is_three_connected",
    "rank_is_rigid",
    "rigidity_matrix",
]
