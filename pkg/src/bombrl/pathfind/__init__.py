"""Grid pathfinding used by the scripted agents."""

from ._backend import backend_name
from .grid import (
    DEFAULT_PASSABLE,
    InvalidSourceError,
    PassabilityView,
    SearchResult,
    UNREACHABLE,
    astar,
    dijkstra,
)

__all__ = [
    "DEFAULT_PASSABLE",
    "InvalidSourceError",
    "PassabilityView",
    "SearchResult",
    "UNREACHABLE",
    "astar",
    "backend_name",
    "dijkstra",
]
