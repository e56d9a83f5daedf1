"""Grid shortest-path searches: one-to-all Dijkstra and A*."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bombrl.engine.config import Cell
from ._backend import astar_search, dijkstra_fill

# Unit-cost 4-connected grids: Dijkstra coincides with breadth-first search.

DEFAULT_PASSABLE = frozenset(
    {int(Cell.PASSAGE), int(Cell.EXTRA_BOMB), int(Cell.INCR_RANGE), int(Cell.KICK)}
)

UNREACHABLE = -1

# Packed A* keys reserve 10 bits per coordinate.
MAX_GRID_SIDE = 1 << 10


class InvalidSourceError(ValueError):
    """Raised when a search starts from an impassable or off-board cell."""


@dataclass(frozen=True)
class PassabilityView:
    """Boolean walkability mask derived from a board."""

    passable: np.ndarray  # bool (height, width)

    def __post_init__(self):
        if self.passable.ndim != 2:
            raise ValueError("passability mask must be 2-D")
        if max(self.passable.shape) >= MAX_GRID_SIDE:
            raise ValueError(f"grid side must be < {MAX_GRID_SIDE}")

    @property
    def height(self) -> int:
        return self.passable.shape[0]

    @property
    def width(self) -> int:
        return self.passable.shape[1]

    def in_bounds(self, cell: tuple[int, int]) -> bool:
        return 0 <= cell[0] < self.height and 0 <= cell[1] < self.width

    def is_passable(self, cell: tuple[int, int]) -> bool:
        return self.in_bounds(cell) and bool(self.passable[cell])

    @classmethod
    def from_board(cls, board: np.ndarray, passable_codes=DEFAULT_PASSABLE) -> "PassabilityView":
        return cls(passable=np.isin(board, list(passable_codes)))


@dataclass
class SearchResult:
    """Outcome of a search.

    ``cost`` is None when the target is unreachable; ``distances`` and
    ``parents`` are filled by Dijkstra only.
    """

    cost: int | None
    path: list[tuple[int, int]]
    expanded: int
    distances: np.ndarray | None = None
    parents: np.ndarray | None = None
    source: tuple[int, int] | None = None

    def distance_to(self, cell: tuple[int, int]) -> int | None:
        if self.distances is None:
            raise ValueError("distance_to requires a Dijkstra result")
        d = int(self.distances[cell])
        return None if d == UNREACHABLE else d

    def path_to(self, cell: tuple[int, int]) -> list[tuple[int, int]]:
        if self.distances is None or self.parents is None:
            raise ValueError("path_to requires a Dijkstra result")
        if int(self.distances[cell]) == UNREACHABLE:
            return []
        return _walk_parents(self.parents, self.source, cell)


def _walk_parents(
    parents: np.ndarray, source: tuple[int, int] | None, cell: tuple[int, int]
) -> list[tuple[int, int]]:
    width = parents.shape[1]
    path = [cell]
    r, c = cell
    while parents[r, c] >= 0:
        flat = int(parents[r, c])
        r, c = flat // width, flat % width
        path.append((r, c))
    path.reverse()
    if source is not None and path[0] != source:
        raise RuntimeError("corrupt parent chain")
    return path


def _check_source(view: PassabilityView, source: tuple[int, int]) -> None:
    if not view.in_bounds(source):
        raise InvalidSourceError(f"source {source} off the board")
    if not view.passable[source]:
        raise InvalidSourceError(f"source {source} is impassable")


def dijkstra(view: PassabilityView, source: tuple[int, int]) -> SearchResult:
    """One-to-all distances and predecessor map from ``source``.

    Distances equal true BFS distances; cells never reached keep the
    UNREACHABLE marker. Settle order is fixed, so expanded counts are
    reproducible.
    """
    _check_source(view, source)
    mask = np.ascontiguousarray(view.passable, dtype=np.uint8)
    dist = np.empty(mask.shape, dtype=np.int32)
    parent = np.empty(mask.shape, dtype=np.int32)
    expanded = dijkstra_fill(mask, int(source[0]), int(source[1]), dist, parent)
    return SearchResult(
        cost=0,
        path=[source],
        expanded=int(expanded),
        distances=dist,
        parents=parent,
        source=source,
    )


def astar(
    view: PassabilityView, source: tuple[int, int], target: tuple[int, int]
) -> SearchResult:
    """Shortest path from source to target (Manhattan heuristic).

    An unreachable target yields cost None and an empty path. The
    heuristic is admissible and consistent on unit 4-grids, so the cost
    always equals the Dijkstra distance.
    """
    _check_source(view, source)
    if not view.in_bounds(target):
        raise ValueError(f"target {target} off the board")
    mask = np.ascontiguousarray(view.passable, dtype=np.uint8)
    parent = np.empty(mask.shape, dtype=np.int32)
    cost, expanded = astar_search(
        mask, int(source[0]), int(source[1]), int(target[0]), int(target[1]), parent
    )
    if cost < 0:
        return SearchResult(cost=None, path=[], expanded=int(expanded), source=source)
    path = _walk_parents(parent, source, target)
    return SearchResult(cost=int(cost), path=path, expanded=int(expanded), source=source)
