"""Pure-Python grid search kernels.

These mirror the compiled extension exactly: same neighbour order
(up, left, down, right), same tie-breaking, same outputs, so either
backend produces identical results.
"""

from __future__ import annotations

import heapq
from collections import deque

import numpy as np

# Neighbour order matches the action listing: Up, Left, Down, Right.
_NEIGHBORS = ((-1, 0), (0, -1), (1, 0), (0, 1))

# A* priority keys pack (f, h, row, col) into one integer so the heap
# order is a total order identical across backends.
_COORD_BITS = 10
_H_SHIFT = 2 * _COORD_BITS
_F_SHIFT = _H_SHIFT + 20


def dijkstra_fill(
    passable: np.ndarray, sr: int, sc: int, dist: np.ndarray, parent: np.ndarray
) -> int:
    """One-to-all unit-cost distances (BFS) from (sr, sc).

    Fills ``dist`` (-1 = unreachable) and ``parent`` (flat predecessor
    index, -1 = none); returns the number of settled cells.
    """
    height, width = passable.shape
    dist.fill(-1)
    parent.fill(-1)
    dist[sr, sc] = 0
    queue: deque[tuple[int, int]] = deque([(sr, sc)])
    expanded = 0
    while queue:
        r, c = queue.popleft()
        expanded += 1
        base = dist[r, c] + 1
        for dr, dc in _NEIGHBORS:
            nr, nc = r + dr, c + dc
            if 0 <= nr < height and 0 <= nc < width and passable[nr, nc] and dist[nr, nc] < 0:
                dist[nr, nc] = base
                parent[nr, nc] = r * width + c
                queue.append((nr, nc))
    return expanded


def astar_search(
    passable: np.ndarray, sr: int, sc: int, tr: int, tc: int, parent: np.ndarray
) -> tuple[int, int]:
    """Best-first search with the Manhattan heuristic.

    Returns (cost, expanded); cost is -1 when the target is unreachable.
    Ties on f are broken toward lower h, then by (row, col).
    """
    height, width = passable.shape
    parent.fill(-1)
    g = np.full((height, width), -1, dtype=np.int32)
    closed = np.zeros((height, width), dtype=bool)
    g[sr, sc] = 0
    h0 = abs(sr - tr) + abs(sc - tc)
    heap = [(h0 << _F_SHIFT) | (h0 << _H_SHIFT) | (sr << _COORD_BITS) | sc]
    expanded = 0
    while heap:
        key = heapq.heappop(heap)
        r = (key >> _COORD_BITS) & ((1 << _COORD_BITS) - 1)
        c = key & ((1 << _COORD_BITS) - 1)
        if closed[r, c]:
            continue
        closed[r, c] = True
        expanded += 1
        if r == tr and c == tc:
            return int(g[r, c]), expanded
        ng = int(g[r, c]) + 1  # plain int: np.int32 would overflow the key shift
        for dr, dc in _NEIGHBORS:
            nr, nc = r + dr, c + dc
            if 0 <= nr < height and 0 <= nc < width and passable[nr, nc] and not closed[nr, nc]:
                if g[nr, nc] < 0 or ng < g[nr, nc]:
                    g[nr, nc] = ng
                    parent[nr, nc] = r * width + c
                    nh = abs(nr - tr) + abs(nc - tc)
                    heapq.heappush(
                        heap,
                        ((ng + nh) << _F_SHIFT) | (nh << _H_SHIFT) | (nr << _COORD_BITS) | nc,
                    )
    return -1, expanded
