# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled grid-search kernels.

Mirrors bombrl.pathfind._pure exactly: same neighbour order, same packed
priority keys, same outputs. Parity is enforced by the test suite.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef int[4] DR = [-1, 0, 1, 0]
cdef int[4] DC = [0, -1, 0, 1]

DEF COORD_BITS = 10
DEF H_SHIFT = 20
DEF F_SHIFT = 40


def dijkstra_fill(const unsigned char[:, ::1] passable, int sr, int sc,
                  int[:, ::1] dist, int[:, ::1] parent):
    """One-to-all BFS distances; returns the settled-cell count."""
    cdef int height = passable.shape[0]
    cdef int width = passable.shape[1]
    cdef int r, c, nr, nc, k, base, expanded
    cdef Py_ssize_t head, tail
    queue_arr = np.empty(height * width, dtype=np.int32)
    cdef int[::1] queue = queue_arr

    dist[:, :] = -1
    parent[:, :] = -1
    dist[sr, sc] = 0
    queue[0] = sr * width + sc
    head = 0
    tail = 1
    expanded = 0
    while head < tail:
        r = queue[head] // width
        c = queue[head] % width
        head += 1
        expanded += 1
        base = dist[r, c] + 1
        for k in range(4):
            nr = r + DR[k]
            nc = c + DC[k]
            if 0 <= nr < height and 0 <= nc < width and passable[nr, nc] and dist[nr, nc] < 0:
                dist[nr, nc] = base
                parent[nr, nc] = r * width + c
                queue[tail] = nr * width + nc
                tail += 1
    return expanded


cdef inline void _heap_push(unsigned long long[::1] heap, Py_ssize_t* size,
                            unsigned long long key) nogil:
    cdef Py_ssize_t i = size[0]
    cdef Py_ssize_t up
    heap[i] = key
    size[0] += 1
    while i > 0:
        up = (i - 1) >> 1
        if heap[up] <= heap[i]:
            break
        heap[up], heap[i] = heap[i], heap[up]
        i = up


cdef inline unsigned long long _heap_pop(unsigned long long[::1] heap,
                                         Py_ssize_t* size) nogil:
    cdef unsigned long long top = heap[0]
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t child
    size[0] -= 1
    heap[0] = heap[size[0]]
    while True:
        child = 2 * i + 1
        if child >= size[0]:
            break
        if child + 1 < size[0] and heap[child + 1] < heap[child]:
            child += 1
        if heap[i] <= heap[child]:
            break
        heap[i], heap[child] = heap[child], heap[i]
        i = child
    return top


def astar_search(const unsigned char[:, ::1] passable, int sr, int sc,
                 int tr, int tc, int[:, ::1] parent):
    """Best-first search with the Manhattan heuristic.

    Returns (cost, expanded); cost -1 when unreachable. Ties on f break
    toward lower h, then by (row, col).
    """
    cdef int height = passable.shape[0]
    cdef int width = passable.shape[1]
    cdef int r, c, nr, nc, k, ng, nh, h0
    cdef unsigned long long key
    cdef Py_ssize_t heap_size = 0

    g_arr = np.full((height, width), -1, dtype=np.int32)
    closed_arr = np.zeros((height, width), dtype=np.uint8)
    # Each cell is pushed at most once per g-improvement; 4*H*W is a safe cap.
    heap_arr = np.empty(4 * height * width + 8, dtype=np.uint64)
    cdef int[:, ::1] g = g_arr
    cdef unsigned char[:, ::1] closed = closed_arr
    cdef unsigned long long[::1] heap = heap_arr

    parent[:, :] = -1
    g[sr, sc] = 0
    h0 = abs(sr - tr) + abs(sc - tc)
    _heap_push(heap, &heap_size,
               (<unsigned long long>h0 << F_SHIFT)
               | (<unsigned long long>h0 << H_SHIFT)
               | (<unsigned long long>sr << COORD_BITS)
               | <unsigned long long>sc)
    cdef int expanded = 0
    while heap_size > 0:
        key = _heap_pop(heap, &heap_size)
        r = <int>((key >> COORD_BITS) & ((1 << COORD_BITS) - 1))
        c = <int>(key & ((1 << COORD_BITS) - 1))
        if closed[r, c]:
            continue
        closed[r, c] = 1
        expanded += 1
        if r == tr and c == tc:
            return int(g[r, c]), expanded
        ng = g[r, c] + 1
        for k in range(4):
            nr = r + DR[k]
            nc = c + DC[k]
            if 0 <= nr < height and 0 <= nc < width and passable[nr, nc] and not closed[nr, nc]:
                if g[nr, nc] < 0 or ng < g[nr, nc]:
                    g[nr, nc] = ng
                    parent[nr, nc] = r * width + c
                    nh = abs(nr - tr) + abs(nc - tc)
                    _heap_push(heap, &heap_size,
                               (<unsigned long long>(ng + nh) << F_SHIFT)
                               | (<unsigned long long>nh << H_SHIFT)
                               | (<unsigned long long>nr << COORD_BITS)
                               | <unsigned long long>nc)
    return -1, expanded
