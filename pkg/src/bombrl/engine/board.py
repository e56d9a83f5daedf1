"""Symmetric random board generation."""

from __future__ import annotations

from collections import deque

import numpy as np

from .config import Cell, GameConfig
from .state import AgentState, GameState


class BoardGenerationError(RuntimeError):
    """Raised when no connected board could be generated within the retry budget."""


_GENERATION_RETRIES = 100


def corner_positions(board_size: int) -> list[tuple[int, int]]:
    """Agent start cells, clockwise from the top-left corner."""
    last = board_size - 1
    return [(0, 0), (0, last), (last, last), (last, 0)]


def _reserved_cells(board_size: int) -> set[tuple[int, int]]:
    # Each corner plus its two orthogonal neighbours stays open so no
    # agent starts boxed in.
    reserved: set[tuple[int, int]] = set()
    for r, c in corner_positions(board_size):
        reserved.add((r, c))
        for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            nr, nc = r + dr, c + dc
            if 0 <= nr < board_size and 0 <= nc < board_size:
                reserved.add((nr, nc))
    return reserved


def _symmetry_orbit(row: int, col: int, board_size: int) -> tuple[tuple[int, int], ...]:
    last = board_size - 1
    orbit = {(row, col), (row, last - col), (last - row, col), (last - row, last - col)}
    return tuple(sorted(orbit))


def _place_symmetric(
    grid: np.ndarray,
    code: int,
    budget: int,
    candidates: list[tuple[tuple[int, int], ...]],
    rng: np.random.Generator,
) -> int:
    """Fill whole symmetry orbits until the next orbit would exceed the budget."""
    placed = 0
    order = rng.permutation(len(candidates))
    for idx in order:
        orbit = candidates[idx]
        if any(grid[r, c] != Cell.PASSAGE for r, c in orbit):
            continue
        if placed + len(orbit) > budget:
            continue
        for r, c in orbit:
            grid[r, c] = code
        placed += len(orbit)
        if placed == budget:
            break
    return placed


def _starts_connected(grid: np.ndarray, starts: list[tuple[int, int]]) -> bool:
    # Wood is traversable for this check: it can always be bombed open.
    size = grid.shape[0]
    seen = np.zeros_like(grid, dtype=bool)
    queue: deque[tuple[int, int]] = deque([starts[0]])
    seen[starts[0]] = True
    while queue:
        r, c = queue.popleft()
        for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            nr, nc = r + dr, c + dc
            if 0 <= nr < size and 0 <= nc < size and not seen[nr, nc]:
                if grid[nr, nc] != Cell.RIGID:
                    seen[nr, nc] = True
                    queue.append((nr, nc))
    return all(seen[pos] for pos in starts)


def new_game(config: GameConfig) -> GameState:
    """Create a fresh game: symmetric layout, corner agents, hidden power-ups.

    The same config (including seed) always produces an identical state.
    """
    config.validate()
    rng = np.random.default_rng(config.seed)
    size = config.board_size
    starts = corner_positions(size)
    reserved = _reserved_cells(size)

    orbits = []
    half = (size + 1) // 2
    for r in range(half):
        for c in range(half):
            orbit = _symmetry_orbit(r, c, size)
            if (r, c) != orbit[0]:
                continue  # one representative per orbit
            if any(pos in reserved for pos in orbit):
                continue
            orbits.append(orbit)

    grid = None
    for _ in range(_GENERATION_RETRIES):
        candidate = np.full((size, size), Cell.PASSAGE, dtype=np.uint8)
        _place_symmetric(candidate, Cell.RIGID, config.num_rigid, orbits, rng)
        _place_symmetric(candidate, Cell.WOOD, config.num_wood, orbits, rng)
        if _starts_connected(candidate, starts):
            grid = candidate
            break
    if grid is None:
        raise BoardGenerationError(
            f"no connected board found in {_GENERATION_RETRIES} attempts "
            f"(num_rigid={config.num_rigid}, board_size={size})"
        )

    wood_cells = [(int(r), int(c)) for r, c in np.argwhere(grid == Cell.WOOD)]
    hidden_items: dict[tuple[int, int], int] = {}
    n_hidden = min(config.num_powerups, len(wood_cells))
    if n_hidden:
        chosen = rng.choice(len(wood_cells), size=n_hidden, replace=False)
        codes = rng.integers(Cell.EXTRA_BOMB, Cell.KICK + 1, size=n_hidden)
        for idx, code in zip(chosen, codes):
            hidden_items[wood_cells[idx]] = int(code)

    agents = [
        AgentState(
            agent_id=i,
            row=starts[i][0],
            col=starts[i][1],
            ammo=config.initial_ammo,
            blast_strength=config.initial_blast,
        )
        for i in range(config.num_agents)
    ]
    return GameState(config=config, grid=grid, hidden_items=hidden_items, agents=agents, rng=rng)
