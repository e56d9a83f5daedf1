"""Per-cell flame-arrival prediction from an observation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bombrl.engine.config import Cell
from bombrl.engine.observe import Observation

NEVER = np.int16(32767)

_ARM_DIRS = ((-1, 0), (1, 0), (0, -1), (0, 1))


def _blast_cross(board: np.ndarray, row: int, col: int, blast: int) -> list[tuple[int, int]]:
    # Arms stop at rigid and wood; bombs and agents are treated as
    # transparent, which over-predicts threat and is therefore safe.
    size = board.shape[0]
    cells = [(row, col)]
    for dr, dc in _ARM_DIRS:
        for d in range(1, blast):
            r, c = row + dr * d, col + dc * d
            if not (0 <= r < size and 0 <= c < size):
                break
            code = board[r, c]
            if code == Cell.RIGID:
                break
            cells.append((r, c))
            if code == Cell.WOOD:
                break
    return cells


@dataclass
class ThreatMap:
    """Earliest flame arrival per cell and when the cell clears again.

    A cell is lethal at relative time t when arrival <= t <= clear.
    Cells no bomb or flame reaches carry arrival == NEVER.
    """

    arrival: np.ndarray  # int16
    clear: np.ndarray  # int16

    def lethal_at(self, cell: tuple[int, int], t: int) -> bool:
        return bool(self.arrival[cell] <= t <= self.clear[cell])

    def safe_forever(self, cell: tuple[int, int]) -> bool:
        return bool(self.arrival[cell] == NEVER)

    @classmethod
    def from_observation(cls, obs: Observation, flame_life: int = 2) -> "ThreatMap":
        board = obs.board
        size = board.shape[0]
        arrival = np.full((size, size), NEVER, dtype=np.int16)
        clear = np.full((size, size), -1, dtype=np.int16)

        bomb_cells = np.argwhere(obs.bomb_life > 0)
        bombs = [
            (int(r), int(c), int(obs.bomb_life[r, c]), int(obs.bomb_blast_strength[r, c]))
            for r, c in bomb_cells
        ]
        crosses = [_blast_cross(board, r, c, blast) for r, c, _, blast in bombs]

        # A bomb caught in another's cross detonates when that one does.
        effective = [life for _, _, life, _ in bombs]
        for _ in range(len(bombs)):
            changed = False
            for i, (r, c, _, _) in enumerate(bombs):
                for j, cross in enumerate(crosses):
                    if i != j and effective[j] < effective[i] and (r, c) in cross:
                        effective[i] = effective[j]
                        changed = True
            if not changed:
                break

        for i, cross in enumerate(crosses):
            t = effective[i]
            for r, c in cross:
                if t < arrival[r, c]:
                    arrival[r, c] = t
                if t + flame_life - 1 > clear[r, c]:
                    clear[r, c] = t + flame_life - 1

        # Burning cells: remaining flame life is not observable, so assume
        # the worst case of a fresh flame.
        for r, c in np.argwhere(board == Cell.FLAMES):
            arrival[r, c] = 0
            if flame_life - 1 > clear[r, c]:
                clear[r, c] = flame_life - 1
        return cls(arrival=arrival, clear=clear)

    def with_bomb(
        self, board: np.ndarray, cell: tuple[int, int], blast: int, life: int, flame_life: int = 2
    ) -> "ThreatMap":
        """Threat map as it would look after planting one more bomb."""
        arrival = self.arrival.copy()
        clear = self.clear.copy()
        for r, c in _blast_cross(board, cell[0], cell[1], blast):
            if life < arrival[r, c]:
                arrival[r, c] = life
            if life + flame_life - 1 > clear[r, c]:
                clear[r, c] = life + flame_life - 1
        return ThreatMap(arrival=arrival, clear=clear)
