"""Mutable world state: bombs, flames, agents, and the full game state."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .config import Cell, GameConfig


@dataclass
class BombState:
    row: int
    col: int
    owner: int
    blast_strength: int
    life: int
    moving_dir: int | None = None  # Action value 1..4 while the bomb slides

    @property
    def position(self) -> tuple[int, int]:
        return (self.row, self.col)


@dataclass
class FlameState:
    row: int
    col: int
    life: int

    @property
    def position(self) -> tuple[int, int]:
        return (self.row, self.col)


@dataclass
class AgentState:
    agent_id: int
    row: int
    col: int
    ammo: int
    blast_strength: int
    can_kick: bool = False
    alive: bool = True

    @property
    def position(self) -> tuple[int, int]:
        return (self.row, self.col)

    @property
    def cell_code(self) -> int:
        return Cell.AGENT0 + self.agent_id


@dataclass
class GameState:
    """Authoritative world state.

    ``grid`` holds the static layer only (passages, rigid, wood and
    revealed power-ups); bombs, flames and agents live in their entity
    lists and are overlaid by :func:`encode_board`.
    """

    config: GameConfig
    grid: np.ndarray  # uint8 (board_size, board_size), static layer
    hidden_items: dict[tuple[int, int], int]
    agents: list[AgentState]
    rng: np.random.Generator
    bombs: list[BombState] = field(default_factory=list)
    flames: list[FlameState] = field(default_factory=list)
    step_count: int = 0
    done: bool = False
    winner: int | None = None
    # Snapshot taken the tick an agent dies; observe() serves it afterwards.
    death_observations: dict = field(default_factory=dict)

    @property
    def board_size(self) -> int:
        return self.config.board_size

    def alive_agents(self) -> list[AgentState]:
        return [a for a in self.agents if a.alive]

    def bomb_at(self, row: int, col: int) -> BombState | None:
        for bomb in self.bombs:
            if bomb.row == row and bomb.col == col:
                return bomb
        return None

    def agent_at(self, row: int, col: int) -> AgentState | None:
        for agent in self.agents:
            if agent.alive and agent.row == row and agent.col == col:
                return agent
        return None

    def flame_at(self, row: int, col: int) -> FlameState | None:
        for flame in self.flames:
            if flame.row == row and flame.col == col:
                return flame
        return None

    def fingerprint(self) -> str:
        """Canonical digest of the full state, for determinism checks."""
        h = hashlib.sha256()
        h.update(self.grid.tobytes())
        h.update(self.step_count.to_bytes(4, "little"))
        h.update(b"\x01" if self.done else b"\x00")
        h.update((255 if self.winner is None else self.winner).to_bytes(1, "little"))
        for bomb in sorted(self.bombs, key=lambda b: (b.row, b.col)):
            moving = -1 if bomb.moving_dir is None else bomb.moving_dir
            h.update(
                f"B{bomb.row},{bomb.col},{bomb.owner},{bomb.blast_strength},{bomb.life},{moving};".encode()
            )
        for flame in sorted(self.flames, key=lambda f: (f.row, f.col)):
            h.update(f"F{flame.row},{flame.col},{flame.life};".encode())
        for agent in self.agents:
            h.update(
                f"A{agent.agent_id},{agent.row},{agent.col},{agent.ammo},"
                f"{agent.blast_strength},{int(agent.can_kick)},{int(agent.alive)};".encode()
            )
        for pos in sorted(self.hidden_items):
            h.update(f"H{pos[0]},{pos[1]},{self.hidden_items[pos]};".encode())
        return h.hexdigest()
