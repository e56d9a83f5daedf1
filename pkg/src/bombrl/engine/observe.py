"""Per-agent observations and board encoding."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import Cell, NULL_AGENT
from .state import GameState


@dataclass
class Observation:
    """One agent's view of the world.

    ``board`` is the (size, size) tile-code grid; under partial
    observability every cell outside the square window around the agent
    carries the fog code 5 and the bomb grids are zeroed there.
    """

    board: np.ndarray  # uint8 (size, size)
    position: tuple[int, int]
    ammo: int
    blast_strength: int
    can_kick: bool
    teammate: int  # NULL_AGENT in free-for-all
    enemies: tuple[int, int, int]
    bomb_blast_strength: np.ndarray  # int16 (size, size)
    bomb_life: np.ndarray  # int16 (size, size)
    message: tuple[int, int]
    step_count: int

    @property
    def board_size(self) -> int:
        return self.board.shape[0]

    def to_payload(self) -> dict:
        """Flat JSON-friendly dict matching the dataset record schema."""
        return {
            "board": [int(v) for v in self.board.ravel()],
            "position": [int(self.position[0]), int(self.position[1])],
            "ammo": int(self.ammo),
            "blast_strength": int(self.blast_strength),
            "can_kick": int(self.can_kick),
            "enemies": [int(e) for e in self.enemies],
            "bomb_blast_strength": [int(v) for v in self.bomb_blast_strength.ravel()],
            "bomb_life": [int(v) for v in self.bomb_life.ravel()],
            "message": [int(self.message[0]), int(self.message[1])],
        }

    @classmethod
    def from_payload(cls, payload: dict, board_size: int | None = None) -> "Observation":
        board = np.asarray(payload["board"], dtype=np.uint8)
        size = board_size if board_size is not None else int(round(len(board) ** 0.5))
        enemies = tuple(int(e) for e in payload["enemies"])
        return cls(
            board=board.reshape(size, size),
            position=(int(payload["position"][0]), int(payload["position"][1])),
            ammo=int(payload["ammo"]),
            blast_strength=int(payload["blast_strength"]),
            can_kick=bool(payload["can_kick"]),
            teammate=int(payload.get("teammate", NULL_AGENT)),
            enemies=enemies,  # type: ignore[arg-type]
            bomb_blast_strength=np.asarray(payload["bomb_blast_strength"], dtype=np.int16).reshape(size, size),
            bomb_life=np.asarray(payload["bomb_life"], dtype=np.int16).reshape(size, size),
            message=(int(payload["message"][0]), int(payload["message"][1])),
            step_count=int(payload.get("step", 0)),
        )


def compose_board(state: GameState) -> np.ndarray:
    """Full board with entities overlaid: agents over bombs over flames."""
    board = state.grid.copy()
    for flame in state.flames:
        board[flame.row, flame.col] = Cell.FLAMES
    for bomb in state.bombs:
        board[bomb.row, bomb.col] = Cell.BOMB
    for agent in state.agents:
        if agent.alive:
            board[agent.row, agent.col] = agent.cell_code
    return board


def encode_board(state: GameState) -> np.ndarray:
    """Row-major flattened board of tile codes."""
    return compose_board(state).ravel()


def observe(state: GameState, agent_id: int) -> Observation:
    """Extract agent_id's observation.

    For a dead agent, the observation captured on its death tick is
    returned unchanged.
    """
    if not 0 <= agent_id < len(state.agents):
        raise ValueError(f"agent_id out of range: {agent_id}")
    agent = state.agents[agent_id]
    if not agent.alive and agent_id in state.death_observations:
        return state.death_observations[agent_id]

    size = state.board_size
    board = compose_board(state)
    bomb_blast = np.zeros((size, size), dtype=np.int16)
    bomb_life = np.zeros((size, size), dtype=np.int16)
    for bomb in state.bombs:
        bomb_blast[bomb.row, bomb.col] = bomb.blast_strength
        bomb_life[bomb.row, bomb.col] = bomb.life

    if not state.config.full_observability:
        radius = state.config.view_radius
        rows = np.arange(size)[:, None]
        cols = np.arange(size)[None, :]
        outside = (np.abs(rows - agent.row) > radius) | (np.abs(cols - agent.col) > radius)
        board[outside] = Cell.FOG
        bomb_blast[outside] = 0
        bomb_life[outside] = 0

    enemies = tuple(Cell.AGENT0 + i for i in range(len(state.agents)) if i != agent_id)
    return Observation(
        board=board,
        position=agent.position,
        ammo=agent.ammo,
        blast_strength=agent.blast_strength,
        can_kick=agent.can_kick,
        teammate=NULL_AGENT,
        enemies=enemies,  # type: ignore[arg-type]
        bomb_blast_strength=bomb_blast,
        bomb_life=bomb_life,
        message=(0, 0),
        step_count=state.step_count,
    )
