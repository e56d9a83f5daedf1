"""Deterministic four-player bomber grid world."""

from .board import BoardGenerationError, corner_positions, new_game
from .config import (
    Action,
    Cell,
    GameConfig,
    InvalidConfigError,
    MOVE_DELTAS,
    NULL_AGENT,
    NUM_ACTIONS,
    POWERUP_CODES,
)
from .observe import Observation, compose_board, encode_board, observe
from .state import AgentState, BombState, FlameState, GameState
from .step import EpisodeFinishedError, StepResult, step

__all__ = [
    "Action",
    "AgentState",
    "BoardGenerationError",
    "BombState",
    "Cell",
    "EpisodeFinishedError",
    "FlameState",
    "GameConfig",
    "GameState",
    "InvalidConfigError",
    "MOVE_DELTAS",
    "NULL_AGENT",
    "NUM_ACTIONS",
    "Observation",
    "POWERUP_CODES",
    "StepResult",
    "compose_board",
    "corner_positions",
    "encode_board",
    "new_game",
    "observe",
    "step",
]
