"""Game configuration and the board/action vocabularies."""

from __future__ import annotations

from dataclasses import dataclass, asdict
from enum import IntEnum


class Cell(IntEnum):
    """Tile codes used on the board and in observations."""

    PASSAGE = 0
    RIGID = 1
    WOOD = 2
    BOMB = 3
    FLAMES = 4
    FOG = 5  # observations only, never on the authoritative board
    EXTRA_BOMB = 6
    INCR_RANGE = 7
    KICK = 8
    AGENT0 = 10
    AGENT1 = 11
    AGENT2 = 12
    AGENT3 = 13


# Sentinel agent code used for the teammate slot in free-for-all mode.
NULL_AGENT = 9

POWERUP_CODES = (Cell.EXTRA_BOMB, Cell.INCR_RANGE, Cell.KICK)


class Action(IntEnum):
    STOP = 0
    UP = 1
    LEFT = 2
    DOWN = 3
    RIGHT = 4
    BOMB = 5


NUM_ACTIONS = 6

# (row, col) deltas for the four move actions, indexed by Action value.
MOVE_DELTAS = {
    Action.UP: (-1, 0),
    Action.LEFT: (0, -1),
    Action.DOWN: (1, 0),
    Action.RIGHT: (0, 1),
}


class InvalidConfigError(ValueError):
    """Raised when a GameConfig violates its invariants."""


@dataclass(frozen=True)
class GameConfig:
    """Static parameters of one game.

    Defaults reproduce the standard 11x11 free-for-all setting: four
    agents in the corners, one starting bomb each, blast strength 2.
    """

    board_size: int = 11
    num_agents: int = 4
    num_rigid: int = 36
    num_wood: int = 36
    num_powerups: int = 20
    bomb_life: int = 10
    flame_life: int = 2
    initial_ammo: int = 1
    initial_blast: int = 2
    max_steps: int = 800
    view_radius: int = 2
    full_observability: bool = True
    seed: int = 0

    def validate(self) -> None:
        if self.board_size < 5 or self.board_size % 2 == 0:
            raise InvalidConfigError(f"board_size must be odd and >= 5, got {self.board_size}")
        if self.num_agents != 4:
            raise InvalidConfigError(f"num_agents must be 4, got {self.num_agents}")
        if self.bomb_life < 1:
            raise InvalidConfigError(f"bomb_life must be >= 1, got {self.bomb_life}")
        if self.flame_life < 1:
            raise InvalidConfigError(f"flame_life must be >= 1, got {self.flame_life}")
        if self.num_powerups > self.num_wood:
            raise InvalidConfigError(
                f"num_powerups ({self.num_powerups}) exceeds num_wood ({self.num_wood})"
            )
        if self.num_rigid < 0 or self.num_wood < 0 or self.num_powerups < 0:
            raise InvalidConfigError("tile counts must be nonnegative")
        if self.initial_ammo < 0:
            raise InvalidConfigError(f"initial_ammo must be >= 0, got {self.initial_ammo}")
        if self.initial_blast < 2:
            raise InvalidConfigError(f"initial_blast must be >= 2, got {self.initial_blast}")
        if self.max_steps < 1:
            raise InvalidConfigError(f"max_steps must be >= 1, got {self.max_steps}")
        if self.view_radius < 1:
            raise InvalidConfigError(f"view_radius must be >= 1, got {self.view_radius}")
        if not 0 <= self.seed < 2**64:
            raise InvalidConfigError("seed must fit in 64 unsigned bits")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "GameConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise InvalidConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)
