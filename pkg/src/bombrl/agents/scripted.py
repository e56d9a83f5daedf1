"""Scripted baseline agents."""

from __future__ import annotations

import numpy as np

from bombrl.engine.config import Action, Cell, MOVE_DELTAS, POWERUP_CODES
from bombrl.engine.observe import Observation
from bombrl.pathfind import PassabilityView, dijkstra

from .base import Agent
from .threat import NEVER, ThreatMap

_MOVES = (Action.UP, Action.LEFT, Action.DOWN, Action.RIGHT)


class StaticAgent(Agent):
    """Always passes. Control baseline."""

    def act(self, obs: Observation) -> int:
        return Action.STOP


class RandomAgent(Agent):
    """Uniform over all six actions."""

    def __init__(self, seed: int | None = None):
        self._rng = np.random.default_rng(seed)

    def reset(self, seed: int | None = None) -> None:
        self._rng = np.random.default_rng(seed)

    def act(self, obs: Observation) -> int:
        return int(self._rng.integers(0, 6))


class SimpleAgent(Agent):
    """Heuristic baseline: evade, attack, loot, dig, wander.

    Priorities per tick:
      1. own cell threatened soon: flee along the shortest path to a cell
         no known bomb reaches;
      2. enemy inside own blast range and a post-bomb escape exists: bomb;
      3. power-up within reach: walk toward it;
      4. next to wood with a post-bomb escape: bomb;
      5. otherwise a uniformly random move that is safe to enter.
    Falls back to Stop when nothing safe is available.
    """

    def __init__(
        self,
        seed: int | None = None,
        bomb_life: int = 10,
        flame_life: int = 2,
        powerup_range: int = 5,
        evasion_horizon: int | None = None,
    ):
        self._rng = np.random.default_rng(seed)
        self.bomb_life = bomb_life
        self.flame_life = flame_life
        self.powerup_range = powerup_range
        self.horizon = bomb_life if evasion_horizon is None else evasion_horizon

    def reset(self, seed: int | None = None) -> None:
        self._rng = np.random.default_rng(seed)

    def act(self, obs: Observation) -> int:
        board = obs.board
        size = board.shape[0]
        me = (int(obs.position[0]), int(obs.position[1]))
        threat = ThreatMap.from_observation(obs, flame_life=self.flame_life)

        passable = (
            (board == Cell.PASSAGE)
            | (board == Cell.EXTRA_BOMB)
            | (board == Cell.INCR_RANGE)
            | (board == Cell.KICK)
        )
        passable[me] = True
        search = dijkstra(PassabilityView(passable), me)
        dist = search.distances

        # 1. flee
        if threat.arrival[me] <= self.horizon:
            move = self._escape_move(search, threat, me)
            if move is not None:
                return move
            return self._least_bad_neighbor(board, threat, me)

        # 2. attack
        if obs.ammo > 0 and self._enemy_in_range(obs, me) and self._bomb_escape_exists(obs, threat, dist, me):
            return Action.BOMB

        # 3. loot
        move = self._powerup_move(board, search, threat, me)
        if move is not None:
            return move

        # 4. dig
        if obs.ammo > 0 and self._adjacent_wood(board, me) and self._bomb_escape_exists(obs, threat, dist, me):
            return Action.BOMB

        # 5. wander
        return self._random_safe_move(board, threat, me, size)

    # -- helpers -------------------------------------------------------

    def _escape_move(self, search, threat: ThreatMap, me) -> int | None:
        dist = search.distances
        safe = (threat.arrival == NEVER) & (dist >= 0)
        if not safe.any():
            return None
        cells = np.argwhere(safe)
        order = np.lexsort((cells[:, 1], cells[:, 0], dist[safe]))
        for idx in order[:40]:
            r, c = int(cells[idx][0]), int(cells[idx][1])
            path = search.path_to((r, c))
            if len(path) < 2:
                continue
            first = path[1]
            if not threat.lethal_at(first, 1):
                return _direction(me, first)
        return None

    def _least_bad_neighbor(self, board, threat: ThreatMap, me) -> int:
        best, best_arrival = Action.STOP, int(threat.arrival[me])
        for action in _MOVES:
            dr, dc = MOVE_DELTAS[action]
            r, c = me[0] + dr, me[1] + dc
            if not (0 <= r < board.shape[0] and 0 <= c < board.shape[1]):
                continue
            if board[r, c] not in (Cell.PASSAGE, Cell.EXTRA_BOMB, Cell.INCR_RANGE, Cell.KICK):
                continue
            if threat.lethal_at((r, c), 1):
                continue
            if int(threat.arrival[r, c]) > best_arrival:
                best, best_arrival = action, int(threat.arrival[r, c])
        return best

    def _enemy_in_range(self, obs: Observation, me) -> bool:
        board = obs.board
        reach = obs.blast_strength - 1
        for code in obs.enemies:
            hits = np.argwhere(board == code)
            if hits.size == 0:
                continue
            r, c = int(hits[0][0]), int(hits[0][1])
            if r == me[0] and 0 < abs(c - me[1]) <= reach:
                lo, hi = sorted((c, me[1]))
                between = board[r, lo + 1 : hi]
                if not np.isin(between, (Cell.RIGID, Cell.WOOD)).any():
                    return True
            if c == me[1] and 0 < abs(r - me[0]) <= reach:
                lo, hi = sorted((r, me[0]))
                between = board[lo + 1 : hi, c]
                if not np.isin(between, (Cell.RIGID, Cell.WOOD)).any():
                    return True
        return False

    def _bomb_escape_exists(self, obs: Observation, threat: ThreatMap, dist, me) -> bool:
        after = threat.with_bomb(
            obs.board, me, obs.blast_strength, self.bomb_life, self.flame_life
        )
        reachable_safe = (after.arrival == NEVER) & (dist >= 0) & (dist <= self.bomb_life - 2)
        return bool(reachable_safe.any())

    def _powerup_move(self, board, search, threat: ThreatMap, me) -> int | None:
        dist = search.distances
        powerup = np.isin(board, POWERUP_CODES)
        wanted = powerup & (dist >= 1) & (dist <= self.powerup_range)
        if not wanted.any():
            return None
        cells = np.argwhere(wanted)
        order = np.lexsort((cells[:, 1], cells[:, 0], dist[wanted]))
        for idx in order:
            r, c = int(cells[idx][0]), int(cells[idx][1])
            first = search.path_to((r, c))[1]
            if not threat.lethal_at(first, 1) and not threat.lethal_at(first, 2):
                return _direction(me, first)
        return None

    def _adjacent_wood(self, board, me) -> bool:
        size = board.shape[0]
        for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            r, c = me[0] + dr, me[1] + dc
            if 0 <= r < size and 0 <= c < size and board[r, c] == Cell.WOOD:
                return True
        return False

    def _random_safe_move(self, board, threat: ThreatMap, me, size) -> int:
        options = []
        for action in _MOVES:
            dr, dc = MOVE_DELTAS[action]
            r, c = me[0] + dr, me[1] + dc
            if not (0 <= r < size and 0 <= c < size):
                continue
            if board[r, c] not in (Cell.PASSAGE, Cell.EXTRA_BOMB, Cell.INCR_RANGE, Cell.KICK):
                continue
            if threat.lethal_at((r, c), 1) or threat.lethal_at((r, c), 2):
                continue
            options.append(int(action))
        if not options:
            return Action.STOP
        return options[self._rng.integers(len(options))]


def _direction(src: tuple[int, int], dst: tuple[int, int]) -> int:
    dr, dc = dst[0] - src[0], dst[1] - src[1]
    for action, delta in MOVE_DELTAS.items():
        if delta == (dr, dc):
            return int(action)
    raise ValueError(f"cells {src} and {dst} are not adjacent")
