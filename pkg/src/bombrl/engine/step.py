"""The per-tick transition function.

Phases run in a fixed order each tick: flame decay, bomb detonation with
same-tick chaining (destroyed wood reveals its hidden item), movement
resolution, bomb placement, kick transfer and bomb sliding, power-up
pickup, flame deaths, terminal check.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .config import Action, Cell, MOVE_DELTAS, POWERUP_CODES
from .state import BombState, FlameState, GameState


class EpisodeFinishedError(RuntimeError):
    """Raised when step() is called on a finished episode."""


@dataclass(frozen=True)
class StepResult:
    rewards: tuple[int, int, int, int]
    done: bool
    winner: int | None


_BLOCKING = (Cell.RIGID, Cell.WOOD)


def _blast_cells(state: GameState, bomb: BombState, bomb_cells: set[tuple[int, int]],
                 agent_cells: set[tuple[int, int]]) -> list[tuple[int, int]]:
    """Cross of cells hit by one bomb.

    Each arm extends blast_strength - 1 cells, stops short of rigid walls
    and consumes (includes, then stops at) the first wood, power-up,
    agent or bomb it meets.
    """
    size = state.board_size
    grid = state.grid
    cells = [(bomb.row, bomb.col)]
    for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
        for d in range(1, bomb.blast_strength):
            r, c = bomb.row + dr * d, bomb.col + dc * d
            if not (0 <= r < size and 0 <= c < size):
                break
            code = grid[r, c]
            if code == Cell.RIGID:
                break
            cells.append((r, c))
            if code == Cell.WOOD or code in POWERUP_CODES:
                break
            if (r, c) in bomb_cells or (r, c) in agent_cells:
                break
    return cells


def _detonate(state: GameState) -> None:
    for bomb in state.bombs:
        bomb.life -= 1
    triggered = [b for b in state.bombs if b.life <= 0]
    if not triggered:
        return

    bomb_cells = {b.position for b in state.bombs}
    agent_cells = {a.position for a in state.agents if a.alive}
    bomb_by_pos = {b.position: b for b in state.bombs}

    exploding: set[int] = {id(b) for b in triggered}
    queue = deque(triggered)
    burned: dict[tuple[int, int], None] = {}
    while queue:
        bomb = queue.popleft()
        for cell in _blast_cells(state, bomb, bomb_cells, agent_cells):
            burned.setdefault(cell)
            other = bomb_by_pos.get(cell)
            if other is not None and id(other) not in exploding:
                exploding.add(id(other))
                queue.append(other)

    for bomb in state.bombs:
        if id(bomb) in exploding:
            state.agents[bomb.owner].ammo += 1
    state.bombs = [b for b in state.bombs if id(b) not in exploding]

    flame_by_pos = {f.position: f for f in state.flames}
    for r, c in burned:
        code = state.grid[r, c]
        if code == Cell.WOOD:
            state.grid[r, c] = state.hidden_items.pop((r, c), Cell.PASSAGE)
        elif code in POWERUP_CODES:
            state.grid[r, c] = Cell.PASSAGE
        flame = flame_by_pos.get((r, c))
        if flame is None:
            flame = FlameState(r, c, state.config.flame_life)
            state.flames.append(flame)
            flame_by_pos[(r, c)] = flame
        else:
            flame.life = state.config.flame_life


def _bomb_can_slide(state: GameState, row: int, col: int, delta: tuple[int, int]) -> bool:
    r, c = row + delta[0], col + delta[1]
    size = state.board_size
    if not (0 <= r < size and 0 <= c < size):
        return False
    if state.grid[r, c] in _BLOCKING:
        return False
    if state.bomb_at(r, c) is not None or state.agent_at(r, c) is not None:
        return False
    return True


def _resolve_moves(state: GameState, actions: list[int]) -> dict[int, tuple[int, int]]:
    size = state.board_size
    alive = [a for a in state.agents if a.alive]
    current = {a.agent_id: a.position for a in alive}
    desired: dict[int, tuple[int, int]] = {}
    for agent in alive:
        action = actions[agent.agent_id]
        target = current[agent.agent_id]
        if action in MOVE_DELTAS:
            dr, dc = MOVE_DELTAS[action]
            r, c = agent.row + dr, agent.col + dc
            if 0 <= r < size and 0 <= c < size and state.grid[r, c] not in _BLOCKING:
                bomb = state.bomb_at(r, c)
                if bomb is None:
                    target = (r, c)
                elif agent.can_kick and _bomb_can_slide(state, r, c, (dr, dc)):
                    target = (r, c)
        desired[agent.agent_id] = target

    ids = [a.agent_id for a in alive]
    changed = True
    while changed:
        changed = False
        # Contested cells: every agent aiming at the same cell stays put.
        by_target: dict[tuple[int, int], list[int]] = {}
        for i in ids:
            if desired[i] != current[i]:
                by_target.setdefault(desired[i], []).append(i)
        for movers in by_target.values():
            if len(movers) > 1:
                for i in movers:
                    desired[i] = current[i]
                changed = True
        # Swaps and moves onto an agent that stays.
        for i in ids:
            if desired[i] == current[i]:
                continue
            for j in ids:
                if j == i or desired[i] != current[j]:
                    continue
                if desired[j] == current[i]:  # swap: both revert
                    desired[i] = current[i]
                    desired[j] = current[j]
                    changed = True
                    break
                if desired[j] == current[j]:  # target cell is occupied and stays
                    desired[i] = current[i]
                    changed = True
                    break
    return desired


def _advance_bombs(state: GameState, moves: dict[int, int]) -> None:
    # Fresh kicks first: an agent that just stepped onto a bomb shoves it
    # along its own direction of travel.
    for agent in state.agents:
        if not agent.alive:
            continue
        bomb = state.bomb_at(agent.row, agent.col)
        if bomb is not None and agent.can_kick and moves.get(agent.agent_id) in MOVE_DELTAS:
            bomb.moving_dir = moves[agent.agent_id]

    for bomb in state.bombs:
        if bomb.moving_dir is None:
            continue
        delta = MOVE_DELTAS[bomb.moving_dir]
        if _bomb_can_slide(state, bomb.row, bomb.col, delta):
            bomb.row += delta[0]
            bomb.col += delta[1]
        else:
            bomb.moving_dir = None


def step(state: GameState, actions: list[int]) -> StepResult:
    """Advance the world one tick. Actions of dead agents are ignored."""
    if state.done:
        raise EpisodeFinishedError("episode already finished")
    if len(actions) != len(state.agents):
        raise ValueError(f"expected {len(state.agents)} actions, got {len(actions)}")
    actions = [int(a) for a in actions]
    for a in actions:
        if not 0 <= a < 6:
            raise ValueError(f"action out of range: {a}")

    # (1) flame decay
    for flame in state.flames:
        flame.life -= 1
    state.flames = [f for f in state.flames if f.life > 0]

    # (2)+(3) detonation, chaining, wood reveal
    _detonate(state)

    # (4) movement
    resolved = _resolve_moves(state, actions)
    move_actions = {
        a.agent_id: actions[a.agent_id]
        for a in state.agents
        if a.alive and resolved[a.agent_id] != a.position
    }
    for agent in state.agents:
        if agent.alive:
            agent.row, agent.col = resolved[agent.agent_id]

    # (5) bomb placement
    for agent in state.agents:
        if not agent.alive or actions[agent.agent_id] != Action.BOMB:
            continue
        if agent.ammo > 0 and state.bomb_at(agent.row, agent.col) is None:
            agent.ammo -= 1
            state.bombs.append(
                BombState(
                    row=agent.row,
                    col=agent.col,
                    owner=agent.agent_id,
                    blast_strength=agent.blast_strength,
                    life=state.config.bomb_life,
                )
            )

    # (6) kick transfer and bomb sliding
    _advance_bombs(state, move_actions)

    # (7) power-up pickup
    for agent in state.agents:
        if not agent.alive:
            continue
        code = state.grid[agent.row, agent.col]
        if code == Cell.EXTRA_BOMB:
            agent.ammo += 1
        elif code == Cell.INCR_RANGE:
            agent.blast_strength += 1
        elif code == Cell.KICK:
            agent.can_kick = True
        else:
            continue
        state.grid[agent.row, agent.col] = Cell.PASSAGE

    # (8) flame deaths
    rewards = [0, 0, 0, 0]
    flame_cells = {f.position for f in state.flames}
    died_now: list[int] = []
    for agent in state.agents:
        if agent.alive and agent.position in flame_cells:
            agent.alive = False
            rewards[agent.agent_id] = -1
            died_now.append(agent.agent_id)

    # (9) terminal check
    state.step_count += 1
    alive = state.alive_agents()
    winner: int | None = None
    if len(alive) <= 1:
        state.done = True
        if len(alive) == 1:
            winner = alive[0].agent_id
            rewards[winner] = 1
            state.winner = winner
    elif state.step_count >= state.config.max_steps:
        state.done = True  # timeout draw: survivors 0, dead -1

    if died_now:
        from .observe import observe  # deferred: observe imports this module's types

        for agent_id in died_now:
            state.death_observations[agent_id] = observe(state, agent_id)

    return StepResult(rewards=tuple(rewards), done=state.done, winner=winner)
