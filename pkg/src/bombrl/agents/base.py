"""Behavior interface shared by scripted and learned agents."""

from __future__ import annotations

from bombrl.engine.observe import Observation


class Agent:
    """Maps observations to actions; one instance per seat per episode runner."""

    def reset(self, seed: int | None = None) -> None:
        """Re-seed any internal RNG at episode start. No-op by default."""

    def act(self, obs: Observation) -> int:
        raise NotImplementedError
