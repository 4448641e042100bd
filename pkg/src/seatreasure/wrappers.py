"""Reward, action and observation transforms over :class:`DeepSeaTreasureV0`.

The two reference setups are ``make_env(EnvConfig())`` (fuel, three
objectives) and ``make_env(EnvConfig.vamplew())`` (the original
four-direction, two-objective problem).
"""
from __future__ import annotations

from numbers import Real

import numpy as np

from seatreasure.engine import (
    Action2D,
    DeepSeaTreasureV0,
    EnvConfig,
    InvalidActionError,
    StepInfo,
)

UP, RIGHT, DOWN, LEFT = 0, 1, 2, 3
DIRECTIONS = {UP: (0, -1), RIGHT: (1, 0), DOWN: (0, 1), LEFT: (-1, 0)}


class Wrapper:
    def __init__(self, env):
        self.env = env

    @property
    def unwrapped(self) -> DeepSeaTreasureV0:
        return self.env.unwrapped

    @property
    def state(self):
        return self.unwrapped.state

    @state.setter
    def state(self, value):
        self.unwrapped.state = value

    @property
    def action_space(self):
        return self.env.action_space

    def config(self) -> EnvConfig:
        return self.env.config()

    def reset(self):
        return self.env.reset()

    def step(self, action):
        return self.env.step(action)

    def render(self) -> str:
        return self.env.render()


def fuel_reward(info: StepInfo, config: EnvConfig) -> Real:
    """Negative fuel spent on the step; colliding steps are free."""
    if info.collided:
        return 0
    return -config.fuel_cost(info.applied_accel)


class FuelWrapper(Wrapper):
    """Appends the fuel objective: ``(time, treasure) -> (time, treasure, fuel)``."""

    def step(self, action):
        obs, reward, term, trunc, info = self.env.step(action)
        return obs, (*reward, fuel_reward(info, self.config())), term, trunc, info


class VamplewWrapper(Wrapper):
    """Four unit moves and a position observation, as in the original problem.

    A direction code is turned into the acceleration that makes the next
    velocity exactly the unit step in that direction. Velocity after every
    step is then either zero (collision) or a unit vector, so the submitted
    acceleration never exceeds 2 per component.
    """

    @property
    def action_space(self):
        return tuple(DIRECTIONS)

    def _position(self) -> np.ndarray:
        return np.array(self.state.pos, dtype=np.int64)

    def reset(self):
        _, info = self.env.reset()
        return self._position(), info

    def inner_action(self, code) -> Action2D:
        if isinstance(code, bool) or code not in DIRECTIONS:
            raise InvalidActionError(f"direction code must be one of 0..3, got {code!r}")
        ux, uy = DIRECTIONS[code]
        vx, vy = self.state.vel
        return Action2D(ux - vx, uy - vy)

    def step(self, action):
        _, reward, term, trunc, info = self.env.step(self.inner_action(action))
        return self._position(), reward, term, trunc, info


def collision_penalty(n_objectives: int, config: EnvConfig) -> tuple:
    """One below the per-objective minimum of any non-colliding step."""
    worst_accel = max(config.acceleration_levels)
    worst = [-1, 0, -config.fuel_cost((worst_accel, worst_accel))]
    return tuple(w - 1 for w in worst[:n_objectives])


def implicit_constraint(reward: tuple, info: StepInfo, config: EnvConfig) -> tuple:
    if not info.collided:
        return reward
    return collision_penalty(len(reward), config)


class ImplicitConstraintWrapper(Wrapper):
    """Makes colliding steps strictly worse than anything else on every objective.

    Reward substitution only; a collision does not end the episode.
    """

    def step(self, action):
        obs, reward, term, trunc, info = self.env.step(action)
        return obs, implicit_constraint(reward, info, self.config()), term, trunc, info


_WRAPPERS = {
    "vamplew": VamplewWrapper,
    "fuel": FuelWrapper,
    "implicit_constraint": ImplicitConstraintWrapper,
}


def make_env(config: EnvConfig | None = None):
    """Build the wrapper stack named by ``config.wrappers``, innermost first.

    ``implicit_collision_constraint=True`` adds the penalty wrapper on the
    outside when the list does not already name it.
    """
    config = config or EnvConfig()
    env = DeepSeaTreasureV0(config)
    names = list(config.wrappers)
    if config.implicit_collision_constraint and "implicit_constraint" not in names:
        names.append("implicit_constraint")
    for name in names:
        env = _WRAPPERS[name](env)
    return env


def n_objectives(config: EnvConfig) -> int:
    return 3 if "fuel" in config.wrappers else 2
