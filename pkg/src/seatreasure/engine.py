"""DeepSeaTreasureV0: the acceleration-based, finite-horizon environment.

The engine emits the two-objective reward ``(time, treasure)``. Fuel,
the original four-direction action set and the collision penalty are
layered on by :mod:`seatreasure.wrappers`.

Dynamics per step, componentwise:

1. ``v' = clamp(v + a, -max_speed, max_speed)``
2. candidate position ``p + v'``
3. if the swept path from ``p`` to the candidate hits seabed or leaves the
   grid, the submarine stays put and its velocity drops to zero;
   otherwise it moves to the candidate with velocity ``v'``.

Only the end cell of a move can collect a treasure.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from functools import cached_property
from numbers import Real
from typing import NamedTuple

import numpy as np

from seatreasure.core import (
    START,
    Position,
    SeaMap,
    Treasure,
    Velocity,
    default_map,
    path_collides,
    validate_map,
)

WRAPPER_NAMES = ("vamplew", "fuel", "implicit_constraint")


class InvalidConfigError(ValueError):
    def __init__(self, violations):
        self.violations = [str(v) for v in violations]
        super().__init__("invalid configuration: " + "; ".join(self.violations))


class InvalidActionError(ValueError):
    pass


class EpisodeFinishedError(RuntimeError):
    pass


class Action2D(NamedTuple):
    ax: int
    ay: int


@dataclass(frozen=True)
class EnvConfig:
    map: SeaMap = field(default_factory=default_map)
    acceleration_levels: tuple[int, ...] = (0, 1, 2, 3)
    fuel_costs: tuple[int, ...] = (0, 1, 4, 9)
    max_speed: int = 5
    max_steps: int = 1000
    implicit_collision_constraint: bool = False
    render_grid: bool = False
    render_treasure_values: bool = False
    treasure_randomization_seed: int | None = None
    wrappers: tuple[str, ...] = ("fuel",)

    def __post_init__(self):
        for name in ("acceleration_levels", "fuel_costs", "wrappers"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    @classmethod
    def vamplew(cls, **kw) -> "EnvConfig":
        """The bi-objective default: VamplewWrapper + DeepSeaTreasureV0."""
        kw.setdefault("wrappers", ("vamplew",))
        return cls(**kw)

    def validate(self) -> list[str]:
        out = [str(v) for v in validate_map(self.map)]
        lv, fc = self.acceleration_levels, self.fuel_costs
        if not lv or lv[0] != 0:
            out.append("acceleration_levels must start with 0")
        if any(b <= a for a, b in zip(lv, lv[1:])):
            out.append("acceleration_levels must be strictly increasing")
        if any(not isinstance(v, int) or isinstance(v, bool) for v in lv):
            out.append("acceleration_levels must be integers")
        if len(fc) != len(lv):
            out.append("len(fuel_costs) != len(acceleration_levels)")
        if any(not isinstance(c, Real) or c < 0 for c in fc):
            out.append("fuel_costs must be nonnegative")
        if not isinstance(self.max_speed, int) or self.max_speed < 0:
            out.append("max_speed must be a nonnegative integer")
        if not isinstance(self.max_steps, int) or self.max_steps < 1:
            out.append("max_steps must be a positive integer")
        for w in self.wrappers:
            if w not in WRAPPER_NAMES:
                out.append(f"unknown wrapper {w!r}")
        if "vamplew" in self.wrappers and self.wrappers[0] != "vamplew":
            out.append("vamplew must be the innermost wrapper")
        if "implicit_constraint" in self.wrappers and self.wrappers[-1] != "implicit_constraint":
            out.append("implicit_constraint must be the outermost wrapper")
        return out

    def check(self) -> "EnvConfig":
        problems = self.validate()
        if problems:
            raise InvalidConfigError(problems)
        return self

    @cached_property
    def actions(self) -> tuple[Action2D, ...]:
        """All accelerations, sorted; 49 for the default levels."""
        comps = sorted({s * lv for lv in self.acceleration_levels for s in (-1, 1)})
        return tuple(Action2D(ax, ay) for ax in comps for ay in comps)

    @cached_property
    def _fuel_by_magnitude(self) -> dict[int, Real]:
        return dict(zip(self.acceleration_levels, self.fuel_costs))

    def fuel_cost(self, action) -> Real:
        f = self._fuel_by_magnitude
        return f[abs(action[0])] + f[abs(action[1])]

    @cached_property
    def effective_map(self) -> SeaMap:
        """The map actually played, after optional treasure re-placement."""
        if self.treasure_randomization_seed is None:
            return self.map
        rng = random.Random(self.treasure_randomization_seed)
        cells = [c for c in self.map.water_cells() if c != START]
        picks = rng.sample(cells, len(self.map.treasures))
        treasures = tuple(Treasure(p, t.value) for p, t in zip(picks, self.map.treasures))
        return replace(self.map, treasures=treasures)

    @cached_property
    def treasure_order(self) -> tuple[Treasure, ...]:
        """Treasures in observation column order: ascending value, then (x, y)."""
        return tuple(sorted(self.effective_map.treasures, key=lambda t: (t.value, tuple(t.position))))

    def to_dict(self) -> dict:
        return {
            "map": self.map.to_dict(),
            "acceleration_levels": list(self.acceleration_levels),
            "fuel_costs": list(self.fuel_costs),
            "max_speed": self.max_speed,
            "max_steps": self.max_steps,
            "implicit_collision_constraint": self.implicit_collision_constraint,
            "render_grid": self.render_grid,
            "render_treasure_values": self.render_treasure_values,
            "treasure_randomization_seed": self.treasure_randomization_seed,
            "wrappers": list(self.wrappers),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EnvConfig":
        known = set(cls().to_dict())
        extra = set(d) - known
        if extra:
            raise InvalidConfigError([f"unknown field {k!r}" for k in sorted(extra)])
        kw = dict(d)
        if "map" in kw:
            try:
                kw["map"] = SeaMap.from_dict(kw["map"])
            except (KeyError, TypeError) as exc:
                raise InvalidConfigError([f"malformed map: {exc!r}"]) from None
        return cls(**kw)

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "EnvConfig":
        return cls.from_dict(json.loads(text))


def _canon(obj):
    if isinstance(obj, float) and obj.is_integer():
        return int(obj)
    if isinstance(obj, dict):
        return {k: _canon(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canon(v) for v in obj]
    return obj


def canonical_json(obj) -> str:
    """Sorted keys, two-space indent, integral floats as ints, trailing newline."""
    return json.dumps(_canon(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@dataclass(frozen=True)
class EnvState:
    pos: Position = START
    vel: Velocity = Velocity(0, 0)
    step_count: int = 0
    terminated: bool = False
    truncated: bool = False

    @property
    def done(self) -> bool:
        return self.terminated or self.truncated


@dataclass(frozen=True)
class StepInfo:
    collided: bool
    applied_accel: Action2D
    collected_value: Real | None = None


def transition(pos, vel, action, config: EnvConfig) -> tuple[Position, Velocity, bool]:
    """Pure kinematics of one step: ``(new_pos, new_vel, collided)``."""
    m = config.max_speed
    vx = max(-m, min(m, vel[0] + action[0]))
    vy = max(-m, min(m, vel[1] + action[1]))
    target = (pos[0] + vx, pos[1] + vy)
    if path_collides(pos, target, config.effective_map):
        return Position(*pos), Velocity(0, 0), True
    return Position(*target), Velocity(vx, vy), False


def check_action(action, config: EnvConfig) -> Action2D:
    try:
        ax, ay = action
    except (TypeError, ValueError):
        raise InvalidActionError(f"action must be a pair of integers, got {action!r}") from None
    levels = config.acceleration_levels
    if (
        not all(isinstance(c, (int, np.integer)) and not isinstance(c, bool) for c in (ax, ay))
        or abs(ax) not in levels
        or abs(ay) not in levels
    ):
        raise InvalidActionError(f"invalid action {action!r} for levels {list(levels)}")
    return Action2D(int(ax), int(ay))


def observe(state: EnvState, config: EnvConfig) -> np.ndarray:
    """2 x (1 + #treasures) matrix: velocity, then treasure offsets from the submarine."""
    cols = [(state.vel[0], state.vel[1])]
    cols += [(t.position.x - state.pos.x, t.position.y - state.pos.y) for t in config.treasure_order]
    return np.array(cols, dtype=np.int64).T


def reset(config: EnvConfig) -> tuple[EnvState, np.ndarray]:
    config.check()
    state = EnvState()
    return state, observe(state, config)


def step(state: EnvState, action, config: EnvConfig):
    """Advance one step.

    Returns ``(state, observation, reward, terminated, truncated, info)``
    where ``reward`` is the tuple ``(time, treasure)``.
    """
    if state.done:
        raise EpisodeFinishedError("step() called on a finished episode; call reset()")
    action = check_action(action, config)
    pos, vel, collided = transition(state.pos, state.vel, action, config)
    n = state.step_count + 1
    treasure = config.effective_map.treasure_at(pos)
    terminated = treasure is not None
    truncated = not terminated and n >= config.max_steps
    value = treasure.value if terminated else None
    new = EnvState(pos, vel, n, terminated, truncated)
    reward = (-1, value if terminated else 0)
    info = StepInfo(collided, action, value)
    return new, observe(new, config), reward, terminated, truncated, info


class DeepSeaTreasureV0:
    """Gym-style wrapper around the pure :func:`reset` / :func:`step` pair."""

    def __init__(self, config: EnvConfig | None = None):
        self._config = (config or EnvConfig()).check()
        self.state = EnvState()

    @property
    def unwrapped(self) -> "DeepSeaTreasureV0":
        return self

    @property
    def action_space(self) -> tuple[Action2D, ...]:
        return self._config.actions

    def config(self) -> EnvConfig:
        return self._config

    def reset(self):
        self.state, obs = reset(self._config)
        return obs, {}

    def step(self, action):
        self.state, obs, reward, term, trunc, info = step(self.state, action, self._config)
        return obs, reward, term, trunc, info

    def observe(self) -> np.ndarray:
        return observe(self.state, self._config)

    def render(self) -> str:
        from seatreasure.render import render_text

        return render_text(self.state, self._config)
