import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seatreasure.core import Position, SeaMap, Treasure, Velocity, path_collides
from seatreasure.engine import (
    DeepSeaTreasureV0,
    EnvConfig,
    EnvState,
    EpisodeFinishedError,
    InvalidActionError,
    InvalidConfigError,
    observe,
    step,
    transition,
)
from seatreasure.render import render_svg, render_text

CONFIG = EnvConfig()
action_seqs = st.lists(st.sampled_from(CONFIG.actions), min_size=1, max_size=40)


def run(actions, config=CONFIG):
    env = DeepSeaTreasureV0(config)
    env.reset()
    trace = []
    for a in actions:
        if env.state.done:
            break
        obs, reward, term, trunc, info = env.step(a)
        trace.append((env.state, obs.tolist(), reward, term, trunc, info))
    return trace


def test_reset_observation():
    env = DeepSeaTreasureV0()
    obs, info = env.reset()
    assert info == {}
    assert obs.shape == (2, 11)
    assert obs[:, 0].tolist() == [0, 0]
    # treasure columns sorted by value; first is the value-1 treasure at (0, 1)
    assert obs[:, 1].tolist() == [0, 1]
    assert obs[:, -1].tolist() == [9, 10]


def test_action_space():
    assert len(CONFIG.actions) == 49
    assert CONFIG.actions[0] == (-3, -3) and CONFIG.actions[-1] == (3, 3)


def test_first_step_examples():
    env = DeepSeaTreasureV0()
    env.reset()
    _, reward, term, trunc, info = env.step((1, 0))
    assert env.state.pos == (1, 0) and env.state.vel == (1, 0)
    assert reward == (-1, 0) and not term and not trunc and not info.collided
    _, reward, term, _, info = env.step((0, 1))
    assert env.state.pos == (2, 1) and reward == (-1, 0)


def test_collect_shallowest_treasure():
    env = DeepSeaTreasureV0()
    env.reset()
    _, reward, term, trunc, info = env.step((0, 1))
    assert reward == (-1, 1) and term and not trunc
    assert info.collected_value == 1


def test_collision_keeps_position_and_zeroes_velocity():
    env = DeepSeaTreasureV0()
    env.reset()
    _, reward, _, _, info = env.step((-1, 0))
    assert info.collided and env.state.pos == (0, 0) and env.state.vel == (0, 0)
    assert reward == (-1, 0)


def test_speed_is_clamped():
    pos, vel, collided = transition((0, 0), (4, 0), (3, 0), CONFIG)
    assert (pos, vel, collided) == ((5, 0), (5, 0), False)
    pos, vel, _ = transition((5, 0), (5, 0), (3, 0), CONFIG)
    assert vel == (0, 0)  # (10, 0) is out of bounds


def test_pass_through_does_not_collect():
    sea = SeaMap.open_water(5, 5, [Treasure(Position(2, 0), 7)])
    cfg = EnvConfig(map=sea)
    state = EnvState(Position(0, 0), Velocity(0, 0))
    state, _, reward, term, _, _ = step(state, (3, 0), cfg)
    assert state.pos == (3, 0) and reward == (-1, 0) and not term


def test_truncation_at_horizon():
    cfg = EnvConfig(max_steps=3)
    trace = run([(0, 0)] * 3, cfg)
    assert [t[4] for t in trace] == [False, False, True]
    assert [t[3] for t in trace] == [False, False, False]


def test_step_after_done_raises():
    env = DeepSeaTreasureV0()
    env.reset()
    env.step((0, 1))
    with pytest.raises(EpisodeFinishedError):
        env.step((0, 0))


@pytest.mark.parametrize("bad", [(4, 0), (0, -5), (1,), "ab", (True, 0), (1.0, 0)])
def test_invalid_action(bad):
    env = DeepSeaTreasureV0()
    env.reset()
    with pytest.raises(InvalidActionError):
        env.step(bad)


def test_invalid_config():
    with pytest.raises(InvalidConfigError) as err:
        DeepSeaTreasureV0(EnvConfig(fuel_costs=(0, 1, 4)))
    assert "len(fuel_costs) != len(acceleration_levels)" in err.value.violations
    with pytest.raises(InvalidConfigError):
        EnvConfig(wrappers=("fuel", "vamplew")).check()
    with pytest.raises(InvalidConfigError):
        EnvConfig(wrappers=("implicit_constraint", "fuel")).check()


@settings(max_examples=60, deadline=None)
@given(action_seqs)
def test_step_invariants(actions):
    state = EnvState()
    for a in actions:
        if state.done:
            break
        new, obs, reward, term, trunc, info = step(state, a, CONFIG)
        assert reward[0] == -1
        assert (reward[1] > 0) == term
        assert max(abs(new.vel[0]), abs(new.vel[1])) <= CONFIG.max_speed
        if info.collided:
            assert new.pos == state.pos and new.vel == (0, 0)
        else:
            assert new.pos == (state.pos[0] + new.vel[0], state.pos[1] + new.vel[1])
            assert not path_collides(state.pos, new.pos, CONFIG.map)
        # observation: velocity column, then treasure offsets translate with the sub
        assert obs[:, 0].tolist() == list(new.vel)
        base = observe(EnvState(Position(0, 0)), CONFIG)[:, 1:]
        assert (obs[:, 1:] == base - np.array(new.pos).reshape(2, 1)).all()
        state = new


@settings(max_examples=30, deadline=None)
@given(action_seqs)
def test_determinism(actions):
    assert run(actions) == run(actions)


def test_config_round_trip_replay():
    cfg = EnvConfig(max_steps=1000, render_grid=True)
    rebuilt = EnvConfig.from_json(cfg.to_json())
    assert rebuilt == cfg and rebuilt.to_json() == cfg.to_json()
    import random

    rng = random.Random(7)
    acts = [rng.choice(cfg.actions[:]) for _ in range(100)]
    assert run(acts, cfg) == run(acts, rebuilt)


def test_from_dict_rejects_unknown_field():
    d = CONFIG.to_dict()
    d["speed"] = 3
    with pytest.raises(InvalidConfigError):
        EnvConfig.from_dict(d)


def test_treasure_randomization_is_seeded():
    a = EnvConfig(treasure_randomization_seed=3).effective_map
    b = EnvConfig(treasure_randomization_seed=3).effective_map
    c = EnvConfig(treasure_randomization_seed=4).effective_map
    assert a == b and a != c
    assert sorted(t.value for t in a.treasures) == sorted(t.value for t in CONFIG.map.treasures)
    assert all(t.position != (0, 0) and t.position in set(CONFIG.map.water_cells()) for t in a.treasures)


def test_render_text_dimensions():
    text = render_text(EnvState(), CONFIG)
    lines = text.splitlines()
    assert len(lines) == 11 and all(len(l) == 10 for l in lines)
    assert lines[0][0] == "S" and lines[1][0] == "T" and lines[2][0] == "#"
    assert not any(ch.isdigit() for ch in text)
    assert render_text(EnvState(), CONFIG) == text


def test_render_values_and_grid():
    cfg = EnvConfig(render_treasure_values=True, render_grid=True)
    text = render_text(EnvState(), cfg)
    assert "124" in text and text.startswith("+---+")
    svg = render_svg(EnvState(), CONFIG)
    assert svg.startswith("<svg") and "<text" not in svg
    assert "<text" in render_svg(EnvState(), cfg)
