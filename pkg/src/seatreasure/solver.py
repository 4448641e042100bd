"""Exact Pareto fronts of episode outcomes.

Tri-objective search
--------------------
Nodes are ``(position, velocity)`` pairs. A label is a partial trajectory
reaching a node, summarised by ``(steps, fuel_spent)``. The treasure
collected depends only on the cell an episode ends in, and the cost of any
continuation depends only on the node, so a label whose ``(steps, fuel)``
is weakly dominated by another label at the same node can only lead to
dominated outcomes and is dropped.

Steps grow by exactly one per expansion, so the search runs in layers:
layer ``t`` holds labels with ``t`` steps, and a new label survives only if
its fuel is strictly below the best fuel recorded at its node in any
earlier layer. Fuel per node strictly decreases across surviving labels,
so the search stops on its own long before the horizon.

Within a layer, labels are kept in lexicographic order of their action
sequences. Children are generated parent-by-parent with actions in
sorted order, so the first label to claim a node (or an outcome) at a
given cost is the lexicographically smallest trajectory achieving it.

Episodes that never reach a treasure end as ``(-max_steps, 0, -fuel)``;
the zero-fuel idle episode dominates all of them and is added directly.
"""
from __future__ import annotations

import warnings
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from seatreasure.core import START, Position, Velocity, path_collides
from seatreasure.engine import Action2D, EnvConfig, transition
from seatreasure.pareto import INTERIOR, hull_classify, nondominated_filter
from seatreasure.wrappers import DIRECTIONS, make_env


class ResourceLimitError(RuntimeError):
    pass


class IncompleteEpisodeError(RuntimeError):
    pass


@dataclass(frozen=True)
class SolutionPoint:
    rewards: tuple
    actions: tuple
    hull_label: str | None = None


@dataclass(slots=True)
class Label:
    node: tuple[Position, Velocity]
    steps: int
    fuel_spent: int
    parent: "Label | None" = None
    action: Action2D | None = None
    rank: tuple = field(default=(), compare=False)

    def trajectory(self) -> tuple[Action2D, ...]:
        out = []
        lab = self
        while lab.parent is not None:
            out.append(lab.action)
            lab = lab.parent
        return tuple(reversed(out))


@dataclass
class SolveStats:
    labels_created: int = 0
    layers: int = 0
    nodes: int = 0


def _expand_chunk(chunk, config: EnvConfig, successors):
    """Children and terminal candidates of a slice of one layer, in lexicographic order."""
    sea = config.effective_map
    kids = []
    cands = []
    for idx, lab in chunk:
        pos, vel = lab.node
        for a_idx, (action, (npos, nvel, collided, cost)) in enumerate(successors(pos, vel)):
            fuel = lab.fuel_spent + cost
            t = sea.treasure_at(npos)
            if t is not None:
                cands.append((t.value, fuel, idx, a_idx, lab, action))
            else:
                kids.append(((npos, nvel), fuel, idx, a_idx, lab, action))
    return kids, cands


def solve_tri_front(
    config: EnvConfig | None = None,
    *,
    threads: int = 1,
    max_labels: int | None = None,
    prune: bool = True,
    stats: SolveStats | None = None,
) -> list[SolutionPoint]:
    """Exact (time, treasure, fuel) Pareto front over all episodes.

    ``prune=False`` keeps every distinct ``(node, fuel)`` label per layer
    instead of only nondominated ones; it exists to test that pruning is
    safe and is only practical on small maps with short horizons.
    """
    config = (config or EnvConfig()).check()
    if config.implicit_collision_constraint:
        raise ValueError("solve_tri_front does not model the implicit collision penalty")
    stats = stats if stats is not None else SolveStats()
    actions = config.actions
    cache: dict = {}

    def successors(pos, vel):
        key = (pos, vel)
        res = cache.get(key)
        if res is None:
            res = []
            for a in actions:
                npos, nvel, collided = transition(pos, vel, a, config)
                res.append((a, (npos, nvel, collided, 0 if collided else config.fuel_cost(a))))
            cache[key] = res
        return res

    root = Label((START, Velocity(0, 0)), 0, 0)
    best: dict = {root.node: 0}
    layer = [root]
    # (t, value, fuel) -> label reaching that outcome first in lexicographic order
    outcomes: dict[tuple, Label] = {}
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for t in range(1, config.max_steps + 1):
            if not layer:
                break
            stats.layers = t
            indexed = list(enumerate(layer))
            if pool is not None:
                size = -(-len(indexed) // threads)
                chunks = [indexed[i:i + size] for i in range(0, len(indexed), size)]
                parts = list(pool.map(lambda c: _expand_chunk(c, config, successors), chunks))
            else:
                parts = [_expand_chunk(indexed, config, successors)]
            nxt: dict = {}
            for kids, cands in parts:
                for value, fuel, idx, a_idx, lab, action in cands:
                    key = (-t, value, -fuel)
                    if key not in outcomes:
                        outcomes[key] = Label(None, t, fuel, lab, action)
                for node, fuel, idx, a_idx, lab, action in kids:
                    if t >= config.max_steps:
                        continue
                    if prune:
                        if fuel >= best.get(node, float("inf")):
                            continue
                        cur = nxt.get(node)
                        if cur is None or fuel < cur.fuel_spent:
                            nxt[node] = Label(node, t, fuel, lab, action, (idx, a_idx))
                    else:
                        k = (node, fuel)
                        if k not in nxt:
                            nxt[k] = Label(node, t, fuel, lab, action, (idx, a_idx))
            layer = sorted(nxt.values(), key=lambda lab: lab.rank)
            stats.labels_created += len(layer)
            if max_labels is not None and stats.labels_created > max_labels:
                raise ResourceLimitError(f"label store exceeded {max_labels} labels")
            for lab in layer:
                if lab.fuel_spent < best.get(lab.node, float("inf")):
                    best[lab.node] = lab.fuel_spent
    finally:
        if pool is not None:
            pool.shutdown()
    stats.nodes = len(best)

    idle = tuple(Action2D(0, 0) for _ in range(config.max_steps))
    timeout = (-config.max_steps, 0, 0)
    trajectories = {k: lab.trajectory() for k, lab in outcomes.items()}
    trajectories.setdefault(timeout, idle)
    front = nondominated_filter(trajectories)
    return [SolutionPoint(p, trajectories[p]) for p in front]


def solve_bi_front(config: EnvConfig | None = None) -> list[SolutionPoint]:
    """Exact (time, treasure) front under four-direction unit moves.

    Breadth-first search gives the fewest steps to every treasure; treasure
    cells end the episode so they are never expanded. Direction codes are
    tried in ascending order, so the stored path is the lexicographically
    smallest shortest path.
    """
    config = (config or EnvConfig.vamplew()).check()
    sea = config.effective_map
    dist = {START: ()}
    queue = deque([START])
    while queue:
        p = queue.popleft()
        if p != START and sea.treasure_at(p) is not None:
            continue
        for code in sorted(DIRECTIONS):
            dx, dy = DIRECTIONS[code]
            q = Position(p.x + dx, p.y + dy)
            if q in dist or path_collides(p, q, sea):
                continue
            dist[q] = dist[p] + (code,)
            queue.append(q)
    cands = {}
    for t in sea.treasures:
        path = dist.get(t.position)
        if path is None or len(path) > config.max_steps:
            warnings.warn(f"treasure {t.value} at {tuple(t.position)} is unreachable; excluded")
            continue
        key = (-len(path), t.value)
        if key not in cands or path < cands[key]:
            cands[key] = path
    if not cands:
        return []
    return [SolutionPoint(p, cands[p]) for p in nondominated_filter(cands)]


def with_hull_labels(front: list[SolutionPoint]) -> list[SolutionPoint]:
    """Attach vertex/interior labels to every point that reached a treasure.

    Treasure values are positive, so a zero treasure component marks a
    timeout; those points stay unlabelled and do not shape the hull.
    """
    core = [p.rewards for p in front if p.rewards[1] != 0]
    labels = dict(zip(core, hull_classify(core))) if core else {}
    return [SolutionPoint(p.rewards, p.actions, labels.get(p.rewards)) for p in front]


def count_interior(front: list[SolutionPoint]) -> int:
    return sum(p.hull_label == INTERIOR for p in front)


def replay(actions, config: EnvConfig | None = None) -> tuple:
    """Run ``actions`` through the configured wrapper stack; return the episode return."""
    config = config or EnvConfig()
    env = make_env(config)
    env.reset()
    total = None
    done = False
    for i, a in enumerate(actions):
        if done:
            raise ValueError(f"episode ended before action {i}")
        _, reward, term, trunc, _ = env.step(a)
        total = tuple(reward) if total is None else tuple(x + y for x, y in zip(total, reward))
        done = term or trunc
    if not done:
        raise IncompleteEpisodeError("incomplete episode: actions ran out before the episode ended")
    return total


def brute_force_enumerate(config: EnvConfig, horizon: int, action_subset, *, limit: int = 10**7) -> list[tuple]:
    """Returns of every episode that finishes within ``horizon`` actions.

    Walks the full action tree depth-first through the real environment,
    restoring the engine state between siblings. For tests only.
    """
    action_subset = list(action_subset)
    if len(action_subset) ** horizon > limit:
        raise ResourceLimitError(f"{len(action_subset)}^{horizon} action strings exceeds {limit}")
    env = make_env(config)
    env.reset()
    out: list[tuple] = []

    def walk(depth, total):
        if depth == horizon:
            return
        saved = env.state
        for a in action_subset:
            env.state = saved
            _, reward, term, trunc, _ = env.step(a)
            ret = tuple(x + y for x, y in zip(total, reward)) if total else tuple(reward)
            if term or trunc:
                out.append(ret)
            else:
                walk(depth + 1, ret)
        env.state = saved

    walk(0, ())
    return out


def reachable_nodes(config: EnvConfig | None = None) -> tuple[set, set]:
    """All ``(position, velocity)`` pairs reachable from the start.

    Returns ``(nodes, terminal)``; ``terminal`` are the nodes on treasures,
    which accept no further actions.
    """
    config = (config or EnvConfig()).check()
    sea = config.effective_map
    start = (START, Velocity(0, 0))
    seen = {start}
    terminal = set()
    queue = deque([start])
    while queue:
        pos, vel = queue.popleft()
        if sea.treasure_at(pos) is not None:
            terminal.add((pos, vel))
            continue
        for a in config.actions:
            npos, nvel, _ = transition(pos, vel, a, config)
            if (npos, nvel) not in seen:
                seen.add((npos, nvel))
                queue.append((npos, nvel))
    return seen, terminal


