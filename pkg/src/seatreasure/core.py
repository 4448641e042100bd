"""Grid geometry, sea maps and collision semantics.

Coordinates follow screen convention: ``x`` is the column (0 = leftmost),
``y`` the row (0 = surface), and ``y`` grows downward.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from numbers import Real
from typing import NamedTuple


class Position(NamedTuple):
    x: int
    y: int


class Velocity(NamedTuple):
    vx: int
    vy: int


START = Position(0, 0)


@dataclass(frozen=True)
class Treasure:
    position: Position
    value: Real

    def __post_init__(self):
        object.__setattr__(self, "position", Position(*self.position))


@dataclass(frozen=True)
class SeaMap:
    """Rectangular sea with a per-column seabed.

    ``seabed_depth[x]`` is the first non-water row of column ``x``; rows
    above it are water. Treasure cells are water cells.
    """

    width: int = 10
    height: int = 11
    seabed_depth: tuple[int, ...] = ()
    treasures: tuple[Treasure, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "seabed_depth", tuple(self.seabed_depth))
        object.__setattr__(self, "treasures", tuple(self.treasures))

    def treasure_at(self, pos) -> Treasure | None:
        return self._treasure_index().get(tuple(pos))

    def _treasure_index(self) -> dict[tuple[int, int], Treasure]:
        # cached on the instance; the dataclass is frozen so this is safe
        idx = self.__dict__.get("_tidx")
        if idx is None:
            idx = {tuple(t.position): t for t in self.treasures}
            object.__setattr__(self, "_tidx", idx)
        return idx

    def water_cells(self) -> list[Position]:
        return [Position(x, y) for x in range(self.width) for y in range(self.height)
                if is_water(Position(x, y), self)]

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "seabed_depth": list(self.seabed_depth),
            "treasures": [{"x": t.position.x, "y": t.position.y, "value": t.value}
                          for t in self.treasures],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SeaMap":
        return cls(
            width=d["width"],
            height=d["height"],
            seabed_depth=tuple(d["seabed_depth"]),
            treasures=tuple(Treasure(Position(t["x"], t["y"]), t["value"]) for t in d["treasures"]),
        )

    @classmethod
    def open_water(cls, width: int, height: int, treasures=()) -> "SeaMap":
        return cls(width, height, (height,) * width, tuple(treasures))


def default_map() -> SeaMap:
    """The canonical 10x11 Vamplew map (ten treasures, values 1..124)."""
    text = resources.files("seatreasure").joinpath("data/vamplew_map.json").read_text()
    return SeaMap.from_dict(json.loads(text))


def in_bounds(pos, sea: SeaMap) -> bool:
    x, y = pos
    return 0 <= x < sea.width and 0 <= y < sea.height


def is_water(pos, sea: SeaMap) -> bool:
    x, y = pos
    return in_bounds(pos, sea) and x < len(sea.seabed_depth) and y < sea.seabed_depth[x]


def collides(pos, sea: SeaMap) -> bool:
    """Leaving the grid counts as a collision, same as hitting the seabed."""
    return not is_water(pos, sea)


@lru_cache(maxsize=4096)
def _swept_offsets(dx: int, dy: int) -> tuple[tuple[int, int], ...]:
    # Cells meeting the closed segment between the centres of (0,0) and (dx,dy).
    # Work in doubled coordinates so the centres sit on odd integers.
    if dx == 0 and dy == 0:
        return ((0, 0),)
    hits = []
    for i in range(min(0, dx), max(0, dx) + 1):
        for j in range(min(0, dy), max(0, dy) + 1):
            lo, hi = Fraction(0), Fraction(1)
            for d, c in ((dx, i), (dy, j)):
                # segment coordinate 2*t*d + 1 must lie in [2c, 2c + 2]
                if d == 0:
                    if not (2 * c <= 1 <= 2 * c + 2):
                        lo, hi = Fraction(1), Fraction(0)
                    continue
                t1 = Fraction(2 * c - 1, 2 * d)
                t2 = Fraction(2 * c + 1, 2 * d)
                if t1 > t2:
                    t1, t2 = t2, t1
                lo, hi = max(lo, t1), min(hi, t2)
            if lo <= hi:
                # corner-touch ties resolved by side of the direction vector so
                # the order of (b -> a) is exactly the reverse of (a -> b)
                side = dx * (2 * j + 1 - 1) - dy * (2 * i + 1 - 1)
                hits.append((lo + hi, side, (i, j)))
    hits.sort()
    return tuple(h[2] for h in hits)


def swept_cells(start, end) -> list[Position]:
    """Supercover rasterization of the straight move from ``start`` to ``end``.

    Returns every cell touched by the closed segment joining the two cell
    centres, including both diagonal neighbours when the segment passes
    exactly through a cell corner. Ordered along the direction of travel.
    """
    sx, sy = start
    offsets = _swept_offsets(end[0] - sx, end[1] - sy)
    return [Position(sx + i, sy + j) for i, j in offsets]


def path_collides(start, end, sea: SeaMap) -> bool:
    """True if any cell swept after leaving ``start`` is not water."""
    sx, sy = start
    for i, j in _swept_offsets(end[0] - sx, end[1] - sy)[1:]:
        if not is_water((sx + i, sy + j), sea):
            return True
    return False


def accessible_positions(sea: SeaMap) -> set[Position]:
    """Water cells reachable from the start by unit moves.

    Treasure cells are counted but not expanded, since reaching one ends
    the episode.
    """
    if not is_water(START, sea):
        return set()
    seen = {START}
    queue = deque([START])
    while queue:
        p = queue.popleft()
        if p != START and sea.treasure_at(p) is not None:
            continue
        for dx, dy in ((0, -1), (1, 0), (0, 1), (-1, 0)):
            q = Position(p.x + dx, p.y + dy)
            if q not in seen and is_water(q, sea):
                seen.add(q)
                queue.append(q)
    return seen


@dataclass(frozen=True)
class Violation:
    kind: str
    cell: tuple[int, int] | None = None

    def __str__(self):
        return self.kind if self.cell is None else f"{self.kind} at {tuple(self.cell)}"


def validate_map(sea: SeaMap) -> list[Violation]:
    """Check every map invariant. An empty list means the map is valid."""
    out: list[Violation] = []
    if sea.width <= 0 or sea.height <= 0:
        out.append(Violation("dimension <= 0"))
        return out
    if len(sea.seabed_depth) != sea.width:
        out.append(Violation("seabed_depth length != width"))
    for x, d in enumerate(sea.seabed_depth):
        if not isinstance(d, int) or d < 0 or d > sea.height:
            out.append(Violation("seabed depth out of range", (x, d)))
    if not is_water(START, sea):
        out.append(Violation("start cell blocked", START))
    seen = set()
    for t in sea.treasures:
        cell = tuple(t.position)
        if cell in seen:
            out.append(Violation("duplicate treasure position", cell))
        seen.add(cell)
        if not isinstance(t.value, Real) or isinstance(t.value, bool) or not t.value > 0:
            out.append(Violation("nonpositive treasure value", cell))
        if cell == tuple(START):
            out.append(Violation("start cell holds treasure", cell))
        elif not in_bounds(cell, sea):
            out.append(Violation("treasure out of bounds", cell))
        elif not is_water(cell, sea):
            out.append(Violation("treasure below seabed", cell))
    return out
