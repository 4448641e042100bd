"""Text and SVG frames of an environment state."""
from __future__ import annotations

from fractions import Fraction
from numbers import Real

from seatreasure.core import is_water
from seatreasure.engine import EnvConfig, EnvState

WATER, SEABED, SUB, TREASURE = ".", "#", "S", "T"


def format_number(v: Real) -> str:
    """Integers without a decimal point, everything else as shortest round-trip decimal."""
    if isinstance(v, Fraction):
        v = int(v) if v.denominator == 1 else float(v)
    if isinstance(v, float) and v.is_integer():
        v = int(v)
    return repr(v) if isinstance(v, float) else str(int(v))


def _glyph_rows(state: EnvState, config: EnvConfig) -> list[list[str]]:
    sea = config.effective_map
    rows = []
    for y in range(sea.height):
        row = []
        for x in range(sea.width):
            t = sea.treasure_at((x, y))
            if (x, y) == tuple(state.pos):
                g = SUB
            elif t is not None:
                g = format_number(t.value) if config.render_treasure_values else TREASURE
            elif is_water((x, y), sea):
                g = WATER
            else:
                g = SEABED
            row.append(g)
        rows.append(row)
    return rows


def render_text(state: EnvState, config: EnvConfig) -> str:
    rows = _glyph_rows(state, config)
    w = max(len(g) for r in rows for g in r)
    cells = [[g.rjust(w) for g in r] for r in rows]
    if not config.render_grid:
        return "\n".join("".join(r) for r in cells) + "\n"
    rule = "+" + ("-" * w + "+") * len(cells[0])
    lines = [rule]
    for r in cells:
        lines.append("|" + "|".join(r) + "|")
        lines.append(rule)
    return "\n".join(lines) + "\n"


def render_svg(state: EnvState, config: EnvConfig, cell: int = 32) -> str:
    sea = config.effective_map
    w, h = sea.width * cell, sea.height * cell
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="#9fd3f5"/>',
    ]
    for x in range(sea.width):
        for y in range(sea.height):
            if not is_water((x, y), sea):
                out.append(f'<rect x="{x * cell}" y="{y * cell}" width="{cell}" height="{cell}" fill="#5b4636"/>')
    for t in sorted(sea.treasures, key=lambda t: tuple(t.position)):
        x, y = t.position
        out.append(f'<rect x="{x * cell + 4}" y="{y * cell + 4}" width="{cell - 8}" height="{cell - 8}" fill="#f2c230"/>')
        if config.render_treasure_values:
            out.append(
                f'<text x="{x * cell + cell // 2}" y="{y * cell + cell // 2 + 4}" font-size="{cell // 3}" '
                f'text-anchor="middle" fill="#000000">{format_number(t.value)}</text>'
            )
    if config.render_grid:
        for x in range(sea.width + 1):
            out.append(f'<line x1="{x * cell}" y1="0" x2="{x * cell}" y2="{h}" stroke="#335566" stroke-width="1"/>')
        for y in range(sea.height + 1):
            out.append(f'<line x1="0" y1="{y * cell}" x2="{w}" y2="{y * cell}" stroke="#335566" stroke-width="1"/>')
    sx, sy = state.pos
    out.append(f'<circle cx="{sx * cell + cell // 2}" cy="{sy * cell + cell // 2}" r="{cell // 3}" fill="#e04040"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
