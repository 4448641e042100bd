from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seatreasure.core import (
    Position,
    SeaMap,
    Treasure,
    accessible_positions,
    collides,
    default_map,
    is_water,
    path_collides,
    swept_cells,
    validate_map,
)

DEFAULT = default_map()
coords = st.integers(-6, 6)
points = st.tuples(coords, coords)


def sampled_cells(a, b):
    """Independent oracle: sample the segment at every parameter where it can
    cross a grid line, and collect every cell whose closed square holds a sample."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    denom = 2 * max(1, abs(dx)) * max(1, abs(dy))
    cells = set()
    for k in range(denom + 1):
        t = Fraction(k, denom)
        px = a[0] + Fraction(1, 2) + t * dx
        py = a[1] + Fraction(1, 2) + t * dy
        xs = {int(px) - 1, int(px)} if px.denominator == 1 else {px.numerator // px.denominator}
        ys = {int(py) - 1, int(py)} if py.denominator == 1 else {py.numerator // py.denominator}
        cells |= {(x, y) for x in xs for y in ys}
    return cells


def test_default_map_shape():
    assert (DEFAULT.width, DEFAULT.height) == (10, 11)
    assert sorted(t.value for t in DEFAULT.treasures) == [1, 2, 3, 5, 8, 16, 24, 50, 74, 124]


@pytest.mark.parametrize("pos,expected", [((0, 0), True), ((0, -1), False), ((0, 10), False), ((9, 10), True)])
def test_is_water_examples(pos, expected):
    assert is_water(pos, DEFAULT) is expected


def test_column_zero_profile():
    # column 0 holds the start and the value-1 treasure; row 2 is seabed
    assert [is_water((0, y), DEFAULT) for y in range(4)] == [True, True, False, False]


@pytest.mark.parametrize("pos,expected", [((0, 0), False), ((-1, 0), True), ((9, 10), False), ((10, 0), True)])
def test_collides_examples(pos, expected):
    assert collides(pos, DEFAULT) is expected


@given(points)
def test_collides_is_not_water(p):
    assert collides(p, DEFAULT) != is_water(p, DEFAULT)


def test_swept_cells_examples():
    assert swept_cells((0, 0), (0, 0)) == [(0, 0)]
    assert swept_cells((0, 0), (3, 0)) == [(0, 0), (1, 0), (2, 0), (3, 0)]
    diag = swept_cells((0, 0), (2, 2))
    assert set(diag) == {(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2), (2, 1)}
    assert diag[0] == (0, 0) and diag[-1] == (2, 2)


def test_swept_cells_shallow_slope_has_no_corner_cells():
    assert swept_cells((0, 0), (2, 1)) == [(0, 0), (1, 0), (1, 1), (2, 1)]


@given(points, points)
def test_swept_cells_matches_sampling_oracle(a, b):
    cells = swept_cells(a, b)
    assert set(cells) == sampled_cells(a, b)
    assert len(cells) == len(set(cells))
    assert cells[0] == a and cells[-1] == b


@given(points, points)
def test_swept_cells_reverse_symmetry(a, b):
    assert swept_cells(a, b) == list(reversed(swept_cells(b, a)))


@given(points, points)
def test_swept_cells_inside_bounding_box(a, b):
    for x, y in swept_cells(a, b):
        assert min(a[0], b[0]) <= x <= max(a[0], b[0])
        assert min(a[1], b[1]) <= y <= max(a[1], b[1])


def test_path_collides_examples():
    assert not path_collides((0, 0), (0, 0), DEFAULT)
    assert path_collides((0, 0), (-1, 0), DEFAULT)
    assert path_collides((0, 0), (0, 3), DEFAULT)
    # the straight run along the surface is clear
    assert not path_collides((0, 0), (5, 0), DEFAULT)


def test_path_collides_catches_corner_cut():
    # (2,2) -> (4,4) touches corner cells (3,2),(2,3),(4,3),(3,4): all water
    assert not path_collides((2, 2), (4, 4), DEFAULT)
    # (5,3) -> (6,4): corner cells (5,4) treasure/water and (6,3) water
    assert not path_collides((5, 3), (6, 4), DEFAULT)
    # (5,4) -> (6,5): corner cell (5,5) is seabed
    assert path_collides((5, 4), (6, 5), DEFAULT)


@given(st.sampled_from(DEFAULT.water_cells()))
def test_path_collides_zero_move_is_free(a):
    assert not path_collides(a, a, DEFAULT)


def test_accessible_positions_default():
    cells = accessible_positions(DEFAULT)
    # all 61 water cells including the 10 treasure cells
    assert len(cells) == 61
    assert cells == set(DEFAULT.water_cells())


def test_accessible_positions_trivial_and_open():
    assert accessible_positions(SeaMap.open_water(1, 1)) == {Position(0, 0)}
    assert len(accessible_positions(SeaMap.open_water(10, 11))) == 110


def test_validate_map_ok():
    assert validate_map(DEFAULT) == []


def test_validate_map_reports_violations():
    bad = SeaMap(4, 4, (4, 4, 1, 4), (
        Treasure(Position(2, 3), 1),
        Treasure(Position(2, 3), 2),
        Treasure(Position(1, 1), 0),
        Treasure(Position(0, 0), 3),
    ))
    kinds = {v.kind for v in validate_map(bad)}
    assert kinds == {
        "duplicate treasure position",
        "treasure below seabed",
        "nonpositive treasure value",
        "start cell holds treasure",
    }
    assert validate_map(SeaMap(0, 3, (), ()))[0].kind == "dimension <= 0"
    blocked = SeaMap(2, 2, (0, 2), ())
    assert [v.kind for v in validate_map(blocked)] == ["start cell blocked"]


def test_validate_map_lists_cells():
    bad = SeaMap(4, 4, (4, 4, 4, 4), (Treasure(Position(2, 3), 1), Treasure(Position(2, 3), 5)))
    (v,) = validate_map(bad)
    assert v.cell == (2, 3) and "(2, 3)" in str(v)
