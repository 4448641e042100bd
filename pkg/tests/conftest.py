import pytest

from seatreasure.core import Position, SeaMap, Treasure
from seatreasure.engine import EnvConfig


def toy_map() -> SeaMap:
    # 4x4 staircase with four treasures
    #   . . . .
    #   1 . . .
    #   # 3 . .
    #   # # 5 9
    return SeaMap(
        width=4,
        height=4,
        seabed_depth=(2, 3, 4, 4),
        treasures=(
            Treasure(Position(0, 1), 1),
            Treasure(Position(1, 2), 3),
            Treasure(Position(2, 3), 5),
            Treasure(Position(3, 3), 9),
        ),
    )


@pytest.fixture
def default_config():
    return EnvConfig()


@pytest.fixture
def toy_tri_config():
    return EnvConfig(map=toy_map(), acceleration_levels=(0, 1), fuel_costs=(0, 1), max_steps=6)


@pytest.fixture
def toy_bi_config():
    return EnvConfig.vamplew(map=toy_map(), max_steps=8)
