"""How the tri-objective front changes with the speed cap."""
import sys

from seatreasure import EnvConfig
from seatreasure.solver import count_interior, solve_tri_front, with_hull_labels

for cap in map(int, sys.argv[1:] or ["1", "2", "3", "4", "5", "6"]):
    front = with_hull_labels(solve_tri_front(EnvConfig(max_speed=cap)))
    values = sorted({p.rewards[1] for p in front if p.rewards[1]})
    print(f"max_speed={cap}: {len(front)} points, {count_interior(front)} interior, treasures {values}")
