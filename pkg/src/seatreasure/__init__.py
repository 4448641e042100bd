"""Deep Sea Treasure environments and exact Pareto-front tooling."""

__version__ = "0.1.0"

from seatreasure.core import Position, SeaMap, Treasure, Velocity, default_map
from seatreasure.engine import Action2D, DeepSeaTreasureV0, EnvConfig, EnvState, StepInfo
from seatreasure.pareto import dominates, hull_classify, nondominated_filter
from seatreasure.solver import SolutionPoint, solve_bi_front, solve_tri_front
from seatreasure.wrappers import FuelWrapper, ImplicitConstraintWrapper, VamplewWrapper, make_env

__all__ = [
    "Action2D",
    "DeepSeaTreasureV0",
    "EnvConfig",
    "EnvState",
    "FuelWrapper",
    "ImplicitConstraintWrapper",
    "Position",
    "SeaMap",
    "SolutionPoint",
    "StepInfo",
    "Treasure",
    "VamplewWrapper",
    "Velocity",
    "default_map",
    "dominates",
    "hull_classify",
    "make_env",
    "nondominated_filter",
    "solve_bi_front",
    "solve_tri_front",
]
