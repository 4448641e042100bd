"""Size of the default problem: actions, observations, reachable states."""
from seatreasure import EnvConfig
from seatreasure.core import accessible_positions
from seatreasure.engine import DeepSeaTreasureV0
from seatreasure.solver import reachable_nodes

cfg = EnvConfig()
env = DeepSeaTreasureV0(cfg)
obs, _ = env.reset()
nodes, terminal = reachable_nodes(cfg)
print(f"actions               {len(cfg.actions)}")
print(f"observation shape     {obs.shape}")
print(f"accessible positions  {len(accessible_positions(cfg.map))}")
print(f"reachable (pos, vel)  {len(nodes)}  ({len(terminal)} on treasures)")
print(f"state-action pairs    {(len(nodes) - len(terminal)) * len(cfg.actions)}")
