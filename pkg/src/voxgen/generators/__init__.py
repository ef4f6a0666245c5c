"""Built-in world generators, each a pure function of its parameters."""

from .dungeon import DungeonParams, gen_dungeon
from .gridworld import gen_gridworld
from .house import gen_tutorial_house
from .zombieworld import gen_zombieworld

__all__ = [
    "DungeonParams",
    "gen_dungeon",
    "gen_gridworld",
    "gen_tutorial_house",
    "gen_zombieworld",
]
