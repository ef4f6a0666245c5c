import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the oracles module

from voxgen import gen_tutorial_house, rasterize, semantic_map_from_world


@pytest.fixture(scope="session")
def tutorial_world():
    return gen_tutorial_house()


@pytest.fixture(scope="session")
def tutorial_map(tutorial_world):
    return semantic_map_from_world(tutorial_world)


@pytest.fixture(scope="session")
def tutorial_grid(tutorial_world):
    return rasterize(tutorial_world)
