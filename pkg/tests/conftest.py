from __future__ import annotations

import itertools

import pytest

from loonyend import Endgame, chain, loop
from loonyend.oracle import Oracle

# Bounds of the exhaustive verification set: every multiset of at most five
# components with chain lengths 3..8 and loop lengths 4, 6, 8, 10.
EXHAUSTIVE_CHAIN_LENGTHS = tuple(range(3, 9))
EXHAUSTIVE_LOOP_LENGTHS = (4, 6, 8, 10)
EXHAUSTIVE_MAX_COMPONENTS = 5


def exhaustive_component_types() -> list:
    return [chain(n) for n in EXHAUSTIVE_CHAIN_LENGTHS] + [
        loop(n) for n in EXHAUSTIVE_LOOP_LENGTHS
    ]


@pytest.fixture(scope="session")
def oracle() -> Oracle:
    return Oracle()


@pytest.fixture(scope="session")
def exhaustive_games() -> list[Endgame]:
    types = exhaustive_component_types()
    games = []
    for size in range(EXHAUSTIVE_MAX_COMPONENTS + 1):
        for combo in itertools.combinations_with_replacement(types, size):
            games.append(Endgame.from_components(combo))
    return games
