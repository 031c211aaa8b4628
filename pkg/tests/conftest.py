import random

import pytest

import bridgekit as bk


@pytest.fixture
def rng():
    return random.Random(20240811)


def random_classical(rng, max_crossings=6):
    """Random realizable signed code: a classical seed with random crossing
    switches and kinks, both of which preserve planarity."""
    seeds = [
        bk.SignedGaussCode((), ()),
        bk.SignedGaussCode((-1, 2, -3, 1, -2, 3), (-1, -1, -1)),
        bk.SignedGaussCode((1, -2, 3, -4, 2, -1, 4, -3), (1, 1, -1, -1)),
    ]
    c = rng.choice(seeds)
    for k in range(1, c.crossings + 1):
        if rng.random() < 0.5:
            c = bk.crossing_switch(c, k)
    while c.crossings < max_crossings and rng.random() < 0.7:
        c = bk.apply_move1(
            c,
            rng.randint(0, len(c.entries)),
            "insert",
            over_first=rng.random() < 0.5,
            sign=rng.choice((1, -1)),
        )
    return c
