"""Seeded instance families shared by the unit and acceptance tests."""

import random

from subset_transversal.generators import random_cograph, random_in_class, random_terminals
from subset_transversal.recognition import sp1_p4

# (mode, p) rotations per s: the walk reaches sparse members of the class,
# rejection at high p reaches the dense ones.
SP1P3_MIXES = {
    0: [("walk", 0.5)],
    1: [("walk", 0.5), ("auto", 0.85), ("auto", 0.95)],
    2: [("walk", 0.5), ("auto", 0.7), ("auto", 0.85)],
}
SP1P4_MIXES = {
    1: [("walk", 0.5), ("auto", 0.75)],
    2: [("walk", 0.5), ("auto", 0.6)],
}


def _size_and_terminals(seed, n_min, n_max):
    rng = random.Random(seed)
    n = n_min + int(rng.random() * (n_max - n_min + 1))
    return n, rng


def _terminals(n, rng):
    return random_terminals(n, rng, rng.random())


def sp1p3_graphs(s, count, n_max=13, n_min=3, seed0=0):
    """Yield ``(seed, G, T)`` with G (sP1+P3)-free."""
    mixes = SP1P3_MIXES[s]
    for i in range(count):
        seed = seed0 + 1000 * s + i
        n, rng = _size_and_terminals(seed, n_min, n_max)
        mode, p = mixes[i % len(mixes)]
        G = random_in_class(n, s, p=p, seed=seed, mode=mode)
        yield seed, G, _terminals(n, rng)


def sp1p4_graphs(s, count, n_max=12, n_min=3, seed0=0):
    mixes = SP1P4_MIXES[s]
    for i in range(count):
        seed = seed0 + 5000 + 1000 * s + i
        n, rng = _size_and_terminals(seed, n_min, n_max)
        mode, p = mixes[i % len(mixes)]
        G = random_in_class(n, s, p=p, seed=seed, mode=mode, family=sp1_p4)
        yield seed, G, _terminals(n, rng)


def cographs(count, n_max=14, n_min=1, seed0=0):
    for i in range(count):
        seed = seed0 + 20000 + i
        n, rng = _size_and_terminals(seed, n_min, n_max)
        yield seed, random_cograph(n, seed), _terminals(n, rng)
