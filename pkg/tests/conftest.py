import random

import pytest

from symtor.core import new_sym_ideal

CORPUS_SEED = 20240611
CORPUS_SIZE = 200


def random_ideal(rng: random.Random, n: int, max_gens: int = 3, max_entry: int = 4):
    """A non-zero symmetric ideal with at most ``max_gens`` generators."""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        gens.append(tuple(sorted((rng.randint(0, max_entry) for _ in range(n)), reverse=True)))
    return new_sym_ideal(n, gens)


def corpus(size: int = CORPUS_SIZE, seed: int = CORPUS_SEED, ns=(2, 3, 4, 5)):
    """Seeded list of random ideals, cycling through the variable counts."""
    rng = random.Random(seed)
    return [random_ideal(rng, ns[k % len(ns)]) for k in range(size)]


@pytest.fixture(scope="session")
def worked_ideal():
    return new_sym_ideal(3, [(4, 1, 1), (5, 2, 0)])


@pytest.fixture(scope="session")
def stability_ideal():
    return new_sym_ideal(2, [(5, 1), (2, 2)])


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(size=40, seed=7)
