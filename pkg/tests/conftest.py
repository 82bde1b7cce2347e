import itertools

import pytest

from teqtools.core import Tournament, altset
from teqtools.counterexample import build_counterexample


def cycle_tournament(n):
    """i beats i+1..i+(n-1)//2 (mod n); the rotational regular tournament, odd n only."""
    assert n % 2 == 1
    beats = [0] * n
    for i in range(n):
        for k in range(1, (n - 1) // 2 + 1):
            beats[i] |= 1 << ((i + k) % n)
    return Tournament(beats)


def transitive_tournament(n):
    """i beats every j > i."""
    return Tournament([altset(range(i + 1, n)) for i in range(n)])


def all_tournaments(n):
    """Every labeled tournament of order n, one per orientation code."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        beats = [0] * n
        for k, (i, j) in enumerate(pairs):
            if (code >> k) & 1:
                beats[i] |= 1 << j
            else:
                beats[j] |= 1 << i
        yield Tournament(beats)


@pytest.fixture(scope="session")
def instance():
    return build_counterexample()


@pytest.fixture(scope="session")
def big_t(instance):
    return instance.tournament
