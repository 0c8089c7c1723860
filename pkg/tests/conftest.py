import itertools
import math

import pytest

from listcolor.graphs import Graph
from listcolor.lists import ListAssignment


@pytest.fixture
def c5():
    return Graph(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def c4():
    return Graph(4, [(i, (i + 1) % 4) for i in range(4)])


@pytest.fixture
def k4():
    return Graph(4, list(itertools.combinations(range(4), 2)))


def uniform_lists(n, colors, sigma=None):
    """Every vertex gets the same list."""
    colors = tuple(sorted(colors))
    return ListAssignment(sigma or max(colors), len(colors), [colors] * n)


def exhaustive_girth(g):
    """Shortest cycle by scanning cycle lengths in increasing order and all
    vertex arrangements; the independent girth oracle."""
    for length in range(3, g.n + 1):
        for subset in itertools.combinations(range(g.n), length):
            first, rest = subset[0], subset[1:]
            for perm in itertools.permutations(rest):
                cycle = (first,) + perm
                if all(
                    g.has_edge(cycle[i], cycle[(i + 1) % length]) for i in range(length)
                ):
                    return length
    return math.inf
