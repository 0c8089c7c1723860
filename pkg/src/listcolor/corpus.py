"""Canonical small-graph corpus for oracle suites.

The corpus is the classic graph atlas enumeration (all graphs on up to seven
vertices in their published order), filtered to connected graphs.  That gives
a fixed, reproducible "canonical enumeration": 996 connected graphs with at
most 7 vertices, 143 with at most 6.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InvalidParameterError
from .graphs import Graph
from .lists import ListAssignment, SeedSpec, derive_seed, sample_assignment


@lru_cache(maxsize=None)
def small_connected_graphs(max_vertices: int = 7) -> tuple[Graph, ...]:
    """All connected graphs with 1..max_vertices vertices, one per
    isomorphism class, in atlas order."""
    if not 1 <= max_vertices <= 7:
        raise InvalidParameterError("the atlas corpus covers 1..7 vertices")
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for atlas_graph in graph_atlas_g():
        n = atlas_graph.number_of_nodes()
        if 1 <= n <= max_vertices and nx.is_connected(atlas_graph):
            out.append(Graph(n, list(atlas_graph.edges())))
    return tuple(out)


def corpus_assignments(
    g: Graph,
    graph_index: int,
    count: int,
    combos: tuple[tuple[int, int], ...],
    base_seed: int,
):
    """Deterministic stream of `count` random assignments for one corpus
    graph, cycling (k, sigma) through `combos`.  Yields (assignment_index,
    assignment)."""
    for i in range(count):
        k, sigma = combos[i % len(combos)]
        seed = SeedSpec(derive_seed(base_seed, graph_index, i))
        yield i, sample_assignment(g, k, sigma, seed)


def default_combos(ks=(2, 3), sigma_cap: int = 4) -> tuple[tuple[int, int], ...]:
    """(k, sigma) pairs with k <= sigma <= sigma_cap, ordered by k then sigma."""
    return tuple((k, s) for k in ks for s in range(k, sigma_cap + 1))
