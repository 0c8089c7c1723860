#!/usr/bin/env python3
"""Tour of the deterministic graph generators and structural queries."""

from listcolor import (
    clique_union,
    complete_multipartite,
    connected_components,
    girth,
    petersen,
    power_cycle,
    write_graph,
)


def describe(name, g):
    comps = connected_components(g)
    print(
        f"  {name:<22} n={g.n:<4} m={len(g.edges):<4} "
        f"max_deg={g.max_degree():<3} girth={girth(g)!s:<4} components={len(comps)}"
    )


print("graph families")
print("=" * 72)
describe("C8 (power r=1)", power_cycle(8, 1))
describe("C8^2 (power r=2)", power_cycle(8, 2))
describe("C11^3", power_cycle(11, 3))
describe("clique_union(10, 2)", clique_union(10, 2))
describe("clique_union(60, 4)", clique_union(60, 4))
describe("K_{3,3}", complete_multipartite([3, 3]))
describe("K_{2,2,2}", complete_multipartite([2, 2, 2]))
describe("Petersen", petersen())

print()
print("clique_union(10, 2) keeps the leftover vertex isolated:")
print("  component sizes:", sorted(len(c) for c in connected_components(clique_union(10, 2))))

print()
print("text format round-trip (first lines of the Petersen graph):")
for line in write_graph(petersen()).splitlines()[:6]:
    print("  " + line)
print("  ...")
