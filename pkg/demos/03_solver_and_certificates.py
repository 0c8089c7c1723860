#!/usr/bin/env python3
"""Solving an instance and extracting every certificate of failure.

The running example is the 5-cycle where all lists are {1,2}: an odd cycle
cannot be 2-colored, and each certificate family explains why in its own
vocabulary.
"""

import json

from listcolor import (
    ListAssignment,
    certificate_to_json,
    complete_multipartite,
    extract_critical,
    find_2bad_pair,
    find_bad_triple,
    find_tree_bad,
    is_2bad_pair,
    is_bad_triple,
    is_tree_bad,
    power_cycle,
    solve,
)

c5 = power_cycle(5, 1)
forced = ListAssignment(2, 2, [(1, 2)] * 5)

result = solve(c5, forced)
print("C5 with every list {1,2}:", result.status,
      f"(search nodes: {result.stats.nodes})")

vertices, _ = extract_critical(c5, forced)
print("critical core:", vertices, "(deleting any vertex leaves a colorable path)")

triple = find_bad_triple(c5, forced)
_, witness = is_bad_triple(c5, forced, triple)
print("\nrooted rank certificate:")
print(" ", json.dumps(certificate_to_json(triple, witness)))

pair = find_2bad_pair(c5, forced)
ok, chains = is_2bad_pair(c5, forced, pair)
print("\nalternating pair certificate (first colors", [c[0] for c in chains], "):")
print(" ", json.dumps(certificate_to_json(pair)))

tree = find_tree_bad(c5, forced)
_, phi = is_tree_bad(tree, forced)
print("\nrooted tree certificate (girth 5, odd shape):")
print(" ", json.dumps(certificate_to_json(tree, phi)))

# an even-girth example: the classic non-colorable 2-list assignment on K33
k33 = complete_multipartite([3, 3])
crafted = ListAssignment(3, 2, [(1, 2), (1, 3), (2, 3), (1, 2), (1, 3), (2, 3)])
print("\nK_{3,3} with the crafted lists:", solve(k33, crafted).status)
even_tree = find_tree_bad(k33, crafted)
print("even-shaped tree certificate:")
print(" ", json.dumps(certificate_to_json(even_tree)))
