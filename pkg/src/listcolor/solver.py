"""Exact decision of colorability from lists.

The solver is complete: backtracking over vertices with forced-move
propagation (a live list shrinking to one color triggers an assignment, to
zero a backtrack) and minimum-remaining-values ordering, ties broken by
vertex id.  Components are solved independently.  Color symmetry is NOT
broken: lists distinguish colors.

`brute_force_colorable` is an independent exhaustive oracle kept free of the
solver's machinery; it is meant for tests and cross-validation only.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .errors import CertificateError, GuardExceededError, InvalidParameterError, SolveTimeout
from .graphs import Graph, connected_components, induced_subgraph, vertex_set
from .lists import ListAssignment

COLORABLE = "COLORABLE"
UNCOLORABLE = "UNCOLORABLE"

# A coloring is a vertex -> positive color mapping; partial colorings appear
# in certificate contexts where the root stays uncolored.
Coloring = dict[int, int]


@dataclass
class SolveStats:
    nodes: int = 0
    propagations: int = 0


@dataclass
class SolveResult:
    status: str
    coloring: Coloring | None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def colorable(self) -> bool:
        return self.status == COLORABLE


def verify_coloring(g: Graph, assignment: ListAssignment, coloring: Coloring) -> bool:
    """True iff `coloring` is total, proper, and respects every list."""
    if len(assignment) != g.n:
        raise InvalidParameterError("assignment does not cover the graph")
    if any(v not in coloring for v in range(g.n)):
        raise InvalidParameterError("coloring must be total on V(g)")
    for v in range(g.n):
        if coloring[v] not in assignment[v]:
            return False
    for u, v in g.edges:
        if coloring[u] == coloring[v]:
            return False
    return True


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise SolveTimeout("solver deadline expired")


def _solve_component(comp, g, assignment, stats, deadline) -> Coloring | None:
    live = {v: set(assignment[v]) for v in comp}
    colors: Coloring = {}

    def assign_chain(v0, c0, trail) -> bool:
        # Assign v0=c0, then chase forced singletons; trail records undo info.
        stack = [(v0, c0)]
        while stack:
            v, c = stack.pop()
            if v in colors:
                if colors[v] != c:
                    return False
                continue
            colors[v] = c
            trail.append((None, v, 0))
            for w in g.adjacency[v]:
                if w in colors:
                    if colors[w] == c:
                        return False
                elif c in live.get(w, ()):
                    live[w].remove(c)
                    trail.append((live[w], w, c))
                    remaining = len(live[w])
                    if remaining == 0:
                        return False
                    if remaining == 1:
                        stats.propagations += 1
                        stack.append((w, next(iter(live[w]))))
        return True

    def undo(trail):
        while trail:
            bucket, v, c = trail.pop()
            if bucket is None:
                del colors[v]
            else:
                bucket.add(c)

    def backtrack() -> bool:
        if len(colors) == len(comp):
            return True
        v = min((u for u in comp if u not in colors), key=lambda u: (len(live[u]), u))
        stats.nodes += 1
        _check_deadline(deadline)
        for c in sorted(live[v]):
            trail = []
            if assign_chain(v, c, trail) and backtrack():
                return True
            undo(trail)
        return False

    # settle pre-forced singletons before searching
    trail0 = []
    for v in comp:
        if len(live[v]) == 1 and v not in colors:
            stats.propagations += 1
            if not assign_chain(v, next(iter(live[v])), trail0):
                return None
    if backtrack():
        return dict(colors)
    return None


def solve(g: Graph, assignment: ListAssignment, deadline: float | None = None) -> SolveResult:
    """Decide whether g has a proper coloring drawn from the lists.

    Complete: never reports UNCOLORABLE for a colorable instance.  A
    COLORABLE result carries a witness that passes `verify_coloring`.
    `deadline` (time.monotonic value) is a cooperative budget used by the
    experiment harness; the library default imposes none.
    """
    if len(assignment) != g.n:
        raise InvalidParameterError("assignment must define a list for every vertex")
    stats = SolveStats()
    witness: Coloring = {}
    for comp in connected_components(g):
        part = _solve_component(comp, g, assignment, stats, deadline)
        if part is None:
            return SolveResult(UNCOLORABLE, None, stats)
        witness.update(part)
    return SolveResult(COLORABLE, witness, stats)


def brute_force_colorable(g: Graph, assignment: ListAssignment, guard: int = 10**7) -> bool:
    """Exhaustive scan of the product of all lists; test-only oracle.

    Guarded: refuses product spaces larger than `guard` assignments.
    """
    if len(assignment) != g.n:
        raise InvalidParameterError("assignment must define a list for every vertex")
    space = 1
    for v in range(g.n):
        space *= len(assignment[v])
        if space > guard:
            raise GuardExceededError(f"product space exceeds guard {guard}")
    edges = list(g.edges)
    for combo in itertools.product(*assignment.lists):
        if all(combo[u] != combo[v] for u, v in edges):
            return True
    return False


def extract_critical(g: Graph, assignment: ListAssignment) -> tuple[tuple[int, ...], Graph]:
    """Shrink an uncolorable instance to a connected induced critical core.

    Returns (vertices, induced subgraph) where the core F is not colorable
    from its restricted lists but F minus any single vertex is.  Deletions
    are attempted in ascending id order and kept whenever the remainder stays
    uncolorable, restricting to its first uncolorable component; the order is
    fixed so certificates are reproducible.
    """
    if solve(g, assignment).colorable:
        raise CertificateError("extract_critical called on a colorable instance")

    def uncolorable(vs) -> bool:
        sub, _ = induced_subgraph(g, vs)
        return not solve(sub, assignment.restrict(vs)).colorable

    def first_uncolorable_component(vs):
        sub, old_to_new = induced_subgraph(g, vs)
        new_to_old = sorted(vs)
        for comp in connected_components(sub):
            original = tuple(new_to_old[i] for i in comp)
            if uncolorable(original):
                return original
        raise AssertionError("uncolorable graph with no uncolorable component")

    core = first_uncolorable_component(range(g.n))
    while True:
        for v in core:
            trimmed = tuple(u for u in core if u != v)
            if trimmed and uncolorable(trimmed):
                core = first_uncolorable_component(trimmed)
                break
        else:
            break
    vs = vertex_set(core, g.n)
    sub, _ = induced_subgraph(g, vs)
    return vs, sub
