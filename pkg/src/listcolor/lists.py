"""Color lists and the uniform random (k, C)-list sampler.

Each vertex independently receives a uniformly random k-subset of the color
universe {1..sigma}.  Colors are positive integers.  Sampling is a pure
function of a SeedSpec, so trials are reproducible and order-independent
under parallel execution.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidParameterError, ListParseError
from .graphs import Graph

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(x: int) -> int:
    """splitmix64 finalizer: a strong 64-bit avalanche."""
    x &= _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(base_seed: int, *components: int) -> int:
    """Fold integer components into a base seed, one avalanche per step."""
    h = _mix64(base_seed)
    for c in components:
        h = _mix64((h + _GOLDEN + _mix64(c & _MASK64)) & _MASK64)
    return h


@dataclass(frozen=True)
class SeedSpec:
    """Names one trial's random stream: pure function of both fields."""

    base_seed: int
    trial_index: int = 0

    def __post_init__(self):
        if self.trial_index < 0:
            raise InvalidParameterError("trial_index must be non-negative")

    def stream_seed(self) -> int:
        return derive_seed(self.base_seed, self.trial_index)

    def generator(self) -> random.Random:
        return random.Random(self.stream_seed())


class ListAssignment:
    """Per-vertex sorted color sets of uniform size k drawn from {1..sigma}."""

    __slots__ = ("sigma", "k", "lists")

    def __init__(self, sigma: int, k: int, lists: Iterable[Iterable[int]]):
        if k < 1:
            raise InvalidParameterError("list size k must be >= 1")
        if k > sigma:
            raise InvalidParameterError(f"list size k={k} exceeds sigma={sigma}")
        norm = []
        for v, lst in enumerate(lists):
            t = tuple(sorted(lst))
            if len(t) != k or len(set(t)) != k:
                raise InvalidParameterError(
                    f"vertex {v}: list must hold exactly {k} distinct colors, got {t}"
                )
            if t[0] < 1 or t[-1] > sigma:
                raise InvalidParameterError(
                    f"vertex {v}: colors must lie in 1..{sigma}, got {t}"
                )
            norm.append(t)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "lists", tuple(norm))

    def __setattr__(self, name, value):
        raise AttributeError("ListAssignment is immutable")

    def __reduce__(self):
        return (ListAssignment, (self.sigma, self.k, self.lists))

    def __eq__(self, other):
        return (
            isinstance(other, ListAssignment)
            and (self.sigma, self.k, self.lists) == (other.sigma, other.k, other.lists)
        )

    def __hash__(self):
        return hash((self.sigma, self.k, self.lists))

    def __repr__(self):
        return f"ListAssignment(sigma={self.sigma}, k={self.k}, n={len(self.lists)})"

    def __len__(self):
        return len(self.lists)

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.lists[v]

    def restrict(self, vertices: Iterable[int]) -> "ListAssignment":
        """Lists for a vertex subset, in sorted-vertex order (for subgraphs)."""
        return ListAssignment(self.sigma, self.k, [self.lists[v] for v in sorted(vertices)])


def sample_assignment(g: Graph, k: int, sigma: int, seed: SeedSpec) -> ListAssignment:
    """Draw each vertex's list uniformly from the C(sigma, k) k-subsets.

    Deterministic given `seed`; independent across vertices.  Subsets come
    from a partial Fisher-Yates shuffle over 1..sigma (random.sample), whose
    uniformity is provable and testable.
    """
    if k > sigma:
        raise InvalidParameterError(f"k={k} exceeds sigma={sigma}")
    rng = seed.generator()
    universe = range(1, sigma + 1)
    return ListAssignment(sigma, k, [sorted(rng.sample(universe, k)) for _ in range(g.n)])


def prob_identical_lists(clique_size: int, k: int, sigma: int) -> float:
    """Probability that all lists in a fixed clique coincide: C(sigma,k)^-(size-1)."""
    if clique_size < 2:
        raise InvalidParameterError("clique_size must be >= 2")
    if k > sigma:
        raise InvalidParameterError(f"k={k} exceeds sigma={sigma}")
    return math.comb(sigma, k) ** -(clique_size - 1)


# ---------------------------------------------------------------------------
# text format
#
# Header `sigma=<sigma> k=<k>`, then one line `<vertex>: c1 c2 ... ck` per
# vertex with ascending colors.


def write_lists(assignment: ListAssignment) -> str:
    lines = [f"sigma={assignment.sigma} k={assignment.k}"]
    for v, lst in enumerate(assignment.lists):
        lines.append(f"{v}: " + " ".join(str(c) for c in lst))
    return "\n".join(lines) + "\n"


def read_lists(text: str, g: Graph) -> ListAssignment:
    sigma = k = None
    by_vertex: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if sigma is None:
            parts = line.split()
            try:
                head = dict(p.split("=", 1) for p in parts)
                sigma, k = int(head["sigma"]), int(head["k"])
            except (ValueError, KeyError):
                raise ListParseError(
                    f"line {lineno}: expected header 'sigma=<s> k=<k>', got {line!r}"
                ) from None
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise ListParseError(f"line {lineno}: expected '<vertex>: colors', got {line!r}")
        try:
            v = int(head)
            colors = tuple(int(c) for c in tail.split())
        except ValueError:
            raise ListParseError(f"line {lineno}: non-integer token in {line!r}") from None
        if not 0 <= v < g.n:
            raise ListParseError(f"vertex {v} out of range [0, {g.n})")
        if v in by_vertex:
            raise ListParseError(f"vertex {v} listed twice")
        if len(colors) != k or len(set(colors)) != len(colors):
            raise ListParseError(
                f"vertex {v}: expected {k} distinct colors, got {len(colors)}"
            )
        if any(c < 1 or c > sigma for c in colors):
            raise ListParseError(f"vertex {v}: color out of range 1..{sigma}")
        by_vertex[v] = tuple(sorted(colors))
    if sigma is None:
        raise ListParseError("missing 'sigma=<s> k=<k>' header")
    missing = [v for v in range(g.n) if v not in by_vertex]
    if missing:
        raise ListParseError(f"vertex {missing[0]} missing from assignment")
    return ListAssignment(sigma, k, [by_vertex[v] for v in range(g.n)])
