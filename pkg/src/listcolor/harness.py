"""Seeded Monte Carlo experiments: single grid points, threshold sweeps, and
the lemma-verification suites.

Determinism contract: every trial's random stream is a pure function of
(config base seed, n, k, sigma, trial index), aggregation is a fold in
trial-index order, and records.csv is sorted by (n, sigma, trial_index) --
so reruns and different worker counts produce byte-identical CSV as long as
no wall-clock timeout fires.  Per-trial wall times are kept out of the CSV
for the same reason (they live in summary.json as per-point means).
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import certificates as certs
from .corpus import corpus_assignments, default_combos, small_connected_graphs
from .errors import ConfigError, GuardExceededError, InvalidParameterError, SolveTimeout
from .graphs import (
    Graph,
    clique_union,
    complete_multipartite,
    girth,
    petersen,
    power_cycle,
)
from .lists import ListAssignment, SeedSpec, derive_seed, sample_assignment
from .scaling import ScalingExpr, parse_scaling
from .solver import solve

CSV_VERSION = "listcolor-records v1"
CSV_COLUMNS = (
    "n",
    "k",
    "sigma",
    "trial_index",
    "seed",
    "status",
    "colorable",
    "solve_nodes",
    "certificate",
)
_WILSON_Z = 1.959963984540054  # two-sided 95%


# ---------------------------------------------------------------------------
# graph families


@dataclass(frozen=True)
class GraphFamily:
    """A named graph builder parameterized by the grid variable n."""

    name: str
    params: dict

    def build(self, n: int) -> Graph:
        def as_int(key, default=None):
            raw = self.params.get(key, default)
            if raw is None:
                raise ConfigError(f"family {self.name!r} needs parameter {key!r}")
            if isinstance(raw, ScalingExpr):
                return raw.evaluate_int(n)
            return int(raw)

        if self.name == "clique_union":
            return clique_union(n, as_int("delta"))
        if self.name == "power_cycle":
            return power_cycle(n, as_int("r"))
        if self.name == "complete_multipartite":
            parts = self.params.get("parts")
            if not parts:
                raise ConfigError("complete_multipartite needs a 'parts' list")
            sizes = [
                p.evaluate_int(n) if isinstance(p, ScalingExpr) else int(p) for p in parts
            ]
            return complete_multipartite(sizes)
        if self.name == "petersen":
            return petersen()
        raise ConfigError(f"unknown graph family {self.name!r}")


def _coerce_expr(raw) -> ScalingExpr:
    if isinstance(raw, ScalingExpr):
        return raw
    if isinstance(raw, (int, float)):
        return parse_scaling(str(raw))
    if isinstance(raw, str):
        return parse_scaling(raw)
    raise ConfigError(f"expected a number or expression string, got {raw!r}")


# ---------------------------------------------------------------------------
# trial records and points


@dataclass
class TrialRecord:
    n: int
    k: int
    sigma: int
    trial_index: int
    seed: int
    status: str  # "ok" | "timeout"
    colorable: bool | None
    solve_nodes: int
    certificate: str
    wall_micros: int

    def csv_row(self) -> list:
        return [
            self.n,
            self.k,
            self.sigma,
            self.trial_index,
            self.seed,
            self.status,
            "" if self.colorable is None else str(self.colorable).lower(),
            self.solve_nodes,
            self.certificate,
        ]


@dataclass
class PointResult:
    n: int
    k: int
    sigma: int
    trials: int
    completed: int
    timeouts: int
    colorable_count: int
    p_hat: float | None
    ci_low: float | None
    ci_high: float | None
    mean_wall_micros: float
    records: list[TrialRecord] = field(repr=False, default_factory=list)

    def summary(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "sigma": self.sigma,
            "trials": self.trials,
            "completed": self.completed,
            "timeouts": self.timeouts,
            "colorable": self.colorable_count,
            "p_hat": self.p_hat,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "mean_wall_micros": round(self.mean_wall_micros, 1),
        }


def wilson_interval(successes: int, trials: int, z: float = _WILSON_Z) -> tuple[float, float]:
    """Score interval for a binomial proportion; stable near 0 and 1."""
    if trials == 0:
        raise InvalidParameterError("interval needs at least one trial")
    p = successes / trials
    denom = 1 + z * z / trials
    center = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def _detect_certificate(g, assignment, kinds) -> str:
    for kind in kinds:
        try:
            if kind == "triple":
                if certs.find_bad_triple(g, assignment) is not None:
                    return "bad-triple"
            elif kind == "pair":
                if assignment.k == 2 and certs.find_2bad_pair(g, assignment) is not None:
                    return "2bad-pair"
            elif kind == "tree":
                if girth(g) != math.inf and girth(g) > 3:
                    if certs.find_tree_bad(g, assignment) is not None:
                        return "tree-bad"
            else:
                raise ConfigError(f"unknown certificate detector {kind!r}")
        except GuardExceededError:
            return "guard-exceeded"
    return "none"


def _run_trial(args) -> TrialRecord:
    (g, n, k, sigma, trial_index, point_seed, timeout_s, cert_kinds) = args
    seed = SeedSpec(point_seed, trial_index)
    assignment = sample_assignment(g, k, sigma, seed)
    deadline = None if timeout_s is None else time.monotonic() + timeout_s
    start = time.monotonic()
    try:
        result = solve(g, assignment, deadline=deadline)
    except SolveTimeout:
        wall = int((time.monotonic() - start) * 1e6)
        return TrialRecord(n, k, sigma, trial_index, seed.stream_seed(), "timeout",
                           None, 0, "", wall)
    wall = int((time.monotonic() - start) * 1e6)
    certificate = ""
    if not result.colorable and cert_kinds:
        certificate = _detect_certificate(g, assignment, cert_kinds)
    return TrialRecord(
        n, k, sigma, trial_index, seed.stream_seed(), "ok",
        result.colorable, result.stats.nodes, certificate, wall,
    )


def run_point(
    family: GraphFamily | Graph,
    n: int,
    k: int,
    sigma: int,
    trials: int,
    base_seed: int,
    timeout_seconds: float | None = 5.0,
    certificate_kinds: tuple[str, ...] = (),
    workers: int = 1,
) -> PointResult:
    """Estimate the colorability probability at one (n, k, sigma) grid cell.

    Timed-out trials are recorded, counted, and excluded from p_hat (never
    silently dropped).  The aggregate is a deterministic fold over trial
    indices, independent of worker scheduling.
    """
    if trials < 1:
        raise InvalidParameterError("need at least one trial")
    if k > sigma:
        raise InvalidParameterError(f"k={k} exceeds sigma={sigma}")
    g = family if isinstance(family, Graph) else family.build(n)
    point_seed = derive_seed(base_seed, n, k, sigma)
    jobs = [
        (g, n, k, sigma, i, point_seed, timeout_seconds, certificate_kinds)
        for i in range(trials)
    ]
    if workers > 1:
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(workers) as pool:
            records = pool.map(_run_trial, jobs, chunksize=max(1, trials // (4 * workers)))
    else:
        records = [_run_trial(job) for job in jobs]
    completed = [r for r in records if r.status == "ok"]
    colorable = sum(1 for r in completed if r.colorable)
    if completed:
        p_hat = colorable / len(completed)
        ci_low, ci_high = wilson_interval(colorable, len(completed))
    else:
        p_hat = ci_low = ci_high = None
    mean_wall = sum(r.wall_micros for r in records) / len(records)
    return PointResult(
        n, k, sigma, trials, len(completed), len(records) - len(completed),
        colorable, p_hat, ci_low, ci_high, mean_wall, records,
    )


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class ExperimentConfig:
    """A sweep over an n grid and a sigma-expression grid.

    k, sigma, and family parameters may be scaling expressions in n; they
    must evaluate to positive integers with k(n) <= sigma(n) on the whole
    grid (validated up front)."""

    family: GraphFamily
    n_grid: tuple[int, ...]
    k_expr: ScalingExpr
    sigma_exprs: tuple[ScalingExpr, ...]
    trials: int
    base_seed: int
    timeout_seconds: float | None = 5.0
    certificate_kinds: tuple[str, ...] = ()
    workers: int = 1
    output_dir: str | None = None

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        try:
            family_name = raw["family"]
            n_grid = tuple(int(x) for x in raw["n_grid"])
            trials = int(raw["trials"])
            base_seed = int(raw.get("base_seed", 0))
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"bad config: {exc}") from None
        if not n_grid:
            raise ConfigError("n_grid must be non-empty")
        if trials < 1:
            raise ConfigError("trials must be >= 1")
        params = {}
        for key, value in dict(raw.get("family_params", {})).items():
            if key == "parts":
                params[key] = [_coerce_expr(p) for p in value]
            else:
                params[key] = _coerce_expr(value)
        sigma_raw = raw.get("sigma_grid", [])
        if not sigma_raw:
            raise ConfigError("sigma_grid must be non-empty")
        config = cls(
            family=GraphFamily(family_name, params),
            n_grid=n_grid,
            k_expr=_coerce_expr(raw.get("k", 2)),
            sigma_exprs=tuple(_coerce_expr(x) for x in sigma_raw),
            trials=trials,
            base_seed=base_seed,
            timeout_seconds=raw.get("timeout_seconds", 5.0),
            certificate_kinds=tuple(raw.get("certificates", ())),
            workers=int(raw.get("workers", 1)),
            output_dir=raw.get("output_dir"),
        )
        config.grid()  # validates every cell
        return config

    @classmethod
    def from_file(cls, path: str | Path) -> "ExperimentConfig":
        with open(path, encoding="utf-8") as handle:
            return cls.from_dict(json.load(handle))

    def grid(self) -> list[tuple[int, int, int]]:
        """Evaluated (n, k, sigma) cells, validating positivity and k <= sigma."""
        cells = []
        for n in self.n_grid:
            k = self.k_expr.evaluate_int(n)
            if k < 1:
                raise ConfigError(f"k({n}) = {k} is not positive")
            sigmas = []
            for expr in self.sigma_exprs:
                sigma = expr.evaluate_int(n)
                if sigma < 1:
                    raise ConfigError(f"sigma({n}) = {sigma} is not positive")
                if k > sigma:
                    raise ConfigError(f"k({n}) = {k} exceeds sigma({n}) = {sigma}")
                sigmas.append(sigma)
            if len(set(sigmas)) != len(sigmas):
                raise ConfigError(f"sigma grid at n={n} contains duplicate values {sigmas}")
            cells.extend((n, k, sigma) for sigma in sigmas)
        return cells


@dataclass
class SweepResult:
    config: ExperimentConfig
    points: list[PointResult]
    crossings: dict[int, float | None]
    trend_violations: dict[int, int]

    def records(self) -> list[TrialRecord]:
        out = []
        for point in self.points:
            out.extend(point.records)
        out.sort(key=lambda r: (r.n, r.sigma, r.trial_index))
        return out

    def records_csv(self) -> str:
        buffer = io.StringIO()
        buffer.write(f"# {CSV_VERSION}: columns fixed as listed below\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for record in self.records():
            writer.writerow(record.csv_row())
        return buffer.getvalue()

    def summary(self) -> dict:
        return {
            "points": [p.summary() for p in self.points],
            "p_half_crossing_by_n": {str(n): x for n, x in self.crossings.items()},
            "trend_violations_by_n": {str(n): v for n, v in self.trend_violations.items()},
        }

    def write(self, out_dir: str | Path) -> tuple[Path, Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        records_path = out / "records.csv"
        summary_path = out / "summary.json"
        records_path.write_text(self.records_csv(), encoding="utf-8")
        summary_path.write_text(
            json.dumps(self.summary(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        return records_path, summary_path


def p_half_crossing(sigmas: list[int], p_hats: list[float | None]) -> float | None:
    """Sigma where p_hat crosses 1/2, by linear interpolation on the grid."""
    usable = [(s, p) for s, p in zip(sigmas, p_hats) if p is not None]
    for (s0, p0), (s1, p1) in zip(usable, usable[1:]):
        if p0 <= 0.5 <= p1 and p1 > p0:
            return s0 + (0.5 - p0) * (s1 - s0) / (p1 - p0)
        if p0 == p1 == 0.5:
            return float(s0)
    return None


def trend_violation_count(points: list[PointResult]) -> int:
    """Adjacent sigma pairs where p_hat drops by more than two combined
    standard errors (the monotone-trend diagnostic)."""
    violations = 0
    for a, b in zip(points, points[1:]):
        if a.p_hat is None or b.p_hat is None:
            continue
        se = math.sqrt(
            a.p_hat * (1 - a.p_hat) / max(a.completed, 1)
            + b.p_hat * (1 - b.p_hat) / max(b.completed, 1)
        )
        if b.p_hat < a.p_hat - 2 * se:
            violations += 1
    return violations


def sweep(config: ExperimentConfig) -> SweepResult:
    """One run_point per (n, sigma) grid cell, plus crossing and trend
    diagnostics per n."""
    points: list[PointResult] = []
    crossings: dict[int, float | None] = {}
    trends: dict[int, int] = {}
    for n in config.n_grid:
        cells = [(nn, k, s) for (nn, k, s) in config.grid() if nn == n]
        row = []
        for nn, k, sigma in cells:
            row.append(
                run_point(
                    config.family,
                    nn,
                    k,
                    sigma,
                    config.trials,
                    config.base_seed,
                    config.timeout_seconds,
                    config.certificate_kinds,
                    config.workers,
                )
            )
        row.sort(key=lambda p: p.sigma)
        points.extend(row)
        crossings[n] = p_half_crossing([p.sigma for p in row], [p.p_hat for p in row])
        trends[n] = trend_violation_count(row)
    return SweepResult(config, points, crossings, trends)


# ---------------------------------------------------------------------------
# lemma-verification suites


@dataclass
class CorpusSpec:
    """Which corpus the oracle suites run over."""

    max_vertices: int = 6
    assignments_per_graph: int = 500
    combos: tuple[tuple[int, int], ...] = field(default_factory=default_combos)
    base_seed: int = 0


@dataclass
class LemmaReport:
    instances: int = 0
    uncolorable: int = 0
    triple_checks: int = 0
    pair_checks: int = 0
    tree_checks: int = 0
    even_tree_checks: int = 0
    odd_tree_checks: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "coverage": {
                "instances": self.instances,
                "uncolorable": self.uncolorable,
                "triple_checks": self.triple_checks,
                "pair_checks": self.pair_checks,
                "tree_checks": self.tree_checks,
                "even_tree_checks": self.even_tree_checks,
                "odd_tree_checks": self.odd_tree_checks,
            },
            "counterexamples": self.counterexamples,
        }


def verify_lemmas(spec: CorpusSpec | None = None) -> LemmaReport:
    """Run the three certificate oracle suites over the canonical corpus.

    For every uncolorable sampled instance: a bad proper triple must exist
    and re-validate; at k=2 a 2-bad pair must exist and satisfy all three
    pair conditions; at girth above three a tree-bad rooted tree must exist.
    Counterexamples (there should be none; these are proved implications)
    are returned as report content, not raised.
    """
    spec = spec or CorpusSpec()
    report = LemmaReport()
    graphs = small_connected_graphs(spec.max_vertices)
    for gi, g in enumerate(graphs):
        gv = girth(g)
        for ai, assignment in corpus_assignments(
            g, gi, spec.assignments_per_graph, spec.combos, spec.base_seed
        ):
            report.instances += 1
            if solve(g, assignment).colorable:
                continue
            report.uncolorable += 1
            where = {"graph_index": gi, "assignment_index": ai,
                     "k": assignment.k, "sigma": assignment.sigma}

            report.triple_checks += 1
            triple = certs.find_bad_triple(g, assignment)
            if triple is None:
                report.counterexamples.append({**where, "lemma": "triple", "failure": "not found"})
            else:
                ok, _ = certs.is_bad_triple(g, assignment, triple)
                if not ok:
                    report.counterexamples.append(
                        {**where, "lemma": "triple", "failure": "failed revalidation"}
                    )

            if assignment.k == 2:
                report.pair_checks += 1
                pair = certs.find_2bad_pair(g, assignment)
                if pair is None:
                    report.counterexamples.append({**where, "lemma": "pair", "failure": "not found"})
                else:
                    ok, _ = certs.is_2bad_pair(g, assignment, pair)
                    if not ok:
                        report.counterexamples.append(
                            {**where, "lemma": "pair", "failure": "failed revalidation"}
                        )

            if gv != math.inf and gv > 3:
                report.tree_checks += 1
                if int(gv) % 2:
                    report.odd_tree_checks += 1
                else:
                    report.even_tree_checks += 1
                tree = certs.find_tree_bad(g, assignment)
                if tree is None:
                    report.counterexamples.append({**where, "lemma": "tree", "failure": "not found"})
                else:
                    ok, _ = certs.is_tree_bad(tree, assignment)
                    if not ok:
                        report.counterexamples.append(
                            {**where, "lemma": "tree", "failure": "failed revalidation"}
                        )
    return report


# ---------------------------------------------------------------------------
# identical-list clique counting (for the disjoint-clique family)


def identical_list_clique_count(g: Graph, assignment: ListAssignment, k: int) -> int:
    """Number of (k+1)-cliques whose vertices all carry the same list, for
    graphs whose non-trivial components are cliques (the clique_union
    family); grouping by component keeps this linear."""
    from collections import Counter

    from .graphs import connected_components

    total = 0
    for comp in connected_components(g):
        if len(comp) < k + 1:
            continue
        size = len(comp)
        members = set(comp)
        actual = sum(1 for u in comp for w in g.adjacency[u] if w in members) // 2
        if actual != size * (size - 1) // 2:
            raise InvalidParameterError("component is not a clique; counting unsupported")
        tally = Counter(assignment[v] for v in comp)
        for repeats in tally.values():
            total += math.comb(repeats, k + 1)
    return total
