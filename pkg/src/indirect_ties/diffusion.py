"""Threshold SI spread over the weighted graph, and rank-based prediction.

Each edge carries a passing probability proportional to its weight, scaled
so the globally strongest edge gets 1.0. The default spreading model is
deterministic bond percolation: an edge transmits iff its probability
clears the threshold p0, and infection times are BFS layers in the
surviving subgraph. A stochastic per-step sampling variant exists for
sensitivity analysis.

Prediction asks which exact-distance-n contacts of the seed get infected
at step n, using mutual strength ranks; the baseline predicts all of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graph import SocialGraph, bfs_distances
from .strength import (
    DEFAULT_PATH_CAP,
    StrengthTable,
    social_ranks,
    strength_table,
    normalized_weights,
)

BETA_RULE = "inverse-max-weight"
EVALUATIONS = ("exact", "cumulative")


@dataclass(frozen=True)
class DiffusionConfig:
    """Run parameters for one spread simulation.

    seed_node may be a node id or "random"; rng_seed is consulted only for
    the random choice and for the stochastic variant, so threshold runs
    with a fixed seed node are pure functions of (graph, p0, seed_node).
    Stochastic runs must bound max_steps or they may never terminate.
    """

    p0: float
    seed_node: int | str = "random"
    rng_seed: int = 0
    max_steps: int | None = None
    beta_rule: str = BETA_RULE
    stochastic: bool = False

    def __post_init__(self):
        if self.beta_rule != BETA_RULE:
            raise ValueError(f"unsupported beta_rule: {self.beta_rule!r}")
        if not (isinstance(self.p0, (int, float)) and math.isfinite(self.p0)):
            raise ValueError("p0 must be a finite number")
        if isinstance(self.seed_node, str):
            if self.seed_node != "random":
                raise ValueError('seed_node must be a node id or "random"')
        elif isinstance(self.seed_node, bool) or not isinstance(self.seed_node, int):
            raise ValueError('seed_node must be a node id or "random"')
        if self.max_steps is not None and self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        if self.stochastic and self.max_steps is None:
            raise ValueError("stochastic mode requires max_steps")


@dataclass(frozen=True)
class DiffusionTrace:
    """Who got infected when; step 0 is the seed."""

    seed: int
    p0: float
    infected_at: dict[int, int]

    def steps(self) -> int:
        return max(self.infected_at.values())

    def infected_exactly(self, step: int) -> frozenset[int]:
        return frozenset(m for m, t in self.infected_at.items() if t == step)

    def infected_within(self, step: int) -> frozenset[int]:
        return frozenset(m for m, t in self.infected_at.items() if t <= step)

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield (node, step) sorted by node, for export."""
        for m in sorted(self.infected_at):
            yield m, self.infected_at[m]

    def __len__(self) -> int:
        return len(self.infected_at)


@dataclass(frozen=True)
class PredictionOutcome:
    """Confusion sets over the distance-n population of one seed."""

    population: frozenset[int]
    predicted_positive: frozenset[int]
    actual_positive: frozenset[int]
    counts: tuple[int, int, int, int]  # (TP, FP, TN, FN)


@dataclass(frozen=True)
class EvalMetrics:
    """None marks a ratio whose denominator was zero; such values are
    excluded from sweep averages rather than coerced to 0."""

    accuracy: float | None
    sensitivity: float | None
    specificity: float | None


@dataclass(frozen=True)
class SweepPoint:
    p0: float
    n: int
    method: str
    accuracy: float | None
    sensitivity: float | None
    specificity: float | None
    defined_count: int


def edge_probabilities(g: SocialGraph) -> dict[tuple[int, int], float]:
    """Per-pair passing probability w(u,v)/max_w, keyed by (u, v) with u < v."""
    pairs = list(g.pair_weights())
    if not pairs:
        raise ValueError("graph has no edges")
    max_w = max(w for _u, _v, w in pairs)
    return {(u, v): w / max_w for u, v, w in pairs}


def _percolated_adjacency(
    g: SocialGraph, probs: dict[tuple[int, int], float], p0: float
) -> dict[int, list[int]]:
    # Keep exactly the edges whose probability clears the threshold.
    adj: dict[int, list[int]] = {u: [] for u in g.nodes}
    for (u, v), p in probs.items():
        if p >= p0:
            adj[u].append(v)
            adj[v].append(u)
    for u in adj:
        adj[u].sort()
    return adj


def _bfs_layers(
    adj: dict[int, list[int]], seed: int, max_steps: int | None
) -> dict[int, int]:
    infected_at = {seed: 0}
    frontier = [seed]
    step = 1
    while frontier and (max_steps is None or step <= max_steps):
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in infected_at:
                    infected_at[v] = step
                    nxt.append(v)
        nxt.sort()
        frontier = nxt
        step += 1
    return infected_at


def _resolve_seed_node(g: SocialGraph, cfg: DiffusionConfig, rng) -> int:
    if cfg.seed_node == "random":
        return g.nodes[int(rng.integers(g.node_count))]
    if cfg.seed_node not in g:
        raise ValueError(f"seed node not in graph: {cfg.seed_node}")
    return cfg.seed_node


def simulate_si(g: SocialGraph, cfg: DiffusionConfig) -> DiffusionTrace:
    """Spread from the seed and record each node's infection step.

    Threshold mode: BFS in the percolated subgraph. Stochastic mode: each
    step, every edge from an infected to a susceptible node transmits with
    its probability, independently per step.
    """
    probs = edge_probabilities(g)
    rng = None
    if cfg.seed_node == "random" or cfg.stochastic:
        rng = np.random.default_rng(cfg.rng_seed)
    seed = _resolve_seed_node(g, cfg, rng)
    if not cfg.stochastic:
        adj = _percolated_adjacency(g, probs, cfg.p0)
        infected_at = _bfs_layers(adj, seed, cfg.max_steps)
        return DiffusionTrace(seed=seed, p0=cfg.p0, infected_at=infected_at)

    infected_at = {seed: 0}
    for step in range(1, cfg.max_steps + 1):
        newly = []
        for u in sorted(m for m, t in infected_at.items() if t < step):
            for v in g.neighbors(u):
                if v in infected_at or v in newly:
                    continue
                key = (u, v) if u < v else (v, u)
                if rng.random() < probs[key]:
                    newly.append(v)
        if not newly:
            break
        for v in newly:
            infected_at[v] = step
    return DiffusionTrace(seed=seed, p0=cfg.p0, infected_at=infected_at)


def predict_infected_at_n(
    g: SocialGraph,
    table: StrengthTable,
    seed: int,
    top_fraction: float = 0.10,
) -> frozenset[int]:
    """Distance-n contacts predicted to be infected at step n.

    A candidate is positive iff it sits in the top ceil(top_fraction *
    list length) of the seed's rank list AND the seed sits in the top cut
    of the candidate's own list. At top_fraction = 1 this degenerates to
    the whole population.
    """
    if not 0 < top_fraction <= 1:
        raise ValueError("top_fraction must be in (0, 1]")
    if seed not in table.rows or not table.rows[seed]:
        raise ValueError(f"node {seed} has no distance-{table.n} contacts")
    seed_cut = social_ranks(table, seed).top_cut(top_fraction)
    predicted = set()
    for m in sorted(table.rows[seed]):
        if m not in seed_cut or m not in table.rows:
            continue
        if seed in social_ranks(table, m).top_cut(top_fraction):
            predicted.add(m)
    return frozenset(predicted)


def baseline_predict(g: SocialGraph, seed: int, n: int) -> frozenset[int]:
    """The indiscriminate predictor: every exact-distance-n contact."""
    if seed not in g:
        raise ValueError(f"seed node not in graph: {seed}")
    dist = bfs_distances(g, seed)
    return frozenset(m for m, d in dist.items() if d == n)


def evaluate_prediction(
    trace: DiffusionTrace,
    predicted: frozenset[int] | set[int],
    population: frozenset[int] | set[int],
    n: int,
    evaluation: str = "exact",
) -> tuple[PredictionOutcome, EvalMetrics]:
    """Confusion counts and metrics over the distance-n population.

    "exact" counts a node as positive when infected precisely at step n;
    "cumulative" when infected by step n.
    """
    if evaluation not in EVALUATIONS:
        raise ValueError(f"evaluation must be one of {EVALUATIONS}")
    population = frozenset(population)
    predicted = frozenset(predicted)
    if not population:
        raise ValueError("population is empty")
    if not predicted <= population:
        raise ValueError("predicted set must be a subset of the population")
    if evaluation == "exact":
        actual = frozenset(m for m in population if trace.infected_at.get(m) == n)
    else:
        actual = frozenset(
            m for m in population if m in trace.infected_at and trace.infected_at[m] <= n
        )
    tp = len(predicted & actual)
    fp = len(predicted - actual)
    fn = len(actual - predicted)
    tn = len(population) - tp - fp - fn
    metrics = EvalMetrics(
        accuracy=(tp + tn) / len(population),
        sensitivity=tp / (tp + fn) if tp + fn else None,
        specificity=tn / (tn + fp) if tn + fp else None,
    )
    outcome = PredictionOutcome(
        population=population,
        predicted_positive=predicted,
        actual_positive=actual,
        counts=(tp, fp, tn, fn),
    )
    return outcome, metrics


def sweep_experiment(
    g: SocialGraph,
    p0_values,
    n: int,
    iterations: int = 100,
    rng_seed: int = 0,
    top_fraction: float = 0.10,
    evaluation: str = "exact",
    cap: int = DEFAULT_PATH_CAP,
) -> list[SweepPoint]:
    """Average rank-predictor and baseline metrics over random seed nodes.

    Seed nodes are drawn once from a stream determined by rng_seed and
    reused across every p0, so points along the sweep differ only in the
    threshold. Iterations whose seed node has no distance-n contact are
    skipped. Each metric is averaged over the iterations where it was
    defined; defined_count reports how many iterations had all three
    defined. Iterations are independent of each other, so the result does
    not depend on evaluation order.
    """
    p0_values = list(p0_values)
    if not p0_values:
        raise ValueError("p0_values is empty")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    probs = edge_probabilities(g)
    nw = normalized_weights(g)
    table = strength_table(g, nw, n, cap)
    rng = np.random.default_rng(rng_seed)
    seed_nodes = [g.nodes[int(i)] for i in rng.integers(0, g.node_count, size=iterations)]

    populations: dict[int, frozenset[int]] = {}
    rank_predictions: dict[int, frozenset[int]] = {}
    for s in seed_nodes:
        if s in populations:
            continue
        pop = frozenset(table.rows.get(s, {}))
        populations[s] = pop
        if pop:
            rank_predictions[s] = predict_infected_at_n(g, table, s, top_fraction)

    points = []
    for p0 in p0_values:
        adj = _percolated_adjacency(g, probs, p0)
        sums = {m: {"accuracy": 0.0, "sensitivity": 0.0, "specificity": 0.0} for m in ("rank", "baseline")}
        counts = {m: {"accuracy": 0, "sensitivity": 0, "specificity": 0} for m in ("rank", "baseline")}
        all_defined = {"rank": 0, "baseline": 0}
        for s in seed_nodes:
            pop = populations[s]
            if not pop:
                continue
            trace = DiffusionTrace(seed=s, p0=p0, infected_at=_bfs_layers(adj, s, None))
            for method, predicted in (("rank", rank_predictions[s]), ("baseline", pop)):
                _outcome, metrics = evaluate_prediction(trace, predicted, pop, n, evaluation)
                defined = 0
                for name in ("accuracy", "sensitivity", "specificity"):
                    value = getattr(metrics, name)
                    if value is not None:
                        sums[method][name] += value
                        counts[method][name] += 1
                        defined += 1
                if defined == 3:
                    all_defined[method] += 1
        for method in ("rank", "baseline"):
            avg = {
                name: (sums[method][name] / counts[method][name] if counts[method][name] else None)
                for name in ("accuracy", "sensitivity", "specificity")
            }
            points.append(
                SweepPoint(
                    p0=p0,
                    n=n,
                    method=method,
                    accuracy=avg["accuracy"],
                    sensitivity=avg["sensitivity"],
                    specificity=avg["specificity"],
                    defined_count=all_defined[method],
                )
            )
    return points
