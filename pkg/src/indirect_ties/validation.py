"""Checks that tie strength behaves like an overlap measure should.

Two instruments: Jaccard overlap of neighborhoods, and Pearson correlation
between paired metric columns. The edge-removal experiment drops a direct
edge, recomputes strength between its endpoints over the reduced graph,
and correlates that with the removed weight and with the intact-graph
Jaccard value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .graph import SocialGraph
from .strength import (
    DEFAULT_PATH_CAP,
    normalized_weights,
    shortest_paths_exact,
    strength_from_paths,
    strength_table,
)

ZERO_POLICIES = ("include_zeros", "drop_zeros")


class ZeroVarianceError(ValueError):
    """Raised when a correlation column is constant.

    A distinct signal rather than a silent 0: a constant column means the
    experiment is degenerate, not that the metrics are uncorrelated.
    """


@dataclass(frozen=True)
class PairedSeries:
    """Two metric columns over a shared set of node pairs."""

    points: tuple[tuple[float, float], ...]
    label_x: str
    label_y: str

    def __post_init__(self):
        pts = tuple((float(x), float(y)) for x, y in self.points)
        for x, y in pts:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValueError("series values must be finite")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class CorrelationReport:
    coefficient: float
    n_pairs: int
    zero_filtered: bool
    removed_fraction: float


class TriadRecord(NamedTuple):
    """One edge-removal observation; n is None when removal disconnects."""

    src: int
    dst: int
    weight: float
    jc: float
    n: int | None
    ss: float


def jaccard(g: SocialGraph, s: int, r: int) -> float:
    """Neighborhood overlap |N(s) ∩ N(r)| / |N(s) ∪ N(r)|.

    0.0 when both nodes are isolated; always 0 for pairs further than two
    hops apart, since those share no neighbor.
    """
    if s == r:
        raise ValueError("nodes must differ")
    common = len(set(g.neighbors(s)) & set(g.neighbors(r)))
    denom = g.degree(s) + g.degree(r) - common
    return common / denom if denom else 0.0


def pearson(series: PairedSeries) -> float:
    """Sample Pearson coefficient of the two columns.

    Raises ZeroVarianceError when either column is constant.
    """
    if len(series) < 2:
        raise ValueError("need at least two points")
    xs = [x for x, _y in series.points]
    ys = [y for _x, y in series.points]
    k = len(xs)
    mx = math.fsum(xs) / k
    my = math.fsum(ys) / k
    cov = math.fsum((x - mx) * (y - my) for x, y in series.points)
    var_x = math.fsum((x - mx) ** 2 for x in xs)
    var_y = math.fsum((y - my) ** 2 for y in ys)
    if var_x == 0.0 or var_y == 0.0:
        which = series.label_x if var_x == 0.0 else series.label_y
        raise ZeroVarianceError(f"column {which!r} is constant")
    r = cov / math.sqrt(var_x * var_y)
    # guard against rounding pushing |r| past 1
    return max(-1.0, min(1.0, r))


def jc_ss2_series(g: SocialGraph, cap: int = DEFAULT_PATH_CAP) -> PairedSeries:
    """(jaccard, two-hop strength) for every unordered distance-2 pair.

    Strength is read from the lower-id endpoint, so each pair contributes
    one point.
    """
    nw = normalized_weights(g)
    table = strength_table(g, nw, 2, cap)
    points = []
    for i in table.sources():
        for m in sorted(table.rows[i]):
            if i < m:
                points.append((jaccard(g, i, m), table.rows[i][m].ss))
    return PairedSeries(points=tuple(points), label_x="jc", label_y="ss2")


def correlate_jc_ss2(g: SocialGraph, cap: int = DEFAULT_PATH_CAP) -> CorrelationReport:
    """Pearson correlation between Jaccard and two-hop strength."""
    series = jc_ss2_series(g, cap)
    if len(series) < 2:
        raise ValueError("need at least two distance-2 pairs")
    return CorrelationReport(
        coefficient=pearson(series),
        n_pairs=len(series),
        zero_filtered=False,
        removed_fraction=0.0,
    )


def triad_records(g: SocialGraph, cap: int = DEFAULT_PATH_CAP) -> list[TriadRecord]:
    """One observation per edge: weight, intact-graph jaccard, and the
    strength between the endpoints after removing the edge.

    Strength is recomputed entirely on the reduced graph (weights
    renormalized, n = the new shortest distance) from the lower-id
    endpoint. Disconnected endpoints get ss = 0 and n = None. Per-edge
    computations are independent of each other.
    """
    records = []
    for u, v, w in g.pair_weights():
        jc = jaccard(g, u, v)
        h = g.without_edge(u, v)
        n, paths, _truncated = shortest_paths_exact(h, u, v, cap)
        if n is None:
            records.append(TriadRecord(u, v, w, jc, None, 0.0))
        else:
            nw_h = normalized_weights(h)
            records.append(
                TriadRecord(u, v, w, jc, n, strength_from_paths(paths, nw_h, n))
            )
    return records


def triad_experiment(
    g: SocialGraph,
    zero_policy: str = "include_zeros",
    cap: int = DEFAULT_PATH_CAP,
) -> list[CorrelationReport]:
    """Correlate removed-edge weight, jaccard, and post-removal strength.

    Returns three reports in fixed order: (weight, jc), (weight, ss),
    (jc, ss). Under drop_zeros, pairs whose strength is 0 (the endpoints
    fell apart) are excluded and removed_fraction says how many were.
    """
    if zero_policy not in ZERO_POLICIES:
        raise ValueError(f"zero_policy must be one of {ZERO_POLICIES}")
    if g.edge_count < 2:
        raise ValueError("need at least two edges")
    records = triad_records(g, cap)
    if zero_policy == "drop_zeros":
        kept = [r for r in records if r.ss != 0.0]
        removed_fraction = 1.0 - len(kept) / len(records)
        zero_filtered = True
    else:
        kept = records
        removed_fraction = 0.0
        zero_filtered = False
    if len(kept) < 2:
        raise ValueError("fewer than two pairs survive the zero policy")

    def report(xs, ys, label_x, label_y):
        series = PairedSeries(points=tuple(zip(xs, ys)), label_x=label_x, label_y=label_y)
        return CorrelationReport(
            coefficient=pearson(series),
            n_pairs=len(kept),
            zero_filtered=zero_filtered,
            removed_fraction=removed_fraction,
        )

    weights = [r.weight for r in kept]
    jcs = [r.jc for r in kept]
    sss = [r.ss for r in kept]
    return [
        report(weights, jcs, "weight", "jc"),
        report(weights, sss, "weight", "ss"),
        report(jcs, sss, "jc", "ss"),
    ]
