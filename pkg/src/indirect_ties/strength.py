"""Tie-strength core: row-normalized direct weights and indirect-tie strength.

The direct side is a row-stochastic view of the graph: each user's outgoing
weights are normalized by their total, so the same undirected edge usually
has two different normalized values, one per endpoint. The indirect side
aggregates, over every shortest path between two users, the path's weakest
normalized step divided by the hop distance, combining paths noisy-OR style:

    ss = 1 - prod_over_paths(1 - bottleneck(path) / n)

For directly connected users the strength is the normalized weight itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .graph import SocialGraph, bfs_distances

DEFAULT_PATH_CAP = 10_000


class DisconnectedPairError(ValueError):
    """Raised when a strength value is requested for an unreachable pair."""


class NormalizedWeights:
    """Directed per-source view nw(i, j) with each row summing to one.

    Rows exist only for non-isolated sources. Asymmetry is the point:
    nw(i, j) and nw(j, i) share a numerator but not a denominator.
    """

    def __init__(self, rows: dict[int, dict[int, float]]):
        self._rows = {i: dict(r) for i, r in rows.items()}

    def value(self, i: int, j: int) -> float:
        return self._rows[i][j]

    def row(self, i: int) -> dict[int, float]:
        return dict(self._rows[i])

    def sources(self) -> tuple[int, ...]:
        return tuple(sorted(self._rows))

    def pairs(self) -> Iterator[tuple[int, int, float]]:
        """Yield (src, dst, nw) sorted, for export."""
        for i in sorted(self._rows):
            for j in sorted(self._rows[i]):
                yield i, j, self._rows[i][j]

    def __contains__(self, i) -> bool:
        return i in self._rows

    def __len__(self) -> int:
        return len(self._rows)


def normalized_weights(g: SocialGraph) -> NormalizedWeights:
    """Row-normalize each user's direct tie weights (labels summed)."""
    rows = {}
    for i in g.nodes:
        nbrs = g.neighbors(i)
        if not nbrs:
            continue
        total = math.fsum(g.weight(i, k) for k in nbrs)
        rows[i] = {j: g.weight(i, j) / total for j in nbrs}
    return NormalizedWeights(rows)


def labeled_normalized_weights(g: SocialGraph, label: str) -> NormalizedWeights:
    """Row-normalize within a single interaction label.

    Rows are restricted to neighbors reached by a `label` edge; users with
    no such edge have no row.
    """
    if label not in g.labels:
        raise ValueError(f"unknown label: {label!r}")
    rows = {}
    for i in g.nodes:
        wts = {}
        for j in g.neighbors(i):
            w = g.label_weights(i, j).get(label)
            if w is not None:
                wts[j] = w
        if not wts:
            continue
        total = math.fsum(wts.values())
        rows[i] = {j: w / total for j, w in wts.items()}
    return NormalizedWeights(rows)


def shortest_paths_exact(
    g: SocialGraph, i: int, m: int, cap: int = DEFAULT_PATH_CAP
) -> tuple[int | None, list[list[int]], bool]:
    """All distinct shortest i->m paths in lexicographic node order.

    Returns (distance, paths, truncated). A disconnected pair yields
    (None, [], False) rather than raising, so batch sweeps can skip it.
    At most `cap` paths are returned; `truncated` reports whether the
    enumeration was cut short.
    """
    if i == m:
        raise ValueError("source and target must differ")
    if i not in g or m not in g:
        raise ValueError(f"node not in graph: {i if i not in g else m}")
    if cap < 1:
        raise ValueError("cap must be positive")
    dist_i = bfs_distances(g, i)
    if m not in dist_i:
        return None, [], False
    n = dist_i[m]
    dist_m = bfs_distances(g, m)
    paths, truncated = _enumerate_paths(g, i, m, n, dist_i, dist_m, cap)
    return n, paths, truncated


def _enumerate_paths(g, i, m, n, dist_i, dist_m, cap):
    # Forward DFS over the shortest-path DAG: an edge (u, v) can appear on
    # a shortest i->m path iff v is one step further from i and the rest of
    # the way to m still fits the distance budget. Sorted adjacency makes
    # the output order lexicographic.
    paths: list[list[int]] = []
    path = [i]
    overflow = False

    def walk(u, d):
        nonlocal overflow
        if u == m:
            if len(paths) == cap:
                overflow = True
                return
            paths.append(list(path))
            return
        for v in g.neighbors(u):
            if overflow:
                return
            if dist_i.get(v) == d + 1 and d + 1 + dist_m.get(v, n + 1) == n:
                path.append(v)
                walk(v, d + 1)
                path.pop()

    walk(i, 0)
    return paths, overflow


def strength_from_paths(paths, nw: NormalizedWeights, n: int) -> float:
    """Noisy-OR aggregation of per-path bottleneck weights over distance n.

    Steps are read in traversal direction, so the two directions of the
    same pair generally disagree.
    """
    prod = 1.0
    for p in paths:
        bottleneck = min(nw.value(u, v) for u, v in zip(p, p[1:]))
        prod *= 1.0 - bottleneck / n
    return 1.0 - prod


def social_strength(
    g: SocialGraph, nw: NormalizedWeights, i: int, m: int, cap: int = DEFAULT_PATH_CAP
) -> tuple[int, float]:
    """Strength of the tie from i's perspective toward m, with its distance.

    Directly connected pairs get their normalized weight; indirect pairs
    get the shortest-path aggregation. Raises DisconnectedPairError when no
    path exists.
    """
    n, paths, _truncated = shortest_paths_exact(g, i, m, cap)
    if n is None:
        raise DisconnectedPairError(f"nodes {i} and {m} are disconnected")
    if n == 1:
        return 1, nw.value(i, m)
    return n, strength_from_paths(paths, nw, n)


class StrengthEntry(NamedTuple):
    n: int
    ss: float
    path_count: int
    truncated: bool


@dataclass(frozen=True)
class StrengthTable:
    """Strength values for every ordered pair at one exact hop distance."""

    n: int
    rows: dict[int, dict[int, StrengthEntry]]

    def entry(self, i: int, m: int) -> StrengthEntry:
        return self.rows[i][m]

    def row(self, i: int) -> dict[int, StrengthEntry]:
        return dict(self.rows[i])

    def sources(self) -> tuple[int, ...]:
        return tuple(sorted(self.rows))

    def items(self) -> Iterator[tuple[tuple[int, int], StrengthEntry]]:
        """Yield ((src, dst), entry) sorted, for export."""
        for i in sorted(self.rows):
            for m in sorted(self.rows[i]):
                yield (i, m), self.rows[i][m]

    def __contains__(self, pair) -> bool:
        i, m = pair
        return i in self.rows and m in self.rows[i]

    def __len__(self) -> int:
        return sum(len(r) for r in self.rows.values())


def strength_table(
    g: SocialGraph, nw: NormalizedWeights, n: int, cap: int = DEFAULT_PATH_CAP
) -> StrengthTable:
    """Strength of every ordered pair at exact distance n.

    Sources are independent (the computation per row only reads shared
    immutable state), so rows could be evaluated concurrently; the result
    is identical either way.
    """
    if n < 1:
        raise ValueError("hop distance must be >= 1")
    dist_cache: dict[int, dict[int, int]] = {}

    def dist(v):
        if v not in dist_cache:
            dist_cache[v] = bfs_distances(g, v)
        return dist_cache[v]

    rows: dict[int, dict[int, StrengthEntry]] = {}
    for i in g.nodes:
        di = dist(i)
        targets = sorted(m for m, d in di.items() if d == n)
        if not targets:
            continue
        row = {}
        for m in targets:
            if n == 1:
                row[m] = StrengthEntry(1, nw.value(i, m), 1, False)
            else:
                paths, truncated = _enumerate_paths(g, i, m, n, di, dist(m), cap)
                row[m] = StrengthEntry(
                    n, strength_from_paths(paths, nw, n), len(paths), truncated
                )
        rows[i] = row
    return StrengthTable(n=n, rows=rows)


@dataclass(frozen=True)
class RankList:
    """A user's distance-n contacts ordered by descending strength.

    Ties break toward the smaller node id; ranks are 1-based.
    """

    owner: int
    ranked: tuple[tuple[int, float], ...]
    scope: int
    _index: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {node: pos + 1 for pos, (node, _ss) in enumerate(self.ranked)}
        object.__setattr__(self, "_index", index)

    def rank_of(self, node: int) -> int | None:
        return self._index.get(node)

    def top_cut(self, fraction: float) -> frozenset[int]:
        """Nodes ranked within the top ceil(fraction * list length)."""
        if not 0 < fraction <= 1:
            raise ValueError("fraction must be in (0, 1]")
        k = math.ceil(fraction * len(self.ranked))
        return frozenset(node for node, _ss in self.ranked[:k])

    def __len__(self) -> int:
        return len(self.ranked)


def social_ranks(table: StrengthTable, owner: int) -> RankList:
    """Rank the owner's exact-distance contacts by strength."""
    if owner not in table.rows:
        raise ValueError(f"node {owner} has no entries in the table")
    row = table.rows[owner]
    ranked = tuple(
        (m, row[m].ss) for m in sorted(row, key=lambda m: (-row[m].ss, m))
    )
    return RankList(owner=owner, ranked=ranked, scope=table.n)


def all_rank_lists(table: StrengthTable) -> dict[int, RankList]:
    """Rank lists for every source in the table."""
    return {owner: social_ranks(table, owner) for owner in table.sources()}
