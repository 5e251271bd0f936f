"""Undirected weighted multi-label social graph: ingestion, generation, stats.

The graph is the substrate for everything else in the package. Edges carry a
positive interaction weight per label ("work", "sport", ...); parallel edges
between the same pair with different labels are kept separate, while most
analytics run on the pair projection where weights are summed across labels.
"""

from __future__ import annotations

import csv
import math
from collections import deque
from dataclasses import dataclass

import numpy as np

DEFAULT_LABEL = "default"

_WEIGHT_MIN = 1
_WEIGHT_MAX = 50


class GraphFormatError(ValueError):
    """Raised for malformed edge-list input (bad row, self-loop, bad weight)."""


class SocialGraph:
    """Undirected weighted multi-label graph, immutable after construction.

    Nodes are non-negative integers. Edges are given as (src, dst, weight)
    or (src, dst, weight, label) tuples; repeated (pair, label) entries have
    their weights summed. Self-loops and non-positive weights are rejected.
    Isolated nodes are allowed via the `nodes` argument. An optional alias
    map (node id -> display name) is carried along but never used in any
    computation.

    Instances are treated as frozen: construction builds every index once
    and nothing mutates afterwards, so a graph is safe to share across
    threads.
    """

    def __init__(self, edges=(), nodes=(), aliases=None):
        label_w: dict[tuple[int, int], dict[str, float]] = {}
        node_set = set()
        for nid in nodes:
            node_set.add(self._check_node(nid))
        for row in edges:
            if len(row) == 3:
                u, v, w = row
                label = DEFAULT_LABEL
            elif len(row) == 4:
                u, v, w, label = row
            else:
                raise GraphFormatError(f"edge tuple of length {len(row)}: {row!r}")
            u = self._check_node(u)
            v = self._check_node(v)
            if u == v:
                raise GraphFormatError(f"self-loop on node {u}")
            w = float(w)
            if not w > 0:
                raise GraphFormatError(f"non-positive weight {w} on edge ({u}, {v})")
            pair = (u, v) if u < v else (v, u)
            per_label = label_w.setdefault(pair, {})
            per_label[str(label)] = per_label.get(str(label), 0.0) + w
            node_set.add(u)
            node_set.add(v)

        adj: dict[int, dict[int, float]] = {n: {} for n in node_set}
        for (u, v), per_label in label_w.items():
            total = math.fsum(per_label.values())
            adj[u][v] = total
            adj[v][u] = total

        self._label_w = label_w
        self._adj = adj
        self._nodes = tuple(sorted(node_set))
        self._nbrs = {n: tuple(sorted(adj[n])) for n in node_set}
        self._labels = frozenset(
            lab for per_label in label_w.values() for lab in per_label
        )
        self._aliases = dict(aliases) if aliases else {}

    @staticmethod
    def _check_node(nid):
        if not isinstance(nid, (int, np.integer)) or isinstance(nid, bool) or nid < 0:
            raise GraphFormatError(f"node id must be a non-negative integer: {nid!r}")
        return int(nid)

    @property
    def nodes(self) -> tuple[int, ...]:
        return self._nodes

    @property
    def labels(self) -> frozenset[str]:
        return self._labels

    @property
    def aliases(self) -> dict[int, str]:
        return dict(self._aliases)

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    @property
    def edge_count(self) -> int:
        """Number of connected pairs (labels collapsed)."""
        return len(self._label_w)

    def __contains__(self, nid) -> bool:
        return nid in self._adj

    def neighbors(self, nid: int) -> tuple[int, ...]:
        return self._nbrs[nid]

    def degree(self, nid: int) -> int:
        return len(self._nbrs[nid])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def weight(self, u: int, v: int) -> float:
        """Total weight between u and v, summed across labels."""
        return self._adj[u][v]

    def label_weights(self, u: int, v: int) -> dict[str, float]:
        pair = (u, v) if u < v else (v, u)
        return dict(self._label_w[pair])

    def edges(self):
        """Yield (u, v, weight, label) with u < v, sorted for determinism."""
        for pair in sorted(self._label_w):
            for label in sorted(self._label_w[pair]):
                yield pair[0], pair[1], self._label_w[pair][label], label

    def pair_weights(self):
        """Yield (u, v, total_weight) with u < v, sorted."""
        for pair in sorted(self._label_w):
            yield pair[0], pair[1], self._adj[pair[0]][pair[1]]

    def without_edge(self, u: int, v: int) -> "SocialGraph":
        """Copy of this graph with every label of the (u, v) tie removed.

        Both endpoints stay in the node set even if they end up isolated.
        """
        pair = (u, v) if u < v else (v, u)
        if pair not in self._label_w:
            raise ValueError(f"no edge between {u} and {v}")
        edges = [row for row in self.edges() if (row[0], row[1]) != pair]
        return SocialGraph(edges, nodes=self._nodes, aliases=self._aliases)

    def label_subgraph(self, label: str) -> "SocialGraph":
        """Restriction to edges carrying the given label (node set preserved)."""
        if label not in self._labels:
            raise ValueError(f"unknown label: {label!r}")
        edges = [row for row in self.edges() if row[3] == label]
        return SocialGraph(edges, nodes=self._nodes, aliases=self._aliases)

    def __eq__(self, other):
        if not isinstance(other, SocialGraph):
            return NotImplemented
        return self._nodes == other._nodes and self._label_w == other._label_w

    def __repr__(self):
        return (
            f"SocialGraph(nodes={self.node_count}, pairs={self.edge_count}, "
            f"labels={sorted(self._labels)})"
        )


@dataclass(frozen=True)
class GraphStats:
    """Descriptive statistics of the weighted pair projection.

    Path metrics (diameter, average shortest path length) are computed on
    the largest connected component; clustering and distances are unweighted.
    """

    node_count: int
    edge_count: int
    density: float
    average_clustering_coefficient: float
    degree_assortativity: float
    diameter: int
    average_shortest_path_length: float
    weight_range: tuple[float, float]


def bfs_distances(g: SocialGraph, source: int) -> dict[int, int]:
    """Unweighted hop distances from source to every reachable node."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def connected_components(g: SocialGraph) -> list[tuple[int, ...]]:
    """Connected components as sorted node tuples, largest first."""
    seen = set()
    comps = []
    for n in g.nodes:
        if n in seen:
            continue
        comp = bfs_distances(g, n)
        seen.update(comp)
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: (-len(c), c))
    return comps


def is_connected(g: SocialGraph) -> bool:
    return g.node_count > 0 and len(bfs_distances(g, g.nodes[0])) == g.node_count


def _local_clustering(g: SocialGraph, n: int) -> float:
    nbrs = g.neighbors(n)
    d = len(nbrs)
    if d < 2:
        return 0.0
    links = 0
    for i, u in enumerate(nbrs):
        for v in nbrs[i + 1 :]:
            if g.has_edge(u, v):
                links += 1
    return 2.0 * links / (d * (d - 1))


def _degree_assortativity(g: SocialGraph) -> float:
    # Pearson over degree pairs at edge endpoints, both orientations.
    xs = []
    ys = []
    for u, v, _w in g.pair_weights():
        du, dv = g.degree(u), g.degree(v)
        xs.extend((du, dv))
        ys.extend((dv, du))
    if not xs:
        return float("nan")
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    sx = x.std()
    sy = y.std()
    if sx == 0 or sy == 0:
        return float("nan")
    return float(((x - x.mean()) * (y - y.mean())).mean() / (sx * sy))


def graph_stats(g: SocialGraph) -> GraphStats:
    """Compute descriptive statistics on the unlabeled weighted projection.

    Clustering is the unweighted local coefficient averaged over all nodes,
    with degree-<2 nodes contributing zero. Diameter and average shortest
    path length are taken over the largest connected component.
    """
    if g.node_count == 0:
        raise ValueError("empty graph")
    v = g.node_count
    e = g.edge_count
    density = 2.0 * e / (v * (v - 1)) if v >= 2 else 0.0
    clustering = math.fsum(_local_clustering(g, n) for n in g.nodes) / v

    comp = connected_components(g)[0]
    diameter = 0
    total = 0
    pairs = 0
    for n in comp:
        dist = bfs_distances(g, n)
        for m, d in dist.items():
            if m == n:
                continue
            diameter = max(diameter, d)
            total += d
            pairs += 1
    aspl = total / pairs if pairs else 0.0

    weights = [w for _u, _v, w in g.pair_weights()]
    wrange = (min(weights), max(weights)) if weights else (0.0, 0.0)
    return GraphStats(
        node_count=v,
        edge_count=e,
        density=density,
        average_clustering_coefficient=clustering,
        degree_assortativity=_degree_assortativity(g),
        diameter=diameter,
        average_shortest_path_length=aspl,
        weight_range=wrange,
    )


def load_graph(path, fmt: str = "csv") -> SocialGraph:
    """Load a graph from an edge-list CSV with header src,dst,weight[,label].

    Lines starting with '#' are skipped, except the optional directive
    '# nodes: ...' which save_graph emits to preserve isolated nodes.
    Duplicate (pair, label) rows have their weights summed.
    """
    if fmt != "csv":
        raise ValueError(f"unknown edge-list format: {fmt!r}")
    edges = []
    extra_nodes: list[int] = []
    header = None
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                if body.lower().startswith("nodes:"):
                    try:
                        extra_nodes.extend(
                            int(tok) for tok in body[len("nodes:") :].split()
                        )
                    except ValueError as exc:
                        raise GraphFormatError(
                            f"row {lineno}: bad nodes directive"
                        ) from exc
                continue
            fields = next(csv.reader([line]))
            if header is None:
                names = [f.strip().lower() for f in fields]
                if names[:3] != ["src", "dst", "weight"]:
                    raise GraphFormatError(
                        f"row {lineno}: expected header src,dst,weight[,label], "
                        f"got {line!r}"
                    )
                header = names
                continue
            if len(fields) not in (3, 4):
                raise GraphFormatError(f"row {lineno}: expected 3 or 4 fields")
            try:
                u = int(fields[0])
                v = int(fields[1])
                w = float(fields[2])
            except ValueError as exc:
                raise GraphFormatError(f"row {lineno}: {exc}") from exc
            if u == v:
                raise GraphFormatError(f"row {lineno}: self-loop on node {u}")
            if not w > 0:
                raise GraphFormatError(f"row {lineno}: non-positive weight {w}")
            label = fields[3].strip() if len(fields) == 4 else DEFAULT_LABEL
            edges.append((u, v, w, label or DEFAULT_LABEL))
    if header is None:
        raise GraphFormatError("no header row found")
    return SocialGraph(edges, nodes=extra_nodes)


def save_graph(g: SocialGraph, path) -> None:
    """Write the edge-list CSV dialect read back by load_graph."""
    connected = {u for u, _v, _w in g.pair_weights()} | {
        v for _u, v, _w in g.pair_weights()
    }
    isolated = [n for n in g.nodes if n not in connected]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        if isolated:
            fh.write("# nodes: " + " ".join(str(n) for n in isolated) + "\n")
        writer = csv.writer(fh)
        writer.writerow(["src", "dst", "weight", "label"])
        for u, v, w, label in g.edges():
            writer.writerow([u, v, repr(w), label])


def generate_graph(model: str, params: dict, seed: int) -> SocialGraph:
    """Generate a synthetic weighted graph, deterministic per (model, params, seed).

    Models:
      erdos_renyi        params: n, p
      barabasi_albert    params: n, m
      weighted_complete  params: n

    Edge weights are drawn integer-uniform in [weight_min, weight_max]
    (defaults 1 and 50), assignable via params.
    """
    rng = np.random.default_rng(seed)
    params = dict(params)
    wmin = int(params.pop("weight_min", _WEIGHT_MIN))
    wmax = int(params.pop("weight_max", _WEIGHT_MAX))
    if not 0 < wmin <= wmax:
        raise ValueError(f"bad weight range [{wmin}, {wmax}]")

    if model == "erdos_renyi":
        n, p = int(params["n"]), float(params["p"])
        if n < 1 or not 0.0 <= p <= 1.0:
            raise ValueError(f"bad erdos_renyi params n={n}, p={p}")
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        draws = rng.random(len(pairs))
        chosen = [pair for pair, d in zip(pairs, draws) if d < p]
    elif model == "barabasi_albert":
        n, m = int(params["n"]), int(params["m"])
        if m < 1 or n <= m:
            raise ValueError(f"bad barabasi_albert params n={n}, m={m}")
        chosen = _barabasi_albert_edges(n, m, rng)
    elif model == "weighted_complete":
        n = int(params["n"])
        if n < 1:
            raise ValueError(f"bad weighted_complete params n={n}")
        chosen = [(i, j) for i in range(n) for j in range(i + 1, n)]
    else:
        raise ValueError(f"unknown generator model: {model!r}")

    edges = [
        (u, v, float(w))
        for (u, v), w in zip(chosen, rng.integers(wmin, wmax + 1, size=len(chosen)))
    ]
    return SocialGraph(edges, nodes=range(n))


def _barabasi_albert_edges(n, m, rng):
    # Preferential attachment via the repeated-endpoints trick: sampling
    # uniformly from that list is sampling proportional to degree.
    targets = list(range(m))
    repeated: list[int] = []
    edges = []
    for source in range(m, n):
        edges.extend((t, source) if t < source else (source, t) for t in targets)
        repeated.extend(targets)
        repeated.extend([source] * m)
        picked: set[int] = set()
        while len(picked) < m:
            picked.add(repeated[int(rng.integers(len(repeated)))])
        targets = sorted(picked)
    edges.sort()
    return edges
