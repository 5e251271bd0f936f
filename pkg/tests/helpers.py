"""Shared graph builders for the test suite."""

from __future__ import annotations

import numpy as np

from indirect_ties import SocialGraph, generate_graph, is_connected


def connected_graph(model: str, params: dict, seed: int, tries: int = 200) -> SocialGraph:
    """Generate with increasing seeds until the sample is connected."""
    for offset in range(tries):
        g = generate_graph(model, params, seed + offset)
        if is_connected(g):
            return g
    raise AssertionError(f"no connected {model} sample within {tries} seeds of {seed}")


def sociable_graph(seed: int, n: int = 80, p: float = 0.08) -> SocialGraph:
    """Random graph whose weights cluster around high-activity nodes.

    Each node draws a lognormal activity level and an edge's weight scales
    with the product of its endpoints' levels, plus per-edge noise. This
    reproduces the heavy-tailed, locally correlated interaction counts seen
    in communication networks, which uniform random weights lack.
    """
    skeleton = generate_graph("erdos_renyi", {"n": n, "p": p}, seed)
    rng = np.random.default_rng(seed + 9000)
    levels = rng.lognormal(0.0, 0.6, size=n)
    edges = []
    for u, v, _w in skeleton.pair_weights():
        base = levels[u] * levels[v] * rng.lognormal(0.0, 0.3)
        edges.append((u, v, max(1.0, round(10.0 * base))))
    return SocialGraph(edges, nodes=skeleton.nodes)
