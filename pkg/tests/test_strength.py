"""Normalized weights, shortest-path enumeration, strength, and ranking."""

import math

import pytest

import oracles
from helpers import connected_graph
from indirect_ties import (
    DisconnectedPairError,
    NormalizedWeights,
    SocialGraph,
    StrengthEntry,
    StrengthTable,
    all_rank_lists,
    labeled_normalized_weights,
    normalized_weights,
    shortest_paths_exact,
    social_ranks,
    social_strength,
    strength_from_paths,
    strength_table,
)

CHAIN = SocialGraph([(0, 1, 1.0), (1, 2, 1.0)])
# Two 2-hop routes from 0 to 3 with per-path bottlenecks 0.5 and 0.25.
TWO_PATH = SocialGraph([(0, 1, 3.0), (0, 2, 1.0), (1, 3, 3.0), (2, 3, 1.0)])


def test_star_normalized_weights():
    g = SocialGraph([(0, 1, 3.0), (0, 2, 1.0)])
    nw = normalized_weights(g)
    assert nw.value(0, 1) == 0.75
    assert nw.value(0, 2) == 0.25
    assert nw.value(1, 0) == 1.0
    assert nw.value(2, 0) == 1.0


def test_single_neighbor_row_is_one():
    g = SocialGraph([(4, 9, 17.3)])
    nw = normalized_weights(g)
    assert nw.value(4, 9) == 1.0
    assert nw.value(9, 4) == 1.0


def test_labels_aggregate_in_numerator_and_denominator():
    g = SocialGraph([(0, 1, 1.0, "work"), (0, 1, 1.0, "sport")])
    assert normalized_weights(g).value(0, 1) == 1.0


def test_rows_sum_to_one_and_match_oracle():
    g = connected_graph("erdos_renyi", {"n": 25, "p": 0.15}, 11)
    nw = normalized_weights(g)
    direct = oracles.all_normalized_weights_direct(list(g.pair_weights()))
    for i in nw.sources():
        assert math.fsum(nw.row(i).values()) == pytest.approx(1.0, abs=1e-9)
    for (i, j), expected in direct.items():
        assert nw.value(i, j) == pytest.approx(expected, abs=1e-12)


def test_isolated_nodes_have_no_row():
    g = SocialGraph([(0, 1, 1.0)], nodes=[5])
    nw = normalized_weights(g)
    assert 5 not in nw
    assert nw.sources() == (0, 1)
    with pytest.raises(KeyError):
        nw.row(5)


def test_single_label_restriction_is_identity():
    g = SocialGraph([(0, 1, 2.0, "work"), (1, 2, 3.0, "work")])
    full = normalized_weights(g)
    only = labeled_normalized_weights(g, "work")
    assert {p for p in full.pairs()} == {p for p in only.pairs()}


def test_label_restriction_excludes_other_labels():
    g = SocialGraph([(0, 1, 2.0, "work"), (0, 2, 5.0, "sport")])
    work = labeled_normalized_weights(g, "work")
    assert work.value(0, 1) == 1.0
    assert 2 not in work
    assert 2 not in work.row(0)
    with pytest.raises(ValueError):
        labeled_normalized_weights(g, "family")


def test_labeled_weights_match_per_label_oracle():
    g = SocialGraph(
        [
            (0, 1, 2.0, "work"),
            (0, 2, 1.0, "work"),
            (1, 2, 4.0, "sport"),
            (2, 3, 3.0, "work"),
            (1, 3, 5.0, "sport"),
        ]
    )
    for label in ("work", "sport"):
        mine = labeled_normalized_weights(g, label)
        rows = [(u, v, w) for u, v, w, lab in g.edges() if lab == label]
        for i, j, _w in rows:
            assert mine.value(i, j) == pytest.approx(
                oracles.normalized_weight_direct(rows, i, j), abs=1e-12
            )
            assert mine.value(j, i) == pytest.approx(
                oracles.normalized_weight_direct(rows, j, i), abs=1e-12
            )


def test_chain_has_unique_shortest_path():
    n, paths, truncated = shortest_paths_exact(CHAIN, 0, 2)
    assert (n, paths, truncated) == (2, [[0, 1, 2]], False)


def test_four_cycle_has_two_paths():
    g = SocialGraph([(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])
    n, paths, truncated = shortest_paths_exact(g, 0, 2)
    assert n == 2
    assert paths == [[0, 1, 2], [0, 3, 2]]
    assert not truncated


def test_disconnected_pair_yields_no_paths():
    g = SocialGraph([(0, 1, 1.0), (2, 3, 1.0)])
    assert shortest_paths_exact(g, 0, 3) == (None, [], False)


def test_path_query_argument_errors():
    with pytest.raises(ValueError):
        shortest_paths_exact(CHAIN, 1, 1)
    with pytest.raises(ValueError):
        shortest_paths_exact(CHAIN, 0, 9)
    with pytest.raises(ValueError):
        shortest_paths_exact(CHAIN, 0, 2, cap=0)


def test_path_cap_truncates():
    # Eight parallel 2-hop routes between the poles.
    g = SocialGraph(
        [(0, i, 1.0) for i in range(1, 9)] + [(i, 9, 1.0) for i in range(1, 9)]
    )
    n, paths, truncated = shortest_paths_exact(g, 0, 9, cap=3)
    assert n == 2
    assert len(paths) == 3
    assert truncated
    n, paths, truncated = shortest_paths_exact(g, 0, 9, cap=8)
    assert len(paths) == 8
    assert not truncated


def test_path_enumeration_matches_dfs_oracle():
    g = connected_graph("erdos_renyi", {"n": 10, "p": 0.3}, 21)
    adj = oracles.adjacency_from_edges(list(g.pair_weights()))
    for i in g.nodes:
        for m in g.nodes:
            if i == m:
                continue
            n, paths, truncated = shortest_paths_exact(g, i, m)
            ref_n, ref_paths = oracles.all_shortest_paths_dfs(adj, i, m)
            assert not truncated
            assert n == ref_n
            assert sorted(paths) == sorted(ref_paths)


def test_chain_strength_is_quarter_both_ways():
    nw = normalized_weights(CHAIN)
    assert nw.value(0, 1) == 1.0
    assert nw.value(1, 2) == 0.5
    assert social_strength(CHAIN, nw, 0, 2) == (2, 0.25)
    assert social_strength(CHAIN, nw, 2, 0) == (2, 0.25)


def test_two_path_aggregation():
    nw = normalized_weights(TWO_PATH)
    n, ss = social_strength(TWO_PATH, nw, 0, 3)
    assert n == 2
    assert ss == pytest.approx(0.34375, abs=1e-12)


def test_direction_matters_when_rows_are_skewed():
    # Pendant weight on node 0 skews its row but not node 2's.
    g = SocialGraph([(0, 1, 1.0), (1, 2, 1.0), (0, 3, 3.0)])
    nw = normalized_weights(g)
    assert social_strength(g, nw, 0, 2) == (2, 0.125)
    assert social_strength(g, nw, 2, 0) == (2, 0.25)


def test_single_full_strength_path_gives_reciprocal_distance():
    for n in (2, 3, 5):
        nw = NormalizedWeights({i: {i + 1: 1.0} for i in range(n)})
        path = [list(range(n + 1))]
        assert strength_from_paths(path, nw, n) == pytest.approx(1 / n, abs=1e-12)


def test_direct_neighbors_get_normalized_weight_exactly():
    g = connected_graph("erdos_renyi", {"n": 15, "p": 0.25}, 3)
    nw = normalized_weights(g)
    for u, v, _w in g.pair_weights():
        assert social_strength(g, nw, u, v) == (1, nw.value(u, v))


def test_disconnected_strength_raises():
    g = SocialGraph([(0, 1, 1.0), (2, 3, 1.0)])
    nw = normalized_weights(g)
    with pytest.raises(DisconnectedPairError):
        social_strength(g, nw, 0, 2)


def test_strength_values_stay_in_unit_interval():
    g = connected_graph("barabasi_albert", {"n": 30, "m": 2}, 5)
    nw = normalized_weights(g)
    for n in (1, 2, 3):
        table = strength_table(g, nw, n)
        for (_i, _m), entry in table.items():
            assert 0.0 <= entry.ss <= 1.0


def test_table_at_distance_one_reproduces_nw():
    g = connected_graph("erdos_renyi", {"n": 12, "p": 0.3}, 2)
    nw = normalized_weights(g)
    table = strength_table(g, nw, 1)
    assert {(i, m) for i, m, _v in nw.pairs()} == {pair for pair, _e in table.items()}
    for (i, m), entry in table.items():
        assert entry == StrengthEntry(1, nw.value(i, m), 1, False)


def test_triangle_has_no_distance_two_pairs():
    g = SocialGraph([(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])
    table = strength_table(g, normalized_weights(g), 2)
    assert len(table) == 0
    assert table.sources() == ()


def test_table_matches_per_pair_oracle():
    g = connected_graph("erdos_renyi", {"n": 12, "p": 0.3}, 17)
    pair_rows = list(g.pair_weights())
    adj = oracles.adjacency_from_edges(pair_rows)
    direct_nw = oracles.all_normalized_weights_direct(pair_rows)
    nw = normalized_weights(g)
    for n in (2, 3):
        table = strength_table(g, nw, n)
        seen = set()
        for i in g.nodes:
            for m in g.nodes:
                if i == m:
                    continue
                ref_n, ref_ss = oracles.social_strength_direct(adj, direct_nw, i, m)
                if ref_n == n:
                    seen.add((i, m))
                    assert table.entry(i, m).ss == pytest.approx(ref_ss, abs=1e-12)
        assert seen == {pair for pair, _e in table.items()}


def test_table_rejects_bad_distance():
    g = SocialGraph([(0, 1, 1.0)])
    with pytest.raises(ValueError):
        strength_table(g, normalized_weights(g), 0)


def test_rank_order_breaks_ties_by_node_id():
    rows = {
        0: {
            1: StrengthEntry(2, 0.4, 1, False),
            2: StrengthEntry(2, 0.9, 1, False),
            3: StrengthEntry(2, 0.4, 1, False),
        }
    }
    ranks = social_ranks(StrengthTable(n=2, rows=rows), 0)
    assert [node for node, _ss in ranks.ranked] == [2, 1, 3]
    assert ranks.rank_of(2) == 1
    assert ranks.rank_of(1) == 2
    assert ranks.rank_of(3) == 3
    assert ranks.rank_of(99) is None
    assert ranks.scope == 2


def test_single_entry_ranks_first():
    rows = {0: {7: StrengthEntry(2, 0.1, 1, False)}}
    ranks = social_ranks(StrengthTable(n=2, rows=rows), 0)
    assert ranks.rank_of(7) == 1
    assert len(ranks) == 1


def test_top_cut_uses_ceiling():
    g = SocialGraph([(0, leaf, float(leaf)) for leaf in range(1, 21)])
    table = strength_table(g, normalized_weights(g), 1)
    ranks = social_ranks(table, 0)
    assert len(ranks) == 20
    assert ranks.top_cut(0.1) == {20, 19}
    assert len(ranks.top_cut(0.05)) == 1
    assert len(ranks.top_cut(1.0)) == 20
    with pytest.raises(ValueError):
        ranks.top_cut(0.0)
    with pytest.raises(ValueError):
        ranks.top_cut(1.5)


def test_ranks_for_absent_owner_rejected():
    g = SocialGraph([(0, 1, 1.0)])
    table = strength_table(g, normalized_weights(g), 2)
    with pytest.raises(ValueError):
        social_ranks(table, 0)


def test_all_rank_lists_covers_every_source():
    g = connected_graph("erdos_renyi", {"n": 15, "p": 0.2}, 8)
    table = strength_table(g, normalized_weights(g), 2)
    lists = all_rank_lists(table)
    assert set(lists) == set(table.sources())
    for owner, ranks in lists.items():
        assert ranks.owner == owner
        assert len(ranks) == len(table.rows[owner])
