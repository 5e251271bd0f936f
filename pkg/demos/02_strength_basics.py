"""
From raw weights to social strength
===================================

Why the measure is asymmetric, how parallel paths combine, and what the
per-node rankings look like.
"""

from indirect_ties import (
    SocialGraph,
    all_rank_lists,
    normalized_weights,
    social_ranks,
    social_strength,
    strength_table,
)

# Normalization divides each weight by the endpoint's total activity, so the
# same edge can matter a lot to a quiet node and barely register for a hub.
star = SocialGraph([(0, 1, 9.0), (0, 2, 3.0)])
nw = normalized_weights(star)
print("hub view of 1: ", nw.value(0, 1))
print("leaf view of 0:", nw.value(1, 0))

# Indirect strength looks at every shortest path, takes the weakest hop on
# each, discounts by distance, and combines the paths like independent
# chances to reach the person.
two_path = SocialGraph([(0, 1, 3.0), (0, 2, 1.0), (1, 3, 3.0), (2, 3, 1.0)])
nw = normalized_weights(two_path)
n, ss = social_strength(two_path, nw, 0, 3)
print(f"\ntwo disjoint routes, distance {n}: ss = {ss}")

# The strong route alone bottlenecks at 0.5, giving 0.5/2 = 0.25; the weak
# route lifts that to 0.34375 instead of being ignored.
strong_only = SocialGraph([(0, 1, 3.0), (0, 2, 1.0), (1, 3, 3.0)])
n, ss = social_strength(strong_only, normalized_weights(strong_only), 0, 3)
print(f"strong route alone:           ss = {ss}")

# A full table ranks everyone at a fixed distance from each source.
g = SocialGraph(
    [(0, 1, 5.0), (0, 2, 2.0), (1, 3, 4.0), (2, 3, 1.0), (1, 4, 2.0), (3, 4, 3.0)]
)
table = strength_table(g, normalized_weights(g), 2)
for rank in all_rank_lists(table).values():
    print(f"node {rank.owner} distance-2 order: {rank.ranked}")

# top_cut keeps the strongest slice (rounded up), which is what the
# prediction and replication stages consume.
print("\ntop half for node 0:", sorted(social_ranks(table, 0).top_cut(0.5)))
