"""
Friend-to-friend storage with strength-expanded candidates
==========================================================

Storing backups only on direct friends fails when those friends keep odd
hours. Strong indirect ties widen the pool; presence schedules and greedy
replica placement show what that buys.
"""

from indirect_ties import (
    SocialGraph,
    availability_eval,
    build_candidate_sets,
    expansion_stats,
    generate_graph,
    generate_presence,
    greedy_placement,
    normalized_weights,
    strength_table,
    theta,
)

# The admission bar for an indirect candidate is the owner's weakest direct
# tie: anyone you trust less than your least-contacted friend stays out.
g = SocialGraph([(0, 1, 9.0), (0, 2, 1.0), (2, 3, 1.0), (1, 3, 9.0)])
nw = normalized_weights(g)
print("threshold for node 0:", theta(nw, 0))

table = strength_table(g, nw, 2)
sets, skipped = build_candidate_sets(g, nw, table)
cs = sets[0]
print("direct candidates:", sorted(cs.direct))
print("admitted at distance 2:", sorted(cs.expanded))

# On a scale-free graph, expansion is not a corner case: a solid share of
# owners gain at least one candidate.
big = generate_graph("barabasi_albert", {"n": 120, "m": 2}, 3)
nw = normalized_weights(big)
sets, skipped = build_candidate_sets(big, nw, strength_table(big, nw, 2))
stats = expansion_stats(sets)
print(
    f"\n{stats.expanded_owner_count}/{stats.owner_count} owners expanded, "
    f"median gain {stats.median_expansion_count:.0f}, max {stats.max_expansion_count}"
)

# Presence follows a day curve: quiet early, busy toward the evening peak.
sched = generate_presence(
    "diurnal", {"nodes": big.nodes, "slots": 24, "floor": 0.25, "amplitude": 0.5}, 11
)

# Availability: in each slot, what fraction of owners have at least k
# candidates online? The expanded pool can only help.
for k in (1, 3):
    direct = availability_eval(big, sets, sched, k, "direct_only").fractions
    expanded = availability_eval(big, sets, sched, k, "expanded").fractions
    worst = min(range(24), key=lambda s: direct[s])
    print(
        f"k={k} worst slot {worst:2d}: "
        f"direct {direct[worst]:.3f} -> expanded {expanded[worst]:.3f}"
    )

# Replica placement greedily covers the clock with as few holders as
# possible. Three staggered shifts cover a full day with three replicas.
vectors = {
    1: tuple(0 <= s < 8 for s in range(24)),
    2: tuple(6 <= s < 16 for s in range(24)),
    3: tuple(14 <= s < 24 for s in range(24)),
}
from indirect_ties import PresenceSchedule

placement = greedy_placement(0, [1, 2, 3], PresenceSchedule(slots_per_cycle=24, online=vectors))
print(
    f"\nchosen holders {placement.chosen}, "
    f"covered {sum(placement.covered_slots)}/24 slots"
)
