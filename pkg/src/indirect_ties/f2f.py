"""Friend-to-friend storage planning on top of tie strength.

An owner stores replicas only with trusted peers. The direct friends are
trusted by definition; indirect contacts qualify when their strength
clears the owner's personal threshold θ (the weakest direct tie), which
keeps the decision local to each owner. Hourly presence schedules then
let us score candidate sets by how often k of them are online, and a
greedy pass picks replica holders to cover the daily cycle.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graph import SocialGraph
from .strength import NormalizedWeights, StrengthTable

AVAILABILITY_MODES = ("direct_only", "expanded")
PRESENCE_MODELS = ("diurnal", "trace")


@dataclass(frozen=True)
class PresenceSchedule:
    """Per-node boolean online vectors over one cycle of hourly slots."""

    slots_per_cycle: int
    online: dict[int, tuple[bool, ...]]

    def __post_init__(self):
        if self.slots_per_cycle < 1:
            raise ValueError("slots_per_cycle must be >= 1")
        for node, vec in self.online.items():
            if len(vec) != self.slots_per_cycle:
                raise ValueError(
                    f"vector for node {node} has length {len(vec)}, "
                    f"expected {self.slots_per_cycle}"
                )

    def nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.online))

    def vector(self, node: int) -> tuple[bool, ...]:
        if node not in self.online:
            raise ValueError(f"presence schedule is missing node {node}")
        return self.online[node]

    def is_online(self, node: int, slot: int) -> bool:
        return self.vector(node)[slot]

    def online_fraction(self, slot: int) -> float:
        if not self.online:
            return 0.0
        return sum(vec[slot] for vec in self.online.values()) / len(self.online)

    def items(self) -> Iterator[tuple[int, int, bool]]:
        """Yield (node, slot, online) sorted, for export."""
        for node in sorted(self.online):
            for slot, bit in enumerate(self.online[node]):
                yield node, slot, bit


@dataclass(frozen=True)
class CandidateSet:
    """An owner's storage candidates: direct friends plus the indirect
    contacts whose strength cleared θ. The two parts never overlap."""

    owner: int
    theta: float
    direct: frozenset[int]
    expanded: dict[int, tuple[int, float]]  # m -> (n, ss)

    def __post_init__(self):
        if self.direct & self.expanded.keys():
            raise ValueError("direct and expanded candidates must be disjoint")

    def members(self, mode: str) -> tuple[int, ...]:
        if mode not in AVAILABILITY_MODES:
            raise ValueError(f"mode must be one of {AVAILABILITY_MODES}")
        if mode == "direct_only":
            return tuple(sorted(self.direct))
        return tuple(sorted(self.direct | self.expanded.keys()))


@dataclass(frozen=True)
class PlacementResult:
    owner: int
    chosen: tuple[int, ...]
    covered_slots: tuple[bool, ...]
    replicas: int


@dataclass(frozen=True)
class AvailabilityResult:
    k: int
    mode: str
    fractions: tuple[float, ...]
    owner_count: int


@dataclass(frozen=True)
class ExpansionStats:
    """Aggregate view of how much θ-expansion grew the candidate pools."""

    owner_count: int
    expanded_owner_count: int
    expanded_owner_fraction: float
    median_expansion_count: float
    max_expansion_count: int


def theta(nw: NormalizedWeights, i: int) -> float:
    """The owner's weakest direct tie; the bar indirect contacts must clear."""
    if i not in nw:
        raise ValueError(f"node {i} is isolated, theta undefined")
    return min(nw.row(i).values())


def expand_candidates(
    g: SocialGraph, nw: NormalizedWeights, table: StrengthTable, i: int
) -> CandidateSet:
    """Admit every exact-distance-n contact with strength >= θ_i.

    The decision uses only the owner's own row, so owners are independent
    of each other.
    """
    direct = g.neighbors(i)
    if not direct:
        raise ValueError(f"node {i} is isolated, nothing to expand")
    th = theta(nw, i)
    expanded = {}
    for m, entry in table.rows.get(i, {}).items():
        if entry.ss >= th:
            expanded[m] = (entry.n, entry.ss)
    return CandidateSet(owner=i, theta=th, direct=frozenset(direct), expanded=expanded)


def build_candidate_sets(
    g: SocialGraph, nw: NormalizedWeights, table: StrengthTable
) -> tuple[dict[int, CandidateSet], tuple[int, ...]]:
    """Candidate sets for every non-isolated node.

    Isolated nodes have no candidates at all; they are returned separately
    so availability denominators never mix "no friends" with "friends
    offline".
    """
    sets = {}
    skipped = []
    for i in g.nodes:
        if g.neighbors(i):
            sets[i] = expand_candidates(g, nw, table, i)
        else:
            skipped.append(i)
    return sets, tuple(skipped)


def expansion_rows(
    sets: dict[int, CandidateSet]
) -> Iterator[tuple[int, float, int, int, float]]:
    """Yield (owner, theta, direct_count, expanded_count, expansion_rate)
    sorted by owner, for export."""
    for i in sorted(sets):
        cs = sets[i]
        direct_count = len(cs.direct)
        expanded_count = len(cs.expanded)
        yield i, cs.theta, direct_count, expanded_count, expanded_count / direct_count


def expansion_stats(sets: dict[int, CandidateSet]) -> ExpansionStats:
    """Share of owners whose pool grew, and the size of the growth.

    Median and max are taken over owners with a nonempty expansion; both
    are 0 when nobody expanded.
    """
    counts = [len(cs.expanded) for cs in sets.values() if cs.expanded]
    owner_count = len(sets)
    return ExpansionStats(
        owner_count=owner_count,
        expanded_owner_count=len(counts),
        expanded_owner_fraction=len(counts) / owner_count if owner_count else 0.0,
        median_expansion_count=float(statistics.median(counts)) if counts else 0.0,
        max_expansion_count=max(counts) if counts else 0,
    )


def diurnal_probability(
    slot: int, slots: int, floor: float, amplitude: float, peak_hour: float
) -> float:
    """Clamped cosine day shape: floor at the trough, floor + amplitude at
    the peak hour."""
    raw = floor + amplitude * 0.5 * (1.0 + math.cos(2.0 * math.pi * (slot - peak_hour) / slots))
    return min(1.0, max(0.0, raw))


def generate_presence(model: str, params: dict, rng_seed: int) -> PresenceSchedule:
    """Build a presence schedule, either synthetic or from a trace file.

    Diurnal params: nodes (required), slots (24), floor (0.25), amplitude
    (0.5), peak_hour (20.0), timezone_offsets (optional list; each node
    draws one and has its peak shifted by it). Trace params: path to a
    presence CSV. Identical rng_seed gives an identical schedule.
    """
    if model not in PRESENCE_MODELS:
        raise ValueError(f"model must be one of {PRESENCE_MODELS}")
    if model == "trace":
        if "path" not in params:
            raise ValueError("trace model requires a path")
        return load_presence(params["path"])

    if "nodes" not in params:
        raise ValueError("diurnal model requires a node list")
    nodes = sorted(params["nodes"])
    slots = int(params.get("slots", 24))
    floor = float(params.get("floor", 0.25))
    amplitude = float(params.get("amplitude", 0.5))
    peak_hour = float(params.get("peak_hour", 20.0))
    offsets = params.get("timezone_offsets") or ()
    if slots < 1:
        raise ValueError("slots must be >= 1")
    if not 0.0 <= floor <= 1.0:
        raise ValueError("floor must be in [0, 1]")
    if amplitude < 0.0:
        raise ValueError("amplitude must be >= 0")

    rng = np.random.default_rng(rng_seed)
    online = {}
    for node in nodes:
        offset = int(offsets[int(rng.integers(len(offsets)))]) if offsets else 0
        probs = [
            diurnal_probability(slot, slots, floor, amplitude, peak_hour + offset)
            for slot in range(slots)
        ]
        draws = rng.random(slots)
        online[node] = tuple(bool(draws[s] < probs[s]) for s in range(slots))
    return PresenceSchedule(slots_per_cycle=slots, online=online)


def load_presence(path) -> PresenceSchedule:
    """Read a node,slot,online CSV; every node must cover every slot."""
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    body = [ln for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if not body or body[0].split(",")[:3] != ["node", "slot", "online"]:
        raise ValueError(f"{path}: expected header node,slot,online")
    for idx, ln in enumerate(body[1:], start=2):
        parts = ln.split(",")
        if len(parts) != 3:
            raise ValueError(f"{path}: row {idx}: expected 3 fields")
        try:
            node, slot, bit = int(parts[0]), int(parts[1]), parts[2].strip()
        except ValueError as exc:
            raise ValueError(f"{path}: row {idx}: {exc}") from None
        if bit not in ("0", "1"):
            raise ValueError(f"{path}: row {idx}: online must be 0 or 1")
        rows.append((node, slot, bit == "1"))
    if not rows:
        raise ValueError(f"{path}: no presence rows")
    slots = max(slot for _n, slot, _b in rows) + 1
    by_node: dict[int, dict[int, bool]] = {}
    for node, slot, bit in rows:
        cell = by_node.setdefault(node, {})
        if slot in cell:
            raise ValueError(f"{path}: duplicate slot {slot} for node {node}")
        cell[slot] = bit
    online = {}
    for node, cells in by_node.items():
        if sorted(cells) != list(range(slots)):
            raise ValueError(f"{path}: node {node} does not cover slots 0..{slots - 1}")
        online[node] = tuple(cells[s] for s in range(slots))
    return PresenceSchedule(slots_per_cycle=slots, online=online)


def save_presence(sched: PresenceSchedule, path) -> None:
    lines = ["node,slot,online"]
    for node, slot, bit in sched.items():
        lines.append(f"{node},{slot},{int(bit)}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def availability_eval(
    g: SocialGraph,
    sets: dict[int, CandidateSet],
    sched: PresenceSchedule,
    k: int,
    mode: str,
) -> AvailabilityResult:
    """Per-slot fraction of owners with >= k candidates online.

    Only owners present in `sets` count toward the denominator; with an
    empty `sets` every fraction is 0. Aggregation is a sum over owners,
    so the result does not depend on iteration order.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if mode not in AVAILABILITY_MODES:
        raise ValueError(f"mode must be one of {AVAILABILITY_MODES}")
    for owner in sets:
        if owner not in g:
            raise ValueError(f"owner {owner} not in graph")
    slots = sched.slots_per_cycle
    satisfied = [0] * slots
    for owner in sorted(sets):
        vectors = [sched.vector(m) for m in sets[owner].members(mode)]
        for slot in range(slots):
            if sum(vec[slot] for vec in vectors) >= k:
                satisfied[slot] += 1
    owner_count = len(sets)
    fractions = tuple(
        (satisfied[slot] / owner_count if owner_count else 0.0) for slot in range(slots)
    )
    return AvailabilityResult(k=k, mode=mode, fractions=fractions, owner_count=owner_count)


def greedy_placement(
    owner: int, candidates, sched: PresenceSchedule
) -> PlacementResult:
    """Pick replica holders by maximal marginal slot coverage.

    Ties break toward the smaller node id; the loop stops as soon as no
    remaining candidate covers a new slot, so never-online candidates are
    never chosen.
    """
    candidates = sorted(candidates)
    if not candidates:
        raise ValueError("candidate set is empty")
    vectors = {c: sched.vector(c) for c in candidates}
    slots = sched.slots_per_cycle
    covered = [False] * slots
    chosen: list[int] = []
    remaining = list(candidates)
    while remaining:
        best = None
        best_gain = 0
        for c in remaining:
            gain = sum(1 for s in range(slots) if vectors[c][s] and not covered[s])
            if gain > best_gain:
                best = c
                best_gain = gain
        if best is None:
            break
        chosen.append(best)
        remaining.remove(best)
        for s in range(slots):
            if vectors[best][s]:
                covered[s] = True
        if all(covered):
            break
    return PlacementResult(
        owner=owner,
        chosen=tuple(chosen),
        covered_slots=tuple(covered),
        replicas=len(chosen),
    )
