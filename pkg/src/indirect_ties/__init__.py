"""Weighted social-graph analytics: strength of indirect ties, diffusion
prediction, and friend-to-friend storage planning."""

__version__ = "0.1.0"

from .graph import (
    DEFAULT_LABEL,
    GraphFormatError,
    GraphStats,
    SocialGraph,
    bfs_distances,
    connected_components,
    generate_graph,
    graph_stats,
    is_connected,
    load_graph,
    save_graph,
)
from .strength import (
    DEFAULT_PATH_CAP,
    DisconnectedPairError,
    NormalizedWeights,
    RankList,
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
from .validation import (
    CorrelationReport,
    PairedSeries,
    TriadRecord,
    ZeroVarianceError,
    correlate_jc_ss2,
    jaccard,
    jc_ss2_series,
    pearson,
    triad_experiment,
    triad_records,
)
from .diffusion import (
    DiffusionConfig,
    DiffusionTrace,
    EvalMetrics,
    PredictionOutcome,
    SweepPoint,
    baseline_predict,
    edge_probabilities,
    evaluate_prediction,
    predict_infected_at_n,
    simulate_si,
    sweep_experiment,
)
from .f2f import (
    AvailabilityResult,
    CandidateSet,
    ExpansionStats,
    PlacementResult,
    PresenceSchedule,
    availability_eval,
    build_candidate_sets,
    diurnal_probability,
    expand_candidates,
    expansion_rows,
    expansion_stats,
    generate_presence,
    greedy_placement,
    load_presence,
    save_presence,
    theta,
)
from .seeding import derive_seed, substream

__all__ = [
    "DEFAULT_LABEL",
    "DEFAULT_PATH_CAP",
    "AvailabilityResult",
    "CandidateSet",
    "CorrelationReport",
    "DiffusionConfig",
    "DiffusionTrace",
    "DisconnectedPairError",
    "EvalMetrics",
    "ExpansionStats",
    "GraphFormatError",
    "GraphStats",
    "NormalizedWeights",
    "PairedSeries",
    "PlacementResult",
    "PredictionOutcome",
    "PresenceSchedule",
    "RankList",
    "SocialGraph",
    "StrengthEntry",
    "StrengthTable",
    "SweepPoint",
    "TriadRecord",
    "ZeroVarianceError",
    "all_rank_lists",
    "availability_eval",
    "baseline_predict",
    "bfs_distances",
    "build_candidate_sets",
    "connected_components",
    "correlate_jc_ss2",
    "derive_seed",
    "diurnal_probability",
    "edge_probabilities",
    "evaluate_prediction",
    "expand_candidates",
    "expansion_rows",
    "expansion_stats",
    "generate_graph",
    "generate_presence",
    "graph_stats",
    "greedy_placement",
    "is_connected",
    "jaccard",
    "jc_ss2_series",
    "labeled_normalized_weights",
    "load_graph",
    "load_presence",
    "normalized_weights",
    "pearson",
    "predict_infected_at_n",
    "save_graph",
    "save_presence",
    "shortest_paths_exact",
    "simulate_si",
    "social_ranks",
    "social_strength",
    "strength_from_paths",
    "strength_table",
    "substream",
    "sweep_experiment",
    "theta",
    "triad_experiment",
    "triad_records",
]
