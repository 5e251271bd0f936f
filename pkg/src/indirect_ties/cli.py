"""Command-line front end wiring the library into reproducible experiments.

Every subcommand reads a graph (from file, config, or generator), runs one
experiment, writes one CSV or JSON artifact, and prints a one-line
summary. A single global seed is expanded into per-component substreams
by a fixed labeling scheme, so identical inputs and seed always produce
byte-identical artifacts.

Exit codes: 0 success, 1 usage or config error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from dataclasses import dataclass, field

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib

from .diffusion import (
    DiffusionConfig,
    EVALUATIONS,
    simulate_si,
    predict_infected_at_n,
    sweep_experiment,
)
from .f2f import (
    AVAILABILITY_MODES,
    availability_eval,
    build_candidate_sets,
    expansion_rows,
    expansion_stats,
    generate_presence,
    greedy_placement,
    load_presence,
    save_presence,
)
from .graph import generate_graph, graph_stats, load_graph, save_graph
from .seeding import derive_seed
from .strength import (
    DEFAULT_PATH_CAP,
    labeled_normalized_weights,
    normalized_weights,
    strength_table,
)
from .validation import correlate_jc_ss2, triad_experiment, ZERO_POLICIES
from . import __version__

GENERATOR_MODELS = ("erdos_renyi", "barabasi_albert", "weighted_complete")


class UsageError(Exception):
    """Bad flags or missing inputs; maps to exit code 1."""


class ConfigError(Exception):
    """Invalid or unreadable experiment config; maps to exit code 1."""


@dataclass
class GraphSpec:
    path: str | None = None
    model: str | None = None
    nodes: int = 100
    p: float = 0.05
    m: int = 2
    weight_min: int = 1
    weight_max: int = 50

    def generator_params(self) -> dict:
        params = {"n": self.nodes, "weight_min": self.weight_min, "weight_max": self.weight_max}
        if self.model == "erdos_renyi":
            params["p"] = self.p
        elif self.model == "barabasi_albert":
            params["m"] = self.m
        return params


@dataclass
class StrengthSpec:
    n: int = 2
    cap: int = DEFAULT_PATH_CAP


@dataclass
class DiffusionSpec:
    p0_min: float = 0.0
    p0_max: float = 1.0
    p0_steps: int = 11
    iterations: int = 100
    top_fraction: float = 0.10
    evaluation: str = "exact"


@dataclass
class F2FSpec:
    k: list[int] = field(default_factory=lambda: [1, 3, 6])
    presence: str | None = None
    slots: int = 24
    floor: float = 0.25
    amplitude: float = 0.5
    peak_hour: float = 20.0
    timezone_offsets: list[int] = field(default_factory=list)


@dataclass
class OutputSpec:
    directory: str = "."


_SECTIONS = ("graph", "strength", "diffusion", "f2f", "output")


@dataclass
class ExperimentConfig:
    """One experiment's knobs, serializable to a flat-section TOML file."""

    seed: int = 0
    graph: GraphSpec = field(default_factory=GraphSpec)
    strength: StrengthSpec = field(default_factory=StrengthSpec)
    diffusion: DiffusionSpec = field(default_factory=DiffusionSpec)
    f2f: F2FSpec = field(default_factory=F2FSpec)
    output: OutputSpec = field(default_factory=OutputSpec)

    @classmethod
    def from_toml(cls, text: str) -> "ExperimentConfig":
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"bad TOML: {exc}") from None
        cfg = cls()
        for key, value in data.items():
            if key == "seed":
                cfg.seed = value
            elif key in _SECTIONS:
                section = getattr(cfg, key)
                names = {f.name for f in dataclasses.fields(section)}
                for name, val in value.items():
                    if name not in names:
                        raise ConfigError(f"unknown key [{key}] {name}")
                    setattr(section, name, val)
            else:
                raise ConfigError(f"unknown top-level key {key!r}")
        return cfg

    @classmethod
    def from_toml_path(cls, path) -> "ExperimentConfig":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return cls.from_toml(fh.read())
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None

    def to_toml(self) -> str:
        lines = [f"seed = {_toml_value(self.seed)}", ""]
        for name in _SECTIONS:
            section = getattr(self, name)
            lines.append(f"[{name}]")
            for f in dataclasses.fields(section):
                value = getattr(section, f.name)
                if value is None:
                    continue
                lines.append(f"{f.name} = {_toml_value(value)}")
            lines.append("")
        return "\n".join(lines)

    def validate(self) -> None:
        def bad(msg):
            raise ConfigError(msg)

        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or self.seed < 0:
            bad("seed must be a non-negative integer")
        gs = self.graph
        if gs.path is not None and not os.path.exists(gs.path):
            bad(f"graph file not found: {gs.path}")
        if gs.model is not None and gs.model not in GENERATOR_MODELS:
            bad(f"graph model must be one of {GENERATOR_MODELS}")
        if gs.nodes < 1:
            bad("graph nodes must be >= 1")
        if not 0.0 <= gs.p <= 1.0:
            bad("graph p must be in [0, 1]")
        if gs.m < 1:
            bad("graph m must be >= 1")
        if not 0 < gs.weight_min <= gs.weight_max:
            bad("graph weight range must satisfy 0 < weight_min <= weight_max")
        if self.strength.n < 1:
            bad("strength n must be >= 1")
        if self.strength.cap < 1:
            bad("strength cap must be >= 1")
        ds = self.diffusion
        if ds.p0_min > ds.p0_max:
            bad("p0_min must be <= p0_max")
        if ds.p0_steps < 1:
            bad("p0_steps must be >= 1")
        if ds.iterations < 1:
            bad("iterations must be >= 1")
        if not 0 < ds.top_fraction <= 1:
            bad("top_fraction must be in (0, 1]")
        if ds.evaluation not in EVALUATIONS:
            bad(f"evaluation must be one of {EVALUATIONS}")
        fs = self.f2f
        if not fs.k or any(k < 1 for k in fs.k):
            bad("f2f k list must be nonempty with values >= 1")
        if fs.presence is not None and not os.path.exists(fs.presence):
            bad(f"presence file not found: {fs.presence}")
        if fs.slots < 1:
            bad("f2f slots must be >= 1")
        if not 0.0 <= fs.floor <= 1.0:
            bad("f2f floor must be in [0, 1]")
        if fs.amplitude < 0.0:
            bad("f2f amplitude must be >= 0")


def _toml_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float, str)):
        # JSON scalar syntax is valid TOML for these types
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_toml_value(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_csv(path, header, rows) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def _mirror_json(args, out_path, header, rows) -> None:
    if not getattr(args, "json", False):
        return
    records = [dict(zip(header, row)) for row in rows]
    path = os.path.splitext(out_path)[0] + ".json"
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(records, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _out_path(args, cfg: ExperimentConfig, default_name: str) -> str:
    path = args.out or os.path.join(cfg.output.directory, default_name)
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    return path


def _input_graph(args, cfg: ExperimentConfig):
    path = args.graph or cfg.graph.path
    if path:
        return load_graph(path)
    if cfg.graph.model:
        return generate_graph(
            cfg.graph.model, cfg.graph.generator_params(), derive_seed(cfg.seed, "graph")
        )
    raise UsageError("no graph source: pass --graph or configure [graph]")


def _network_name(args, cfg: ExperimentConfig) -> str:
    path = args.graph or cfg.graph.path
    if path:
        return os.path.splitext(os.path.basename(path))[0]
    return cfg.graph.model or "graph"


def _presence_schedule(args, cfg: ExperimentConfig, g):
    path = getattr(args, "presence", None) or cfg.f2f.presence
    if path:
        return load_presence(path)
    fs = cfg.f2f
    params = {
        "nodes": g.nodes,
        "slots": fs.slots,
        "floor": fs.floor,
        "amplitude": fs.amplitude,
        "peak_hour": fs.peak_hour,
        "timezone_offsets": fs.timezone_offsets,
    }
    return generate_presence("diurnal", params, derive_seed(cfg.seed, "presence"))


def _candidate_sets(args, cfg: ExperimentConfig, g):
    nw = normalized_weights(g)
    table = strength_table(g, nw, cfg.strength.n, cfg.strength.cap)
    return build_candidate_sets(g, nw, table)


# ---------------------------------------------------------------- handlers


def _cmd_stats(args, cfg):
    g = _input_graph(args, cfg)
    st = graph_stats(g)
    out = _out_path(args, cfg, "stats.json")
    payload = dataclasses.asdict(st)
    payload["weight_range"] = list(payload["weight_range"])
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"stats: {st.node_count} nodes, {st.edge_count} edges -> {out}")


def _cmd_nw(args, cfg):
    g = _input_graph(args, cfg)
    nw = labeled_normalized_weights(g, args.label) if args.label else normalized_weights(g)
    out = _out_path(args, cfg, "nw.csv")
    header = ["src", "dst", "nw"]
    rows = list(nw.pairs())
    _write_csv(out, header, rows)
    _mirror_json(args, out, header, rows)
    print(f"nw: {len(rows)} directed values over {len(nw)} sources -> {out}")


def _cmd_ss(args, cfg):
    g = _input_graph(args, cfg)
    nw = normalized_weights(g)
    table = strength_table(g, nw, cfg.strength.n, cfg.strength.cap)
    out = _out_path(args, cfg, "ss.csv")
    header = ["src", "dst", "n", "ss", "path_count", "truncated"]
    rows = [
        (i, m, e.n, e.ss, e.path_count, e.truncated) for (i, m), e in table.items()
    ]
    _write_csv(out, header, rows)
    _mirror_json(args, out, header, rows)
    print(f"ss: {len(rows)} ordered pairs at distance {cfg.strength.n} -> {out}")


def _cmd_validate(args, cfg):
    g = _input_graph(args, cfg)
    network = _network_name(args, cfg)
    out = _out_path(args, cfg, "validate.csv")
    header = [
        "network",
        "pc_weight_jc",
        "pc_weight_ss",
        "pc_jc_ss",
        "zero_filtered",
        "removed_fraction",
        "n_pairs",
    ]
    rows = []
    if args.mode == "jc-ss2":
        rep = correlate_jc_ss2(g, cfg.strength.cap)
        rows.append(
            (network, None, None, rep.coefficient, rep.zero_filtered, rep.removed_fraction, rep.n_pairs)
        )
    else:
        policies = ZERO_POLICIES if args.zero_policy == "both" else (args.zero_policy,)
        for policy in policies:
            w_jc, w_ss, jc_ss = triad_experiment(g, policy, cfg.strength.cap)
            rows.append(
                (
                    network,
                    w_jc.coefficient,
                    w_ss.coefficient,
                    jc_ss.coefficient,
                    w_jc.zero_filtered,
                    w_jc.removed_fraction,
                    w_jc.n_pairs,
                )
            )
    _write_csv(out, header, rows)
    _mirror_json(args, out, header, rows)
    print(f"validate[{args.mode}]: {len(rows)} report rows -> {out}")


def _cmd_diffuse(args, cfg):
    g = _input_graph(args, cfg)
    if args.p0 is None:
        raise UsageError("diffuse requires --p0")
    dcfg = DiffusionConfig(
        p0=args.p0,
        seed_node=args.seed_node,
        rng_seed=derive_seed(cfg.seed, "diffuse"),
        max_steps=args.max_steps,
    )
    trace = simulate_si(g, dcfg)
    out = _out_path(args, cfg, "trace.csv")
    header = ["node", "step"]
    rows = list(trace.items())
    _write_csv(out, header, rows)
    _mirror_json(args, out, header, rows)
    print(
        f"diffuse: seed {trace.seed}, p0 {args.p0}: {len(trace)} infected "
        f"in {trace.steps()} steps -> {out}"
    )


def _cmd_predict(args, cfg):
    g = _input_graph(args, cfg)
    if args.seed_node is None or args.seed_node == "random":
        raise UsageError("predict requires --seed-node with a concrete node id")
    nw = normalized_weights(g)
    table = strength_table(g, nw, cfg.strength.n, cfg.strength.cap)
    predicted = predict_infected_at_n(
        g, table, args.seed_node, cfg.diffusion.top_fraction
    )
    population = sorted(table.rows[args.seed_node])
    out = _out_path(args, cfg, "predict.csv")
    header = ["node", "predicted"]
    rows = [(m, m in predicted) for m in population]
    _write_csv(out, header, rows)
    _mirror_json(args, out, header, rows)
    print(
        f"predict: {len(predicted)} of {len(population)} distance-{cfg.strength.n} "
        f"contacts of {args.seed_node} -> {out}"
    )


def _p0_grid(ds: DiffusionSpec) -> list[float]:
    if ds.p0_steps == 1:
        return [float(ds.p0_min)]
    span = ds.p0_max - ds.p0_min
    return [ds.p0_min + i * span / (ds.p0_steps - 1) for i in range(ds.p0_steps)]


def _cmd_sweep(args, cfg):
    g = _input_graph(args, cfg)
    ds = cfg.diffusion
    points = sweep_experiment(
        g,
        _p0_grid(ds),
        cfg.strength.n,
        iterations=ds.iterations,
        rng_seed=derive_seed(cfg.seed, "sweep"),
        top_fraction=ds.top_fraction,
        evaluation=ds.evaluation,
        cap=cfg.strength.cap,
    )
    out = _out_path(args, cfg, "sweep.csv")
    header = ["p0", "n", "method", "accuracy", "sensitivity", "specificity", "defined_count"]
    rows = [
        (p.p0, p.n, p.method, p.accuracy, p.sensitivity, p.specificity, p.defined_count)
        for p in points
    ]
    _write_csv(out, header, rows)
    _mirror_json(args, out, header, rows)
    print(
        f"sweep: {ds.p0_steps} thresholds x 2 methods, {ds.iterations} iterations -> {out}"
    )


def _cmd_f2f_expand(args, cfg):
    g = _input_graph(args, cfg)
    sets, skipped = _candidate_sets(args, cfg, g)
    out = _out_path(args, cfg, "expansion.csv")
    header = ["owner", "theta", "direct_count", "expanded_count", "expansion_rate"]
    rows = list(expansion_rows(sets))
    _write_csv(out, header, rows)
    _mirror_json(args, out, header, rows)
    st = expansion_stats(sets)
    print(
        f"f2f-expand: {st.expanded_owner_count}/{st.owner_count} owners expanded "
        f"({100.0 * st.expanded_owner_fraction:.1f}%), median {st.median_expansion_count}, "
        f"max {st.max_expansion_count}, {len(skipped)} isolated -> {out}"
    )


def _cmd_f2f_availability(args, cfg):
    g = _input_graph(args, cfg)
    sets, _skipped = _candidate_sets(args, cfg, g)
    sched = _presence_schedule(args, cfg, g)
    ks = args.k or cfg.f2f.k
    out = _out_path(args, cfg, "availability.csv")
    header = ["slot", "k", "mode", "fraction"]
    rows = []
    for k in ks:
        for mode in AVAILABILITY_MODES:
            result = availability_eval(g, sets, sched, k, mode)
            for slot, fraction in enumerate(result.fractions):
                rows.append((slot, k, mode, fraction))
    _write_csv(out, header, rows)
    _mirror_json(args, out, header, rows)
    print(
        f"f2f-availability: {sched.slots_per_cycle} slots, k in {list(ks)}, "
        f"{len(sets)} owners -> {out}"
    )


def _cmd_f2f_place(args, cfg):
    g = _input_graph(args, cfg)
    sets, _skipped = _candidate_sets(args, cfg, g)
    sched = _presence_schedule(args, cfg, g)
    out = _out_path(args, cfg, "placement.csv")
    header = ["owner", "replicas", "covered_count", "chosen"]
    rows = []
    total_replicas = 0
    for owner in sorted(sets):
        members = sets[owner].members(args.mode)
        placement = greedy_placement(owner, members, sched)
        total_replicas += placement.replicas
        rows.append(
            (
                owner,
                placement.replicas,
                sum(placement.covered_slots),
                ";".join(str(c) for c in placement.chosen),
            )
        )
    _write_csv(out, header, rows)
    _mirror_json(args, out, header, rows)
    mean = total_replicas / len(rows) if rows else 0.0
    print(f"f2f-place[{args.mode}]: {len(rows)} owners, mean replicas {mean:.2f} -> {out}")


def _cmd_gen_graph(args, cfg):
    model = args.model or cfg.graph.model
    if not model:
        raise UsageError("gen-graph requires --model or a configured [graph] model")
    spec = GraphSpec(
        model=model,
        nodes=args.nodes if args.nodes is not None else cfg.graph.nodes,
        p=args.p if args.p is not None else cfg.graph.p,
        m=args.m if args.m is not None else cfg.graph.m,
        weight_min=args.weight_min if args.weight_min is not None else cfg.graph.weight_min,
        weight_max=args.weight_max if args.weight_max is not None else cfg.graph.weight_max,
    )
    if model not in GENERATOR_MODELS:
        raise UsageError(f"model must be one of {GENERATOR_MODELS}")
    g = generate_graph(model, spec.generator_params(), derive_seed(cfg.seed, "graph"))
    out = _out_path(args, cfg, "graph.csv")
    save_graph(g, out)
    print(f"gen-graph[{model}]: {g.node_count} nodes, {g.edge_count} edges -> {out}")


def _cmd_gen_presence(args, cfg):
    if args.graph or cfg.graph.path or cfg.graph.model:
        nodes = _input_graph(args, cfg).nodes
    elif args.nodes is not None:
        nodes = range(args.nodes)
    else:
        raise UsageError("gen-presence requires a graph source or --nodes")
    fs = cfg.f2f
    params = {
        "nodes": nodes,
        "slots": args.slots if args.slots is not None else fs.slots,
        "floor": args.floor if args.floor is not None else fs.floor,
        "amplitude": args.amplitude if args.amplitude is not None else fs.amplitude,
        "peak_hour": args.peak_hour if args.peak_hour is not None else fs.peak_hour,
        "timezone_offsets": fs.timezone_offsets,
    }
    sched = generate_presence("diurnal", params, derive_seed(cfg.seed, "presence"))
    out = _out_path(args, cfg, "presence.csv")
    save_presence(sched, out)
    print(
        f"gen-presence: {len(sched.nodes())} nodes x {sched.slots_per_cycle} slots -> {out}"
    )


# ------------------------------------------------------------------ parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _seed_node_arg(text: str):
    if text == "random":
        return "random"
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a node id or 'random', got {text!r}")


def _k_list_arg(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ints, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("k list is empty")
    return values


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="edge-list CSV to load")
    common.add_argument("--config", help="experiment config TOML")
    common.add_argument("--seed", type=int, help="global seed (overrides config)")
    common.add_argument("--out", help="output artifact path")
    common.add_argument("--json", action="store_true", help="also write a JSON mirror")

    parser = _Parser(prog="indirect-ties", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    add("stats", _cmd_stats, "descriptive graph statistics (JSON)")

    p = add("nw", _cmd_nw, "normalized direct weights CSV")
    p.add_argument("--label", help="restrict to one interaction label")

    p = add("ss", _cmd_ss, "strength of every pair at exact distance n")
    p.add_argument("--n", type=int, help="hop distance")
    p.add_argument("--cap", type=int, help="max shortest paths per pair")

    p = add("validate", _cmd_validate, "overlap/strength correlation reports")
    p.add_argument("--mode", choices=("triad", "jc-ss2"), default="triad")
    p.add_argument(
        "--zero-policy",
        choices=(*ZERO_POLICIES, "both"),
        default="include_zeros",
        dest="zero_policy",
    )
    p.add_argument("--cap", type=int)

    p = add("diffuse", _cmd_diffuse, "one threshold spread, trace CSV")
    p.add_argument("--p0", type=float, help="passing-probability threshold")
    p.add_argument("--seed-node", type=_seed_node_arg, default="random", dest="seed_node")
    p.add_argument("--max-steps", type=int, dest="max_steps")

    p = add("predict", _cmd_predict, "mutual-rank infection prediction for one seed")
    p.add_argument("--seed-node", type=_seed_node_arg, dest="seed_node")
    p.add_argument("--n", type=int)
    p.add_argument("--cap", type=int)
    p.add_argument("--top-fraction", type=float, dest="top_fraction")

    p = add("sweep", _cmd_sweep, "metrics vs p0 for predictor and baseline")
    p.add_argument("--n", type=int)
    p.add_argument("--cap", type=int)
    p.add_argument("--p0-min", type=float, dest="p0_min")
    p.add_argument("--p0-max", type=float, dest="p0_max")
    p.add_argument("--p0-steps", type=int, dest="p0_steps")
    p.add_argument("--iterations", type=int)
    p.add_argument("--top-fraction", type=float, dest="top_fraction")
    p.add_argument("--evaluation", choices=EVALUATIONS)

    p = add("f2f-expand", _cmd_f2f_expand, "θ-threshold candidate expansion stats")
    p.add_argument("--n", type=int)
    p.add_argument("--cap", type=int)

    p = add("f2f-availability", _cmd_f2f_availability, "per-slot availability fractions")
    p.add_argument("--n", type=int)
    p.add_argument("--cap", type=int)
    p.add_argument("--k", type=_k_list_arg, help="required online counts, e.g. 1,3,6")
    p.add_argument("--presence", help="presence CSV (generated diurnally if absent)")

    p = add("f2f-place", _cmd_f2f_place, "greedy slot-coverage replica placement")
    p.add_argument("--n", type=int)
    p.add_argument("--cap", type=int)
    p.add_argument("--mode", choices=AVAILABILITY_MODES, default="expanded")
    p.add_argument("--presence")

    p = add("gen-graph", _cmd_gen_graph, "write a synthetic weighted graph")
    p.add_argument("--model", choices=GENERATOR_MODELS)
    p.add_argument("--nodes", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--m", type=int)
    p.add_argument("--weight-min", type=int, dest="weight_min")
    p.add_argument("--weight-max", type=int, dest="weight_max")

    p = add("gen-presence", _cmd_gen_presence, "write a diurnal presence schedule")
    p.add_argument("--nodes", type=int, help="node count when no graph is given")
    p.add_argument("--slots", type=int)
    p.add_argument("--floor", type=float)
    p.add_argument("--amplitude", type=float)
    p.add_argument("--peak-hour", type=float, dest="peak_hour")

    return parser


_FLAG_OVERRIDES = (
    ("n", "strength", "n"),
    ("cap", "strength", "cap"),
    ("p0_min", "diffusion", "p0_min"),
    ("p0_max", "diffusion", "p0_max"),
    ("p0_steps", "diffusion", "p0_steps"),
    ("iterations", "diffusion", "iterations"),
    ("top_fraction", "diffusion", "top_fraction"),
    ("evaluation", "diffusion", "evaluation"),
    ("k", "f2f", "k"),
)


def _resolve_config(args) -> ExperimentConfig:
    cfg = ExperimentConfig.from_toml_path(args.config) if args.config else ExperimentConfig()
    if args.seed is not None:
        cfg.seed = args.seed
    for flag, section, name in _FLAG_OVERRIDES:
        value = getattr(args, flag, None)
        if value is not None:
            setattr(getattr(cfg, section), name, value)
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        cfg = _resolve_config(args)
    except (UsageError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        args.handler(args, cfg)
    except (UsageError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
