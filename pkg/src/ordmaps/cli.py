"""Command-line pipeline over the library.

Subcommands:

    generate   integrate a benchmark system and write the series
    analyze    symbolize a series and report on every ordinal partition
    frm        first return maps for chosen partitions, levels or maxima
    levels     level sequence and level transition network
    embed      time-delay embedding with optional partition coloring
    pipeline   generate/load, then analyze + frm + levels + embed in one run
    rerun      replay any previous run from its manifest

Every run writes a ``manifest.json`` capturing the full configuration, the
tool version and a content hash of the input series; identical
configurations produce byte-identical outputs. When ``--out-dir`` is
omitted, outputs land in ``runs/<manifest digest prefix>/``. On failure,
files already written for the run are removed and the exit code is
nonzero.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .embedding import EmbeddingConfig, delay_embed, window_from_embedding
from .encoding import (
    OrdinalPattern,
    WindowConfig,
    canonical_pattern,
    display_pattern,
    symbolize,
)
from .errors import ConfigError, OrdmapsError
from .exports import (
    diagonal_summary,
    write_embedding_csv,
    write_entropy_curve_csv,
    write_frm_combined_csv,
    write_frm_csv,
    write_level_network_csv,
    write_level_sequence_csv,
    write_opn_edges_csv,
    write_opn_nodes_csv,
    write_partitions_csv,
    write_series_csv,
    write_symbols_csv,
)
from .levels import build_level_network, entry_level_sequence, level_sequence
from .manifest import TOOL_VERSION, canonical_json, load_manifest, manifest_digest, write_manifest
from .network import build_opn, markov_estimate
from .ranking import (
    SubSeriesConfig,
    analyze_partitions,
    entry_mask,
    entry_points,
)
from .returnmaps import frm_from_entries, maxima_frm
from .series import load_series, series_sha256
from .sources import (
    LorenzParams,
    MackeyGlassParams,
    RosslerParams,
    SimulationConfig,
    integrate_lorenz,
    integrate_mackey_glass,
    integrate_rossler,
)

SYSTEMS = ("lorenz", "rossler", "mackey-glass")

_BY_CHOICES = {
    "weighted": ("weighted_entropy", "weighted_level"),
    "transition": ("transition_entropy", "transition_level"),
}

_DEFAULT_EMBEDDING = {
    "lorenz": (3, 9),
    "rossler": (3, 144),
    "mackey-glass": (2, 204),
}


class _RunWriter:
    """Tracks files written for one run so failures leave nothing behind."""

    def __init__(self, out_dir: Path):
        self.out_dir = out_dir
        self._created_dir = not out_dir.exists()
        out_dir.mkdir(parents=True, exist_ok=True)
        self.written: list[Path] = []

    def emit(self, name: str, fn) -> Path:
        path = self.out_dir / name
        fn(path)
        self.written.append(path)
        return path

    def cleanup(self) -> None:
        for path in self.written:
            path.unlink(missing_ok=True)
        if self._created_dir:
            try:
                self.out_dir.rmdir()
            except OSError:
                pass


# ---------------------------------------------------------------- input


def _realize_input(spec: dict):
    """Load or integrate the series named by spec['input'], pin its hash."""
    inp = spec["input"]
    kind = inp["kind"]
    if kind == "file":
        series = load_series(inp["path"], inp["format"], inp.get("dt"))
        inp["dt"] = series.dt
    elif kind in SYSTEMS:
        sim = SimulationConfig(
            dt=inp["sim"]["dt"],
            total_points=inp["sim"]["total_points"],
            discard_fraction=inp["sim"]["discard_fraction"],
            initial_state=tuple(inp["sim"]["initial_state"])
            if inp["sim"]["initial_state"] is not None
            else None,
            seed=inp["sim"]["seed"],
        )
        if kind == "lorenz":
            series = integrate_lorenz(LorenzParams(**inp["params"]), sim)
        elif kind == "rossler":
            series = integrate_rossler(RosslerParams(**inp["params"]), sim)
        else:
            series = integrate_mackey_glass(MackeyGlassParams(**inp["params"]), sim)
    else:
        raise ConfigError(f"unknown input kind {kind!r}")
    digest = series_sha256(series)
    previous = spec.get("series_sha256")
    if previous is not None and previous != digest:
        raise ConfigError(
            "input series does not match the manifest "
            f"(expected {previous[:12]}..., got {digest[:12]}...)"
        )
    spec["series_sha256"] = digest
    return series


# ------------------------------------------------------------- analysis


def _window_cfg(spec: dict) -> WindowConfig:
    return WindowConfig(**spec["window"])


def _sub_cfg(spec: dict) -> SubSeriesConfig:
    return SubSeriesConfig(**spec["subseries"])


def _analysis(series, spec):
    seq = symbolize(series, _window_cfg(spec))
    reports = analyze_partitions(
        series,
        seq,
        _sub_cfg(spec),
        gap_fraction=spec["levels"]["gap_fraction"],
        max_levels=spec["levels"]["max_levels"],
    )
    return seq, reports


def _write_analysis(writer, seq, reports):
    ranking = seq.config.ranking
    tc = build_opn(seq)
    est = markov_estimate(tc)
    writer.emit("symbols.csv", lambda p: write_symbols_csv(seq, p))
    writer.emit("partitions.csv", lambda p: write_partitions_csv(reports, p, ranking))
    writer.emit("entropy_curve.csv", lambda p: write_entropy_curve_csv(reports, p, ranking))
    writer.emit("opn_edges.csv", lambda p: write_opn_edges_csv(tc, p, ranking))
    writer.emit("opn_nodes.csv", lambda p: write_opn_nodes_csv(est, p, ranking))


def _frm_maps(series, spec, seq=None, reports=None):
    frm = spec["frm"]
    maps = []
    if frm["mode"] == "maxima":
        maps.append(maxima_frm(series, sign_split=frm["sign_split"]))
        return maps
    ranking = spec["window"]["ranking"]
    if frm["mode"] == "pattern":
        for text in frm["patterns"]:
            shown = OrdinalPattern.from_dashed(text)
            pattern = canonical_pattern(shown, ranking)
            entries = entry_points(seq, pattern)
            maps.append(frm_from_entries(series, entries, source=f"partition:{shown.dashed()}"))
        return maps
    level_attr = _BY_CHOICES[frm["by"]][1]
    selected = [r for r in reports if getattr(r, level_attr) == frm["level"]]
    for report in sorted(selected, key=lambda r: r.pattern.perm):
        if len(report.entry_indices) < 2:
            continue  # cannot form a single pair; recorded by absence
        shown = display_pattern(report.pattern, ranking)
        maps.append(
            frm_from_entries(
                series, report.entry_indices, source=f"partition:{shown.dashed()}"
            )
        )
    return maps


def _write_frm(writer, maps):
    for rm in maps:
        name = "frm_" + rm.source.replace(":", "_") + ".csv"
        writer.emit(name, lambda p, rm=rm: write_frm_csv(rm, p))
    writer.emit("frm_all.csv", lambda p: write_frm_combined_csv(maps, p))
    summary = diagonal_summary(maps)
    writer.emit(
        "diagonal_summary.json",
        lambda p: p.write_text(canonical_json(summary), encoding="utf-8"),
    )


def _write_levels(writer, seq, reports, spec):
    by_attr = _BY_CHOICES[spec["level_network"]["by"]][1]
    full = level_sequence(seq, reports, by_attr)
    used = (
        entry_level_sequence(seq, reports, by_attr)
        if spec["level_network"]["per_entry"]
        else full
    )
    net = build_level_network(used)
    writer.emit("level_sequence.csv", lambda p: write_level_sequence_csv(seq, full, p))
    writer.emit("level_network.csv", lambda p: write_level_network_csv(net, p))


def _write_embedding(writer, series, spec, seq=None, reports=None):
    emb = spec["embedding"]
    cfg = EmbeddingConfig(dim=emb["dim"], lag=emb["lag"])
    points = delay_embed(series, cfg)
    if emb["color"] == "none" or seq is None:
        writer.emit("embedded.csv", lambda p: write_embedding_csv(points, p))
        return
    ranking = seq.config.ranking
    level_attr = _BY_CHOICES[spec["level_network"]["by"]][1] if "level_network" in spec else "transition_level"
    lv = level_sequence(seq, reports, level_attr)
    entries = entry_mask(seq.codes)
    pattern_col = [""] * len(points)
    level_col = [""] * len(points)
    entry_col = [0] * len(points)
    for pos, start in enumerate(seq.start_indices):
        k = int(start)
        if k < len(points):
            pattern_col[k] = display_pattern(seq.symbol(pos), ranking).dashed()
            level_col[k] = str(int(lv[pos]))
            entry_col[k] = int(entries[pos])
    writer.emit(
        "embedded.csv",
        lambda p: write_embedding_csv(points, p, pattern_col, level_col, entry_col),
    )


# ------------------------------------------------------------- runners


def _run_generate(spec, series, writer):
    writer.emit("series.csv", lambda p: write_series_csv(series, p))


def _run_analyze(spec, series, writer):
    seq, reports = _analysis(series, spec)
    _write_analysis(writer, seq, reports)


def _run_frm(spec, series, writer):
    seq = reports = None
    if spec["frm"]["mode"] == "pattern":
        seq = symbolize(series, _window_cfg(spec))
    elif spec["frm"]["mode"] == "level":
        seq, reports = _analysis(series, spec)
    maps = _frm_maps(series, spec, seq, reports)
    _write_frm(writer, maps)


def _run_levels(spec, series, writer):
    seq, reports = _analysis(series, spec)
    _write_levels(writer, seq, reports, spec)


def _run_embed(spec, series, writer):
    if spec["embedding"]["color"] == "none":
        _write_embedding(writer, series, spec)
        return
    seq, reports = _analysis(series, spec)
    _write_embedding(writer, series, spec, seq, reports)


def _run_pipeline(spec, series, writer):
    writer.emit("series.csv", lambda p: write_series_csv(series, p))
    seq, reports = _analysis(series, spec)
    _write_analysis(writer, seq, reports)
    maps = _frm_maps(series, spec, seq, reports)
    try:
        maps.append(maxima_frm(series, sign_split=spec["frm"]["sign_split"]))
    except OrdmapsError:
        pass  # too few maxima is not fatal for the partition pipeline
    _write_frm(writer, maps)
    _write_levels(writer, seq, reports, spec)
    _write_embedding(writer, series, spec, seq, reports)


_RUNNERS = {
    "generate": _run_generate,
    "analyze": _run_analyze,
    "frm": _run_frm,
    "levels": _run_levels,
    "embed": _run_embed,
    "pipeline": _run_pipeline,
}


def _execute(spec: dict, out_dir_arg) -> int:
    series = _realize_input(spec)
    out_dir = (
        Path(out_dir_arg)
        if out_dir_arg
        else Path("runs") / manifest_digest(spec)[:12]
    )
    writer = _RunWriter(out_dir)
    try:
        _RUNNERS[spec["command"]](spec, series, writer)
        spec["outputs"] = sorted(p.name for p in writer.written)
        writer.emit(
            "manifest.json",
            lambda p: write_manifest(spec, p),
        )
    except BaseException:
        writer.cleanup()
        raise
    print(out_dir)
    return 0


# ------------------------------------------------------------ arguments


def _add_output_arg(p):
    p.add_argument("--out-dir", default=None, help="output directory (default runs/<digest>)")


def _add_input_args(p):
    p.add_argument("input", help="series file (one value per row)")
    p.add_argument("--format", choices=("csv", "whitespace"), default="csv")
    p.add_argument("--dt", type=float, default=None, help="sample interval if not in the file header")


def _add_sim_args(p):
    p.add_argument("--dt", type=float, default=None, help="integration step (default 0.01)")
    p.add_argument("--points", type=int, default=1_000_000, help="total integrated points")
    p.add_argument("--discard", type=float, default=0.9, help="leading fraction dropped as transient")
    p.add_argument("--seed", type=int, default=None, help="seed for a random initial state")
    p.add_argument(
        "--initial-state",
        default=None,
        help="comma-separated initial state, e.g. '1,1,1'",
    )


def _add_window_args(p):
    p.add_argument("--m", type=int, default=4, help="samples per window")
    p.add_argument("--tau", type=int, default=None, help="sample spacing inside a window (default 6, or derived from --lag)")
    p.add_argument("--w", type=int, default=1, help="window slide")
    p.add_argument("--ranking", choices=("chronological", "amplitude"), default="chronological")


def _add_sub_args(p):
    p.add_argument("--sub-m", type=int, default=3, help="sub-series window size")
    p.add_argument("--sub-tau", type=int, default=1)
    p.add_argument("--sub-w", type=int, default=1)


def _add_level_args(p):
    p.add_argument("--gap-fraction", type=float, default=0.15, help="gap share of the top entropy that separates levels")
    p.add_argument("--max-levels", type=int, default=3)


def _add_embed_args(p, require: bool = False):
    p.add_argument("--dim", type=int, default=None, required=require, help="embedding dimension")
    p.add_argument("--lag", type=int, default=None, required=require, help="embedding lag in samples")


def _parse_initial_state(text):
    if text is None:
        return None
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise ConfigError(f"cannot parse initial state {text!r}") from None


def _sim_spec(args) -> dict:
    return {
        "dt": args.dt if args.dt is not None else 0.01,
        "total_points": args.points,
        "discard_fraction": args.discard,
        "initial_state": _parse_initial_state(args.initial_state),
        "seed": args.seed,
    }


def _system_params_spec(system: str, args) -> dict:
    if system == "lorenz":
        return {"sigma": args.sigma, "rho": args.rho, "beta": args.beta}
    if system == "rossler":
        return {"alpha": args.alpha, "beta": args.beta, "gamma": args.gamma}
    return {
        "beta": args.beta,
        "gamma": args.gamma,
        "delay": args.delay,
        "exponent": args.exponent,
        "history_value": args.history_value,
    }


def _file_input_spec(args) -> dict:
    return {
        "kind": "file",
        "path": str(Path(args.input).resolve()),
        "format": args.format,
        "dt": args.dt,
    }


def _window_spec(args, system: str | None = None) -> dict:
    tau = args.tau
    if tau is None:
        lag = getattr(args, "lag", None)
        dim = getattr(args, "dim", None)
        if lag is not None:
            dims = dim if dim is not None else _DEFAULT_EMBEDDING.get(system or "", (3, None))[0]
            tau = window_from_embedding(EmbeddingConfig(dim=dims, lag=lag), args.m).tau
        else:
            tau = 6
    return {"m": args.m, "tau": tau, "w": args.w, "ranking": args.ranking}


def _sub_spec(args) -> dict:
    return {"m": args.sub_m, "tau": args.sub_tau, "w": args.sub_w}


def _level_spec(args) -> dict:
    return {"gap_fraction": args.gap_fraction, "max_levels": args.max_levels}


def _embedding_spec(args, system: str | None) -> dict:
    dim, lag = args.dim, args.lag
    if dim is None or lag is None:
        default = _DEFAULT_EMBEDDING.get(system or "", (3, 9))
        dim = dim if dim is not None else default[0]
        lag = lag if lag is not None else default[1]
    return {"dim": dim, "lag": lag, "color": getattr(args, "color", "pattern")}


# ------------------------------------------------------------- commands


def _cmd_generate(args) -> int:
    spec = {
        "command": "generate",
        "version": TOOL_VERSION,
        "input": {
            "kind": args.system,
            "params": _system_params_spec(args.system, args),
            "sim": _sim_spec(args),
        },
    }
    return _execute(spec, args.out_dir)


def _cmd_analyze(args) -> int:
    spec = {
        "command": "analyze",
        "version": TOOL_VERSION,
        "input": _file_input_spec(args),
        "window": _window_spec(args),
        "subseries": _sub_spec(args),
        "levels": _level_spec(args),
    }
    return _execute(spec, args.out_dir)


def _cmd_frm(args) -> int:
    modes = [args.pattern is not None, args.level is not None, args.maxima]
    if sum(modes) != 1:
        raise ConfigError("choose exactly one of --pattern, --level, --maxima")
    if args.pattern is not None:
        frm = {"mode": "pattern", "patterns": args.pattern, "by": args.by, "sign_split": False}
    elif args.level is not None:
        frm = {"mode": "level", "level": args.level, "by": args.by, "sign_split": False}
    else:
        frm = {"mode": "maxima", "by": args.by, "sign_split": args.sign_split}
    spec = {
        "command": "frm",
        "version": TOOL_VERSION,
        "input": _file_input_spec(args),
        "window": _window_spec(args),
        "subseries": _sub_spec(args),
        "levels": _level_spec(args),
        "frm": frm,
    }
    return _execute(spec, args.out_dir)


def _cmd_levels(args) -> int:
    spec = {
        "command": "levels",
        "version": TOOL_VERSION,
        "input": _file_input_spec(args),
        "window": _window_spec(args),
        "subseries": _sub_spec(args),
        "levels": _level_spec(args),
        "level_network": {"by": args.by, "per_entry": args.per_entry},
    }
    return _execute(spec, args.out_dir)


def _cmd_embed(args) -> int:
    spec = {
        "command": "embed",
        "version": TOOL_VERSION,
        "input": _file_input_spec(args),
        "window": _window_spec(args),
        "subseries": _sub_spec(args),
        "levels": _level_spec(args),
        "level_network": {"by": args.by, "per_entry": False},
        "embedding": _embedding_spec(args, None),
    }
    return _execute(spec, args.out_dir)


def _cmd_pipeline(args) -> int:
    if args.source in SYSTEMS:
        system = args.source
        input_spec = {
            "kind": system,
            "params": _default_system_params(system),
            "sim": _sim_spec(args),
        }
    else:
        system = None
        path = Path(args.source)
        input_spec = {
            "kind": "file",
            "path": str(path.resolve()),
            "format": args.format,
            "dt": args.dt,
        }
    spec = {
        "command": "pipeline",
        "version": TOOL_VERSION,
        "input": input_spec,
        "window": _window_spec(args, system),
        "subseries": _sub_spec(args),
        "levels": _level_spec(args),
        "frm": {"mode": "level", "level": args.frm_level, "by": args.by, "sign_split": args.sign_split},
        "level_network": {"by": args.by, "per_entry": args.per_entry},
        "embedding": _embedding_spec(args, system),
    }
    return _execute(spec, args.out_dir)


def _default_system_params(system: str) -> dict:
    if system == "lorenz":
        p = LorenzParams()
        return {"sigma": p.sigma, "rho": p.rho, "beta": p.beta}
    if system == "rossler":
        p = RosslerParams()
        return {"alpha": p.alpha, "beta": p.beta, "gamma": p.gamma}
    p = MackeyGlassParams()
    return {
        "beta": p.beta,
        "gamma": p.gamma,
        "delay": p.delay,
        "exponent": p.exponent,
        "history_value": p.history_value,
    }


def _cmd_rerun(args) -> int:
    spec = load_manifest(args.manifest)
    spec.pop("manifest_sha256", None)
    spec.pop("outputs", None)
    command = spec.get("command")
    if command not in _RUNNERS:
        raise ConfigError(f"manifest names unknown command {command!r}")
    return _execute(spec, args.out_dir)


# -------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordmaps",
        description="First return maps from ordinal partitions of scalar series.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="integrate a benchmark system")
    gen_sub = gen.add_subparsers(dest="system", required=True)
    g_lor = gen_sub.add_parser("lorenz")
    g_lor.add_argument("--sigma", type=float, default=10.0)
    g_lor.add_argument("--rho", type=float, default=28.0)
    g_lor.add_argument("--beta", type=float, default=8.0 / 3.0)
    g_ros = gen_sub.add_parser("rossler")
    g_ros.add_argument("--alpha", type=float, default=0.2)
    g_ros.add_argument("--beta", type=float, default=0.2)
    g_ros.add_argument("--gamma", type=float, default=9.0)
    g_mg = gen_sub.add_parser("mackey-glass")
    g_mg.add_argument("--beta", type=float, default=2.0)
    g_mg.add_argument("--gamma", type=float, default=1.0)
    g_mg.add_argument("--delay", type=float, default=2.0)
    g_mg.add_argument("--exponent", type=float, default=9.65)
    g_mg.add_argument("--history-value", type=float, default=0.5)
    for p in (g_lor, g_ros, g_mg):
        _add_sim_args(p)
        _add_output_arg(p)
        p.set_defaults(func=_cmd_generate)

    ana = sub.add_parser("analyze", help="per-partition entropy report")
    _add_input_args(ana)
    _add_window_args(ana)
    _add_sub_args(ana)
    _add_level_args(ana)
    _add_output_arg(ana)
    ana.set_defaults(func=_cmd_analyze)

    frm = sub.add_parser("frm", help="first return maps")
    _add_input_args(frm)
    _add_window_args(frm)
    _add_sub_args(frm)
    _add_level_args(frm)
    frm.add_argument("--pattern", action="append", default=None, help="dash-joined pattern; repeatable")
    frm.add_argument("--level", type=int, default=None, help="all partitions of this entropy level")
    frm.add_argument("--maxima", action="store_true", help="local-maxima baseline map")
    frm.add_argument("--sign-split", action="store_true", help="tag maxima by amplitude sign")
    frm.add_argument("--by", choices=tuple(_BY_CHOICES), default="transition")
    _add_output_arg(frm)
    frm.set_defaults(func=_cmd_frm)

    lev = sub.add_parser("levels", help="level sequence and transition network")
    _add_input_args(lev)
    _add_window_args(lev)
    _add_sub_args(lev)
    _add_level_args(lev)
    lev.add_argument("--by", choices=tuple(_BY_CHOICES), default="transition")
    lev.add_argument("--per-entry", action="store_true", help="count transitions between entry events only")
    _add_output_arg(lev)
    lev.set_defaults(func=_cmd_levels)

    emb = sub.add_parser("embed", help="time-delay embedding export")
    _add_input_args(emb)
    _add_embed_args(emb, require=True)
    emb.add_argument("--color", choices=("pattern", "level", "none"), default="pattern")
    _add_window_args(emb)
    _add_sub_args(emb)
    _add_level_args(emb)
    emb.add_argument("--by", choices=tuple(_BY_CHOICES), default="transition")
    _add_output_arg(emb)
    emb.set_defaults(func=_cmd_embed)

    pipe = sub.add_parser("pipeline", help="full analysis in one run")
    pipe.add_argument("source", help=f"one of {', '.join(SYSTEMS)} or a series file")
    pipe.add_argument("--format", choices=("csv", "whitespace"), default="csv")
    _add_sim_args(pipe)
    _add_window_args(pipe)
    _add_sub_args(pipe)
    _add_level_args(pipe)
    _add_embed_args(pipe)
    pipe.add_argument("--color", choices=("pattern", "level", "none"), default="pattern")
    pipe.add_argument("--frm-level", type=int, default=1, help="entropy level whose partitions get FRMs")
    pipe.add_argument("--sign-split", action="store_true")
    pipe.add_argument("--by", choices=tuple(_BY_CHOICES), default="transition")
    pipe.add_argument("--per-entry", action="store_true")
    _add_output_arg(pipe)
    pipe.set_defaults(func=_cmd_pipeline)

    rer = sub.add_parser("rerun", help="replay a run from its manifest")
    rer.add_argument("manifest", help="path to a manifest.json")
    _add_output_arg(rer)
    rer.set_defaults(func=_cmd_rerun)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OrdmapsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
