"""Command-line entry point: ``crimnet <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import __version__
from .generators import GeneratorSpec, Model, generate
from .graph import GraphError
from .harness import DEFAULT_REPLICAS, compare
from .io import (OUTPUT_DIR_ENV, SCHEMA_VERSION, ParseError, RunConfig, common_labels, format_float,
                 read_edge_list, normalize_edge_list, summary_to_json, write_comparison,
                 write_degree_series, write_edge_list, write_histogram)
from .harness import summarize
from .metrics import degree_distribution, strength_distribution, weight_distribution
from .paths import CostMode, path_length_distribution, path_length_summary

EXIT_OK, EXIT_USER, EXIT_INTERNAL = 0, 1, 2

MODEL_ALIASES = {
    "er": Model.ER_GNL, "er-gnl": Model.ER_GNL, "gnl": Model.ER_GNL,
    "gilbert": Model.GILBERT_GNP, "gilbert-gnp": Model.GILBERT_GNP, "gnp": Model.GILBERT_GNP,
    "ws": Model.WS, "nws": Model.NWS, "n-ws": Model.NWS, "ba": Model.BA,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(data: bytes, dest: Path | None) -> None:
    if dest is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        dest.parent.mkdir(parents=True, exist_ok=True)
        dest.write_bytes(data)


def _out_dir(args) -> Path | None:
    return RunConfig(inputs=[], output_dir=args.output).output_dir if hasattr(args, "output") else None


def cmd_stats(args) -> int:
    loaded = [(Path(p), *read_edge_list(p)) for p in args.inputs]
    summaries = [(path.stem, summarize(g)) for path, g, _ in loaded]
    common = None
    if len(loaded) == 2:
        common = len(common_labels(loaded[0][2], loaded[1][2]))
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION,
                   "networks": [{"name": name, **summary_to_json(s)} for name, s in summaries]}
        if common is not None:
            payload["common_nodes"] = common
        data = (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode()
    else:
        fields = [("nodes", "node_count"), ("edges", "edge_count"), ("max_weight", "max_weight"),
                  ("max_frequency", "max_weight_frequency"), ("avg_degree", "average_degree"),
                  ("max_shortest_path", "max_shortest_path"), ("components", "component_count")]
        lines = [",".join(["parameter"] + [name for name, _ in summaries])]
        for label, attr in fields:
            vals = [getattr(s, attr) for _, s in summaries]
            lines.append(",".join([label] + [format_float(v) if isinstance(v, float) else str(v) for v in vals]))
        if common is not None:
            lines.append(f"common_nodes,{common}")
        data = ("\n".join(lines) + "\n").encode()
    _emit(data, args.output)
    return EXIT_OK


def cmd_distributions(args) -> int:
    g, _ = read_edge_list(args.input)
    hists = {"degree": degree_distribution(g), "weight": weight_distribution(g),
             "strength": strength_distribution(g)}
    out_dir = _out_dir(args)
    if out_dir is None:
        for name, h in hists.items():
            sys.stdout.write(f"# {name}\n")
            sys.stdout.flush()
            _emit(write_histogram(h, args.format), None)
    else:
        stem = Path(args.input).stem
        for name, h in hists.items():
            _emit(write_histogram(h, args.format), out_dir / f"{stem}_{name}.{args.format}")
    return EXIT_OK


def cmd_paths(args) -> int:
    if args.weighted and args.weighted_mode is None:
        raise UsageError("paths: --weighted requires an explicit --weighted-mode {weight,inverse}")
    g, _ = read_edge_list(args.input)
    mode = CostMode(args.weighted_mode) if args.weighted_mode else CostMode.WEIGHT
    summary = path_length_summary(g, args.weighted, mode)
    binned = not (args.weighted and mode is CostMode.INVERSE)
    hist = path_length_distribution(g, args.weighted, mode).histogram if binned else None
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, "weighted": args.weighted,
                   "mode": mode.value if args.weighted else None,
                   "diameter": summary.diameter, "mean_length": float(format_float(summary.mean_length)),
                   "pair_count": summary.pair_count, "unreachable_pairs": summary.unreachable_pairs}
        if hist is not None:
            payload["histogram"] = json.loads(write_histogram(hist, "json"))
            del payload["histogram"]["schema_version"]
        data = (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode()
    else:
        head = (f"# weighted={str(args.weighted).lower()} mode={mode.value if args.weighted else 'hops'} "
                f"diameter={format_float(float(summary.diameter)) if not binned else summary.diameter} "
                f"mean={format_float(summary.mean_length)} pairs={summary.pair_count} "
                f"unreachable={summary.unreachable_pairs}\n").encode()
        data = head + (write_histogram(hist, "csv") if hist is not None else b"")
    _emit(data, args.output)
    return EXIT_OK


def cmd_generate(args) -> int:
    model = MODEL_ALIASES.get(args.model.lower())
    if model is None:
        raise UsageError(f"generate: unknown model {args.model!r}")
    params = {"l": args.l, "p": args.p, "k": args.k, "m": args.m}
    wanted = {Model.ER_GNL: "l", Model.GILBERT_GNP: "p", Model.WS: "kp", Model.NWS: "kp", Model.BA: "m"}[model]
    missing = [f"--{name}" for name in wanted if params[name] is None]
    if missing:
        raise UsageError(f"generate: model {model.value} requires {', '.join(missing)}")
    extra = [f"--{name}" for name, v in params.items() if v is not None and name not in wanted]
    if extra:
        raise UsageError(f"generate: model {model.value} does not take {', '.join(extra)}")
    spec = GeneratorSpec(model, n=args.n, seed=args.seed, **{k: params[k] for k in wanted})
    _emit(write_edge_list(generate(spec)), args.output)
    return EXIT_OK


def cmd_compare(args) -> int:
    cfg = RunConfig(inputs=[Path(p) for p in args.inputs], replicas=args.replicas, base_seed=args.seed,
                    output_dir=args.output, output_format=args.format, workers=args.workers)
    for path in cfg.inputs:
        g, _ = read_edge_list(path)
        report = compare(g, replicas=cfg.replicas, base_seed=cfg.base_seed, workers=cfg.workers,
                         reference_name=path.stem)
        table = write_comparison(report, cfg.output_format)
        if cfg.output_dir is None:
            if len(cfg.inputs) > 1:
                sys.stdout.write(f"# {path.stem}\n")
                sys.stdout.flush()
            _emit(table, None)
        else:
            _emit(table, cfg.output_dir / f"{path.stem}_comparison.{cfg.output_format}")
            _emit(write_degree_series(report), cfg.output_dir / f"{path.stem}_degree_series.csv")
    return EXIT_OK


def cmd_convert(args) -> int:
    text = Path(args.input).read_text(encoding="utf-8")
    _emit(normalize_edge_list(text).encode(), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="crimnet", description="Weighted network statistics and synthetic-model comparison.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stats", help="summary statistics of one or two edge lists")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("distributions", help="degree, weight and strength histograms")
    p.add_argument("input")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output", type=Path, help=f"output directory (default ${OUTPUT_DIR_ENV} or stdout)")
    p.set_defaults(func=cmd_distributions)

    p = sub.add_parser("paths", help="shortest-path length distribution")
    p.add_argument("input")
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--weighted-mode", choices=[m.value for m in CostMode])
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("generate", help="write one synthetic network as an edge list")
    p.add_argument("--model", required=True, help="er-gnl | gilbert-gnp | ws | nws | ba")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("compare", help="compare a network against the five synthetic models")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--replicas", type=int, default=DEFAULT_REPLICAS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output", type=Path, help=f"output directory (default ${OUTPUT_DIR_ENV} or stdout)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("convert", help="normalize a loose edge list to canonical CSV")
    p.add_argument("input")
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.func(args)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (UsageError, ParseError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
