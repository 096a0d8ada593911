"""Command-line interface.

Subcommands: compute, bounds, rank, compare, generate, sweep, datasets.
Exit codes: 0 success, 1 data error (bad file, disconnected graph, ...),
2 usage error. Every random operation takes --seed (falling back to the
DISTINCT_SEED environment variable) and echoes the seed in its output
header so results can be regenerated exactly.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .baselines import BASELINES, baseline
from .datasets import DATASET_NAMES, builtin_dataset
from .distinctiveness import (
    METRICS,
    CentralityVector,
    all_distinctiveness,
    bounds,
    normalize,
)
from .errors import DCMetricsError
from .generators import GeneratorParams, barabasi_albert
from .graph import Graph, profile
from .io import ResultTable, parse_edge_list, parse_gexf_minimal, write_edge_list
from .stats import correlation_sweep, rank, spearman
from .svgchart import render_line_chart


def _default_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("DISTINCT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise DCMetricsError(f"DISTINCT_SEED must be an integer, got {env!r}") from None
    return 0


def _load_graph(args) -> Graph:
    if getattr(args, "dataset", None):
        return builtin_dataset(args.dataset)
    path = Path(args.input)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DCMetricsError(f"cannot read input file {path}: {exc.strerror or exc}") from None
    if path.suffix.lower() == ".gexf" or text.lstrip().startswith("<"):
        return parse_gexf_minimal(text)
    return parse_edge_list(text)


def _emit(args, text: str) -> None:
    out = getattr(args, "output", None)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_metrics(spec: str) -> tuple[list[str], list[str]]:
    dc: list[str] = []
    base: list[str] = []
    for token in spec.split(","):
        token = token.strip().lower()
        if not token:
            continue
        if token == "dc":
            dc.extend(m for m in METRICS if m not in dc)
        elif token == "baselines":
            base.extend(b for b in BASELINES if b not in base)
        elif token == "all":
            dc.extend(m for m in METRICS if m not in dc)
            base.extend(b for b in BASELINES if b not in base)
        elif token in METRICS:
            if token not in dc:
                dc.append(token)
        elif token in BASELINES:
            if token not in base:
                base.append(token)
        else:
            raise DCMetricsError(
                f"unknown metric {token!r}; choose from {', '.join(METRICS + BASELINES)}, dc, baselines, all"
            )
    if not dc and not base:
        raise DCMetricsError("no metrics requested")
    return dc, base


def _parse_alphas(spec: str) -> list[float]:
    try:
        values = [float(a) for a in spec.split(",") if a.strip()]
    except ValueError:
        raise DCMetricsError(f"bad alpha list {spec!r}") from None
    if not values:
        raise DCMetricsError("alpha list is empty")
    return values


def _directions(graph: Graph, choice: str) -> list[str]:
    if choice == "auto":
        return ["in", "out"] if graph.directed else ["undirected"]
    if choice == "both":
        if not graph.directed:
            raise DCMetricsError("--direction both only applies to directed graphs")
        return ["in", "out"]
    return [choice]


def _single_direction(graph: Graph, choice: str, command: str) -> str:
    """Commands that score one vector need an explicit side on directed input."""
    if choice == "auto":
        if graph.directed:
            raise DCMetricsError(f"directed graph: {command} needs --direction in or --direction out")
        return "undirected"
    return _directions(graph, choice)[0]


def _cmd_compute(args) -> int:
    graph = _load_graph(args)
    dc_names, base_names = _parse_metrics(args.metrics)
    alphas = _parse_alphas(args.alpha)
    directions = _directions(graph, args.direction)
    if args.normalize and base_names:
        raise DCMetricsError("--normalize applies only to d1..d5 (baselines have no analytic bounds)")

    prof = profile(graph)
    vectors: list[CentralityVector] = []
    for direction in directions:
        for a in alphas:
            computed = all_distinctiveness(
                graph, alpha=a, direction=direction, relaxed_alpha=args.relaxed_alpha,
                metrics=tuple(dc_names),
            ) if dc_names else {}
            for name in dc_names:
                vec = computed[name]
                if args.normalize:
                    rec = bounds(name, prof.n, prof.min_weight, prof.max_weight, a,
                                 relaxed_alpha=args.relaxed_alpha)
                    vec = normalize(vec, rec)
                vectors.append(vec)
    for name in base_names:
        vectors.append(baseline(graph, name, weighted=args.weighted))

    table = ResultTable.from_vectors(vectors)
    _emit(args, table.to_json() if args.format == "json" else table.to_csv())
    return 0


def _cmd_bounds(args) -> int:
    rec = bounds(args.metric, args.n, args.min_weight, args.max_weight, args.alpha)
    sys.stdout.write(f"lower={rec.lower:g} upper={rec.upper:g}\n")
    return 0


def _cmd_rank(args) -> int:
    graph = _load_graph(args)
    dc_names, base_names = _parse_metrics(args.metric)
    if len(dc_names) + len(base_names) != 1:
        raise DCMetricsError("rank takes exactly one metric")
    if dc_names:
        direction = _single_direction(graph, args.direction, "rank")
        vec = all_distinctiveness(graph, alpha=args.alpha, direction=direction,
                                  metrics=(dc_names[0],))[dc_names[0]]
    else:
        vec = baseline(graph, base_names[0], weighted=args.weighted)
    ranking = rank(vec, tie_rule=args.tie_rule)
    order = sorted(range(len(ranking.labels)), key=lambda i: (ranking.ranks[i], i))
    lines = ["rank,node,score"]
    for i in order:
        r = ranking.ranks[i]
        r_txt = str(int(r)) if args.tie_rule == "competition" else f"{float(r):g}"
        lines.append(f"{r_txt},{ranking.labels[i]},{vec.values[i]:.6g}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_compare(args) -> int:
    graph = _load_graph(args)
    dc_names, base_names = _parse_metrics(args.metrics)
    vectors: list[CentralityVector] = []
    names: list[str] = []
    if args.input2:
        other = parse_edge_list(Path(args.input2).read_text(encoding="utf-8"))
        if len(dc_names) + len(base_names) != 1:
            raise DCMetricsError("comparing two graphs takes exactly one metric")
        for g, tag in ((graph, "a"), (other, "b")):
            if dc_names:
                direction = _single_direction(g, args.direction, "two-graph compare")
                vec = all_distinctiveness(g, alpha=args.alpha, direction=direction,
                                          metrics=(dc_names[0],))[dc_names[0]]
            else:
                vec = baseline(g, base_names[0], weighted=args.weighted)
            vectors.append(vec)
            names.append(f"{vec.metric}@{tag}")
    else:
        directions = _directions(graph, args.direction)
        for d in directions:
            computed = all_distinctiveness(graph, alpha=args.alpha, direction=d,
                                           metrics=tuple(dc_names)) if dc_names else {}
            for name in dc_names:
                vectors.append(computed[name])
                suffix = f"-{d}" if d != "undirected" else ""
                names.append(f"{name}{suffix}")
        for name in base_names:
            vectors.append(baseline(graph, name, weighted=args.weighted))
            names.append(vectors[-1].metric)
    lines = ["metric," + ",".join(names)]
    for i, vx in enumerate(vectors):
        row = [f"{spearman(vx, vy):.6g}" for vy in vectors]
        lines.append(names[i] + "," + ",".join(row))
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_generate(args) -> int:
    seed = _default_seed(args.seed)
    params = GeneratorParams(
        n=args.n, m_attach=args.m_attach,
        weight_low=args.weight_low, weight_high=args.weight_high, seed=seed,
    )
    graph = barabasi_albert(params)
    header = (
        f"# barabasi-albert n={params.n} m_attach={params.m_attach} "
        f"weights=[{params.weight_low},{params.weight_high}] seed={seed}\n"
    )
    _emit(args, header + write_edge_list(graph))
    return 0


def _cmd_sweep(args) -> int:
    seed = _default_seed(args.seed)
    params = GeneratorParams(n=args.n, m_attach=args.m_attach,
                             weight_low=args.weight_low, weight_high=args.weight_high)
    alphas = tuple(_parse_alphas(args.alphas))
    sweep = correlation_sweep(params, args.ensemble, alphas, seed=seed)
    lines = [
        f"# sweep seed={seed} ensemble={args.ensemble}",
        f"# generator n={args.n} m_attach={args.m_attach} weights=[{args.weight_low},{args.weight_high}]",
        "dc_metric,baseline,alpha,mean_spearman",
    ]
    for d, b, a, rho in sweep.rows():
        lines.append(f"{d},{b},{a:g},{rho:.6g}")
    _emit(args, "\n".join(lines) + "\n")
    if args.svg:
        series = []
        for d in sweep.dc_metrics:
            for b in sweep.baselines:
                pts = [(a, sweep.mean(d, b, a)) for a in sweep.alphas]
                series.append((f"{d} vs {b}", pts))
        svg = render_line_chart(
            series, title="mean Spearman correlation vs alpha",
            x_label="alpha", y_label="mean Spearman rho",
        )
        Path(args.svg).write_text(svg, encoding="utf-8")
    return 0


def _cmd_datasets(args) -> int:
    if args.export_dir:
        directory = Path(args.export_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for name in DATASET_NAMES:
            (directory / f"{name}.tsv").write_text(
                write_edge_list(builtin_dataset(name)), encoding="utf-8"
            )
        sys.stdout.write(f"exported {len(DATASET_NAMES)} datasets to {directory}\n")
        return 0
    for name in DATASET_NAMES:
        g = builtin_dataset(name)
        kind = "directed" if g.directed else "undirected"
        sys.stdout.write(f"{name}: {g.n} nodes, {g.edge_count} {'arcs' if g.directed else 'edges'}, {kind}\n")
    return 0


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="edge-list or GEXF file")
    src.add_argument("--dataset", choices=DATASET_NAMES, help="built-in dataset")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcmetrics",
        description="Distinctiveness centrality metrics, bounds, baselines, and ensemble analysis.",
    )
    parser.add_argument("--version", action="version", version=f"dcmetrics {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="score nodes with DC metrics and/or baselines")
    _add_graph_source(p)
    p.add_argument("--metrics", default="dc", help="comma list of d1..d5, baseline names, dc, baselines, all")
    p.add_argument("--alpha", default="1", help="comma list of alpha values")
    p.add_argument("--direction", default="auto", choices=("auto", "undirected", "in", "out", "both"))
    p.add_argument("--normalize", action="store_true", help="map DC scores through their analytic bounds")
    p.add_argument("--weighted", action="store_true", help="weighted variants of baseline metrics")
    p.add_argument("--relaxed-alpha", action="store_true", help="allow 0 < alpha < 1")
    p.add_argument("--format", default="csv", choices=("csv", "json"))
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("bounds", help="analytic lower/upper bounds for a metric")
    p.add_argument("--metric", required=True, choices=METRICS)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--min-weight", type=float, default=1.0)
    p.add_argument("--max-weight", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=1.0)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("rank", help="rank nodes under one metric")
    _add_graph_source(p)
    p.add_argument("--metric", required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--direction", default="auto", choices=("auto", "undirected", "in", "out"))
    p.add_argument("--tie-rule", default="competition", choices=("competition", "average"))
    p.add_argument("--weighted", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("compare", help="Spearman correlation matrix of metrics (or of two graphs)")
    _add_graph_source(p)
    p.add_argument("--input2", help="second edge-list file (single-metric two-graph mode)")
    p.add_argument("--metrics", default="dc")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--direction", default="auto", choices=("auto", "undirected", "in", "out"))
    p.add_argument("--weighted", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("generate", help="seeded Barabasi-Albert graph as an edge list")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--m-attach", required=True, type=int)
    p.add_argument("--weight-low", type=int, default=1)
    p.add_argument("--weight-high", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("sweep", help="mean DC/baseline correlation across a BA ensemble, per alpha")
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--m-attach", type=int, default=2)
    p.add_argument("--weight-low", type=int, default=1)
    p.add_argument("--weight-high", type=int, default=20)
    p.add_argument("--ensemble", type=int, default=100)
    p.add_argument("--alphas", default="1,2,5")
    p.add_argument("--seed", type=int)
    p.add_argument("--svg", help="also render the sweep as an SVG line chart")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("datasets", help="list or export the built-in datasets")
    p.add_argument("--export-dir", help="write each dataset as an edge-list file into this directory")
    p.set_defaults(func=_cmd_datasets)

    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DCMetricsError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
