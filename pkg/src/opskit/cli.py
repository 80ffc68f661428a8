"""``opskit`` command-line front end.

Exit status: 0 on success, 1 when the input is well formed but the problem
has no answer (disconnected graph, degenerate rank matrix, ...), 2 on usage
and parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from . import __version__
from .algorithms import (
    FlowNetwork,
    enumerate_spanning_trees_min,
    knapsack_01,
    kruskal_mst,
    max_flow,
    prim_mst,
    shortest_path,
)
from .errors import DomainError, InputError
from .graph import format_weight
from .io import (
    parse_graph_file,
    parse_knapsack_file,
    parse_network_file,
    parse_rank_csv,
    parse_score_csv,
    read_input,
)
from .report import ResultReport, digest, display
from .stats import aggregate_scores, chi_square_critical, fisher_angular_test, kendall_w
from .stats.concordance import DEFAULT_ALPHA as CONCORDANCE_ALPHA
from .stats.fisher import DEFAULT_ALPHA as FISHER_ALPHA

GRAPH_FORMAT = """\
graph file format:
  first line 'n <vertex count>', then one undirected edge per line as
  'u v w' (1-based vertex ids, nonnegative decimal weight). Lines starting
  with '#' are comments. Parallel edges and self-loops are rejected.
"""

NETWORK_FORMAT = """\
network file format:
  first line 'n <vertex count>', then one directed arc per line as
  'tail head capacity'. Parallel arcs add up. With --undirected the file is
  read as a graph file and every edge carries its weight in both directions.
"""

KNAPSACK_FORMAT = """\
knapsack file format:
  first line 'capacity <C>' (nonnegative integer), then one item per line
  as 'weight value' (integer weight, nonnegative value).
"""

RANK_FORMAT = """\
rank CSV format:
  header row of object ids, then one comma-separated row of integer ranks
  1..n per expert. Rows with repeated ranks are reported as tie warnings.
"""

SCORE_FORMAT = """\
score CSV format:
  header row of indicator names, then one row of scores in 0..3 per expert.
  Optional rows 'weight,w1,...,wk' (positive weights, default 1) and
  'mean,m1,...,mk' (per-indicator means, used when no expert rows exist).
"""


def _verdict(flag: bool) -> str:
    return "SIGNIFICANT" if flag else "NOT SIGNIFICANT"


def _emit(args, report: ResultReport, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_mst(args) -> None:
    source = read_input(args.file)
    g = parse_graph_file(source)
    if args.algo == "prim":
        res = prim_mst(g, args.start)
    elif args.algo == "kruskal":
        res = kruskal_mst(g)
    else:
        res = enumerate_spanning_trees_min(g)
    report = ResultReport(
        kind=f"mst/{args.algo}",
        input_digest=digest(source),
        result={
            "edges": [[u, v, g.weight(u, v)] for u, v in res.pairs],
            "total_weight": res.total_weight,
        },
        display={"total_weight": format_weight(res.total_weight)},
    )
    lines = [f"minimum spanning tree ({args.algo}), {len(res.pairs)} edges:"]
    lines += [f"  {u} - {v}  weight {format_weight(g.weight(u, v))}" for u, v in res.pairs]
    lines.append(f"total weight: {format_weight(res.total_weight)}")
    _emit(args, report, "\n".join(lines))


def cmd_shortest_path(args) -> None:
    source = read_input(args.file)
    g = parse_graph_file(source)
    path, dist = shortest_path(g, args.source, args.target)
    report = ResultReport(
        kind="shortest-path",
        input_digest=digest(source),
        result={"source": args.source, "target": args.target, "path": path, "distance": dist},
        display={"distance": format_weight(dist)},
    )
    text = f"path: {' -> '.join(map(str, path))}\ndistance: {format_weight(dist)}"
    _emit(args, report, text)


def cmd_max_flow(args) -> None:
    source = read_input(args.file)
    if args.undirected:
        net = FlowNetwork.from_undirected(parse_graph_file(source))
    else:
        net = parse_network_file(source)
    res = max_flow(net, args.source, args.sink)
    cut = sorted(res.cut)
    cut_cap = net.cut_capacity(res.cut)
    report = ResultReport(
        kind="max-flow",
        input_digest=digest(source),
        result={"value": res.value, "cut": cut, "cut_capacity": cut_cap},
        display={"value": format_weight(res.value)},
        verdicts={"certificate_ok": cut_cap == res.value},
    )
    text = (
        f"max flow: {format_weight(res.value)}\n"
        f"min cut (source side): {{{', '.join(map(str, cut))}}}\n"
        f"cut capacity: {format_weight(cut_cap)}"
    )
    _emit(args, report, text)


def cmd_knapsack(args) -> None:
    source = read_input(args.file)
    items, capacity = parse_knapsack_file(source)
    best, chosen = knapsack_01(items, capacity)
    picked = sorted(i + 1 for i in chosen)
    weight = sum(items[i - 1][0] for i in picked)
    report = ResultReport(
        kind="knapsack",
        input_digest=digest(source),
        result={"best_value": best, "chosen": picked, "weight": weight, "capacity": capacity},
        display={"best_value": format_weight(best)},
    )
    text = (
        f"best value: {format_weight(best)}\n"
        f"items (1-based): {', '.join(map(str, picked)) or 'none'}\n"
        f"weight used: {weight} of {capacity}"
    )
    _emit(args, report, text)


def cmd_concordance(args) -> None:
    source = read_input(args.file)
    r = parse_rank_csv(source)
    res = kendall_w(r, args.alpha, tie_correction=args.tie_correction)
    warnings = [str(w) for w in res.tie_warnings]
    report = ResultReport(
        kind="concordance",
        input_digest=digest(source),
        result={
            "m": res.m,
            "n": res.n,
            "rank_sums": list(res.rank_sums),
            "s": res.s,
            "w": res.w,
            "chi_square": res.chi_square,
            "df": res.df,
            "alpha": res.alpha,
            "critical": res.critical,
            "tie_corrected": res.tie_corrected,
            "tie_warnings": warnings,
        },
        display={
            "w": display(res.w, 3),
            "chi_square": display(res.chi_square),
            "critical": display(res.critical),
        },
        verdicts={"significant": res.significant},
    )
    lines = [
        f"experts m = {res.m}, objects n = {res.n}",
        f"S = {display(res.s)}",
        f"W = {display(res.w, 3)}",
        f"chi-square = {display(res.chi_square)} (df = {res.df})",
        f"critical value at alpha = {res.alpha:g}: {display(res.critical)}",
        f"verdict: {_verdict(res.significant)}",
    ]
    lines += [f"warning: {w}" for w in warnings]
    _emit(args, report, "\n".join(lines))


def cmd_aggregate(args) -> None:
    sources = [read_input(f) for f in args.files]
    reports = []
    lines = []
    for path, source in zip(args.files, sources):
        agg = aggregate_scores(parse_score_csv(source))
        reports.append(
            {
                "file": path,
                "indicators": list(agg.names),
                "means": list(agg.means),
                "weights": list(agg.weights),
                "group_mean": agg.group_mean,
            }
        )
        lines.append(f"{path}:")
        lines += [f"  {name}: {display(mean)}" for name, mean in zip(agg.names, agg.means)]
        lines.append(f"  group mean: {display(agg.group_mean)}")
    report = ResultReport(
        kind="aggregate",
        input_digest=digest("\0".join(sources)),
        result={"groups": reports},
        display={r["file"]: display(r["group_mean"]) for r in reports},
    )
    _emit(args, report, "\n".join(lines))


def cmd_fisher(args) -> None:
    res = fisher_angular_test(args.p1, args.n1, args.p2, args.n2, args.alpha)
    params = f"p1={args.p1!r} n1={args.n1} p2={args.p2!r} n2={args.n2} alpha={args.alpha!r}"
    report = ResultReport(
        kind="fisher",
        input_digest=digest(params),
        result={
            "p1": res.p1,
            "n1": res.n1,
            "p2": res.p2,
            "n2": res.n2,
            "phi1": res.phi1,
            "phi2": res.phi2,
            "phi_emp": res.phi_emp,
            "alpha": res.alpha,
            "phi_crit": res.phi_crit,
        },
        display={"phi_emp": display(res.phi_emp), "phi_crit": display(res.phi_crit)},
        verdicts={"significant": res.significant},
    )
    text = (
        f"phi1 = {res.phi1:.4f}, phi2 = {res.phi2:.4f}\n"
        f"phi_emp = {display(res.phi_emp)}\n"
        f"phi_crit (alpha = {res.alpha:g}) = {display(res.phi_crit)}\n"
        f"verdict: {_verdict(res.significant)}"
    )
    _emit(args, report, text)


def cmd_chi2_critical(args) -> None:
    x = chi_square_critical(args.df, args.alpha)
    report = ResultReport(
        kind="chi2-critical",
        input_digest=digest(f"df={args.df} alpha={args.alpha!r}"),
        result={"df": args.df, "alpha": args.alpha, "critical": x},
        display={"critical": display(x, 3)},
    )
    _emit(args, report, f"chi-square critical value (df = {args.df}, alpha = {args.alpha:g}): {x:.4f}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format (default: text)")

    parser = argparse.ArgumentParser(prog="opskit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, func: Callable, help: str, epilog: str | None = None) -> argparse.ArgumentParser:
        p = sub.add_parser(
            name,
            parents=[common],
            help=help,
            description=help,
            epilog=epilog,
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        p.set_defaults(func=func)
        return p

    p = add("mst", cmd_mst, "minimum spanning tree of an undirected graph", GRAPH_FORMAT)
    p.add_argument("file", help="graph file")
    p.add_argument("--start", type=int, default=1, help="start vertex for Prim (default: 1)")
    p.add_argument("--algo", choices=("prim", "kruskal", "brute"), default="prim")

    p = add("shortest-path", cmd_shortest_path, "shortest route between two vertices (Dijkstra)", GRAPH_FORMAT)
    p.add_argument("file", help="graph file")
    p.add_argument("source", type=int)
    p.add_argument("target", type=int)

    p = add("max-flow", cmd_max_flow, "maximum flow and minimum cut (Edmonds-Karp)", NETWORK_FORMAT)
    p.add_argument("file", help="network file")
    p.add_argument("source", type=int)
    p.add_argument("sink", type=int)
    p.add_argument("--undirected", action="store_true", help="read a graph file and use each edge both ways")

    p = add("knapsack", cmd_knapsack, "0/1 knapsack by dynamic programming", KNAPSACK_FORMAT)
    p.add_argument("file", help="knapsack file")

    p = add("concordance", cmd_concordance, "Kendall's W with chi-square significance", RANK_FORMAT)
    p.add_argument("file", help="rank CSV")
    p.add_argument("--alpha", type=float, default=CONCORDANCE_ALPHA, help="significance level (default: 0.01)")
    p.add_argument("--tie-correction", action="store_true", help="apply the tied-rank correction to W")

    p = add("aggregate", cmd_aggregate, "per-indicator and weighted group mean scores", SCORE_FORMAT)
    p.add_argument("files", nargs="+", help="score CSV files")

    p = add("fisher", cmd_fisher, "Fisher angular criterion for two proportions")
    p.add_argument("--p1", type=float, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--p2", type=float, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--alpha", type=float, default=FISHER_ALPHA, help="significance level (default: 0.05)")

    p = add("chi2-critical", cmd_chi2_critical, "upper-tail chi-square critical value")
    p.add_argument("--df", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except InputError as exc:
        print(f"opskit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"opskit: cannot read input: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"opskit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # argument values that pass argparse but fail validation (e.g. start vertex 0)
        print(f"opskit: invalid argument: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
