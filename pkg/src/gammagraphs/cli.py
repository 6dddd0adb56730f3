"""Command-line surface.

Exit codes: 0 success, 1 fixture verification failure, 2 usage or
precondition error, 3 work/node budget exhausted.  All documents are emitted
as JSON with a stable field order, so identical invocations are
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify, enumerate_connected_graphs, report_summary, report_to_json
from .clutters import clutter_from_json, clutter_to_json, validate_clutter
from .domination import DEFAULT_WORK_LIMIT, min_dominating_sets, result_to_json
from .errors import UnsupportedSizeError, WorkLimitExceeded
from .fixtures import run_fixture_checks
from .gammagraph import build_gamma_graph, gamma_graph_to_json
from .graphs import make_family, parse_graph6, read_graph6_lines, write_graph6
from .labelling import SearchBudget, find_labelling, outcome_to_json
from .realizer import realize, realized_to_json, verify_realization

EXIT_OK = 0
EXIT_FIXTURE_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(doc, out_path: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _input_graphs(args) -> list:
    if getattr(args, "graph6", None):
        return [parse_graph6(args.graph6)]
    with open(args.infile, encoding="ascii") as fh:
        graphs = read_graph6_lines(fh.read())
    if not graphs:
        raise ValueError(f"no graph6 words found in {args.infile}")
    return graphs


def _input_family(args):
    if getattr(args, "sets", None):
        members = []
        for chunk in args.sets.split(","):
            chunk = chunk.strip()
            if not chunk.isdigit():
                raise ValueError(f"--sets expects comma-separated digit strings, got {chunk!r}")
            members.append(frozenset(int(ch) for ch in chunk))
        ground = max((max(m) for m in members if m), default=0)
        return validate_clutter(ground, members)
    with open(args.sets_file, encoding="ascii") as fh:
        return clutter_from_json(json.load(fh))


def _budget(args) -> SearchBudget:
    return SearchBudget(k_max=args.k_max, node_limit=args.node_limit)


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="inline graph6 word")
    src.add_argument("--in", dest="infile", help="file of graph6 words, one per line")


def _add_set_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--sets", help="comma-separated digit strings, e.g. 123,124")
    src.add_argument("--sets-file", help='JSON file {"n": ..., "members": [[...], ...]}')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammagraphs",
        description="domination families, gamma-graphs, blockers, realizations, "
        "labellings, and small-graph classification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="domination number and all minimum sets")
    p.add_argument("--d", type=int, required=True)
    _add_graph_source(p)
    p.add_argument("--node-limit", type=int, default=DEFAULT_WORK_LIMIT)
    p.add_argument("--out")

    p = sub.add_parser("gammagraph", help="build the gamma-graph")
    p.add_argument("--d", type=int, required=True)
    _add_graph_source(p)
    p.add_argument("--node-limit", type=int, default=DEFAULT_WORK_LIMIT)
    p.add_argument("--out")

    p = sub.add_parser("realize", help="graph whose minimum dominating sets are the given family")
    p.add_argument("--d", type=int, required=True)
    _add_set_source(p)
    p.add_argument("--verify", action="store_true", help="re-enumerate and check the result")
    p.add_argument("--out")

    p = sub.add_parser("blocker", help="minimal transversals of a set family")
    _add_set_source(p)
    p.add_argument("--out")

    p = sub.add_parser("label", help="search for a valid vertex labelling")
    _add_graph_source(p)
    p.add_argument("--k-max", type=int, default=None, help="largest label size tried (default: max(2, n))")
    p.add_argument("--node-limit", type=int, default=10**8)
    p.add_argument("--out")

    p = sub.add_parser("classify", help="labellability classification of a graph batch")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--max-n", type=int, help="classify all connected graphs with 1..N vertices")
    src.add_argument("--in", dest="infile", help="file of graph6 words")
    p.add_argument("--k-max", type=int, default=None, help="largest label size tried (default: max(2, n))")
    p.add_argument("--node-limit", type=int, default=10**8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    p = sub.add_parser("family", help="construct a named graph family member")
    p.add_argument("name", help="path|cycle|complete|complete-bipartite|wheel|fan|prism|hypercube")
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--out")

    p = sub.add_parser("verify-fixtures", help="run the bundled reference fixtures")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--out")

    return parser


def _run_gamma(args) -> int:
    docs = [
        result_to_json(g, min_dominating_sets(g, args.d, work_limit=args.node_limit))
        for g in _input_graphs(args)
    ]
    _emit(docs[0] if args.graph6 else docs, args.out)
    return EXIT_OK


def _run_gammagraph(args) -> int:
    docs = []
    for g in _input_graphs(args):
        gg = build_gamma_graph(g, args.d, work_limit=args.node_limit)
        docs.append(gamma_graph_to_json(g, gg))
    _emit(docs[0] if args.graph6 else docs, args.out)
    return EXIT_OK


def _run_realize(args) -> int:
    family = _input_family(args)
    realized = realize(family, args.d)
    doc = realized_to_json(realized, family)
    if args.verify:
        report = verify_realization(realized, family)
        doc["verified"] = report.ok
        if not report.ok:
            doc["missing"] = [list(m) for m in report.missing]
            doc["extra"] = [list(e) for e in report.extra]
    _emit(doc, args.out)
    return EXIT_OK


def _run_blocker(args) -> int:
    from .clutters import blocker as blocker_of

    _emit(clutter_to_json(blocker_of(_input_family(args))), args.out)
    return EXIT_OK


def _run_label(args) -> int:
    graphs = _input_graphs(args)
    docs = []
    exhausted = False
    for g in graphs:
        outcome = find_labelling(g, _budget(args))
        exhausted = exhausted or outcome.status == "budget_exhausted"
        docs.append(outcome_to_json(g, outcome))
    _emit(docs[0] if args.graph6 else docs, args.out)
    return EXIT_BUDGET if exhausted else EXIT_OK


def _run_classify(args) -> int:
    if args.max_n is not None:
        graphs = []
        for n in range(1, args.max_n + 1):
            graphs.extend(enumerate_connected_graphs(n))
    else:
        graphs = _input_graphs(args)
    report = classify(graphs, _budget(args), jobs=args.jobs)
    _emit(report_to_json(report), args.out)
    print(report_summary(report), file=sys.stderr)
    return EXIT_OK


def _run_family(args) -> int:
    g = make_family(args.name, *args.params)
    doc = {
        "family": args.name,
        "params": args.params,
        "vertices": g.n,
        "edges": g.edge_count,
        "names": list(g.names),
    }
    if g.n <= 62:
        doc["graph6"] = write_graph6(g)
    _emit(doc, args.out)
    return EXIT_OK


def _run_verify_fixtures(args) -> int:
    results = run_fixture_checks(seed=args.seed)
    doc = {"seed": args.seed, "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results]}
    _emit(doc, args.out)
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status} {r.name}", file=sys.stderr)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FIXTURE_FAILURE


_HANDLERS = {
    "gamma": _run_gamma,
    "gammagraph": _run_gammagraph,
    "realize": _run_realize,
    "blocker": _run_blocker,
    "label": _run_label,
    "classify": _run_classify,
    "family": _run_family,
    "verify-fixtures": _run_verify_fixtures,
}


def run(argv: list[str]) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except WorkLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, UnsupportedSizeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
