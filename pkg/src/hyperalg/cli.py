"""Command-line front end.

Exit codes: 0 success (all checks pass), 1 verification failure, 2 usage
or parse error, 3 construction incompatible with the algebra, 4 a size or
search guard tripped.  All output except the elapsed time printed by
``smallest-n`` is byte-deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .algebra import GuardExceeded, SpecParseError, from_spec
from .constructions import (
    HYPERGRAPH_KINDS,
    IncompatibleKindError,
    build_hypergraph,
)
from .hypergraph import (
    DEFAULT_NODE_BUDGET,
    Hypergraph,
    SearchBudgetExceeded,
    connected_components,
    is_connected,
)
from .numtheory import (
    CHAIN_MATERIALIZE_LIMIT,
    chain_edge_cardinality,
    count_maximal_chains,
    factorize,
    maximal_chains,
    smallest_n_exceeding_chain_count,
)
from .verify import run_theorems, theorem_ids


def _hypergraph_payload(algebra: str, kind: str, h: Hypergraph) -> dict:
    return {
        "kind": kind,
        "algebra": algebra,
        "vertices": list(h.labels),
        "edges": [list(e) for e in h.edges],
    }


def _print_json(payload) -> None:
    print(json.dumps(payload, separators=(",", ":")))


def _build(args) -> Hypergraph:
    return build_hypergraph(from_spec(args.spec), args.kind)


def cmd_build(args) -> int:
    _print_json(_hypergraph_payload(args.spec, args.kind, _build(args)))
    return 0


def cmd_analyze(args) -> int:
    h = _build(args)
    components = connected_components(h)
    stats = {
        "kind": args.kind,
        "algebra": args.spec,
        "vertex_count": h.vertex_count,
        "edge_count": len(h.edges),
        "degree_sequence": list(h.degree_sequence()),
        "edge_sizes": list(h.edge_sizes()),
        "uniform": h.uniform_size(),
        "regular": h.is_regular(),
        "connected": is_connected(h),
        "components": components.count,
    }
    if args.json:
        _print_json(stats)
        return 0
    for field in ("kind", "algebra", "vertex_count", "edge_count"):
        print(f"{field}: {stats[field]}")
    print("degree_sequence: " + " ".join(map(str, stats["degree_sequence"])))
    print("edge_sizes: " + " ".join(map(str, stats["edge_sizes"])))
    uniform = stats["uniform"]
    print(f"uniform: {'no' if uniform is None else f'k={uniform}'}")
    print(f"regular: {'yes' if stats['regular'] else 'no'}")
    print(f"connected: {'yes' if stats['connected'] else 'no'}")
    print(f"components: {stats['components']}")
    return 0


def cmd_verify(args) -> int:
    idents = None if args.theorem == "all" else [args.theorem]
    registry = args.registry.split(",") if args.registry else None
    verdicts = run_theorems(idents, registry_names=registry,
                            max_n=args.max_n, budget=args.budget)
    failures = sum(1 for v in verdicts if v.status == "fail")
    if args.json:
        _print_json([v.__dict__ for v in verdicts])
        return 1 if failures else 0
    for v in verdicts:
        line = f"{v.status.upper():<4} {v.theorem}  {v.subject}"
        if v.detail:
            line += f"  [{v.detail}]"
        print(line)
    passes = sum(1 for v in verdicts if v.status == "pass")
    skips = sum(1 for v in verdicts if v.status == "skip")
    print(f"{len(verdicts)} checks: {passes} pass, {failures} fail, "
          f"{skips} skip")
    return 1 if failures else 0


def cmd_chains(args) -> int:
    n = args.n
    count = count_maximal_chains(n)
    if count > CHAIN_MATERIALIZE_LIMIT:
        if args.json:
            _print_json({"n": n, "count": count, "chains": None,
                         "sizes": None})
        else:
            print(f"n: {n}")
            print(f"count: {count}")
            print(f"chains not materialized (limit {CHAIN_MATERIALIZE_LIMIT})")
        return 0
    chains = maximal_chains(n)
    sizes = [chain_edge_cardinality(c) for c in chains]
    if args.json:
        _print_json({"n": n, "count": count,
                     "chains": [list(c) for c in chains], "sizes": sizes})
        return 0
    print(f"n: {n}")
    print(f"count: {count}")
    for chain, size in zip(chains, sizes):
        print("chain: " + " ".join(map(str, chain)) + f"  size: {size}")
    return 0


def _factored(n: int) -> str:
    return " * ".join(
        f"{p}^{a}" if a > 1 else str(p) for p, a in factorize(n))


def cmd_smallest_n(args) -> int:
    start = time.perf_counter()
    result = smallest_n_exceeding_chain_count(args.bound)
    elapsed = time.perf_counter() - start
    if args.json:
        _print_json({
            "bound": args.bound,
            "result": result,
            "factored": _factored(result) if result else None,
            "elapsed_seconds": round(elapsed, 3),
        })
        return 0
    print(f"bound: {args.bound}")
    if result is None:
        print("result: none")
    else:
        print(f"result: {result}")
        print(f"factored: {_factored(result)}")
    print(f"elapsed: {elapsed:.3f}s")
    return 0


def _dot_quote(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(h: Hypergraph, name: str) -> str:
    """Bipartite incidence drawing: element ellipses against edge boxes."""
    lines = [f'graph "{_dot_quote(name)}" {{']
    for v in range(h.vertex_count):
        lines.append(f'  v{v} [shape=ellipse, label="{_dot_quote(h.labels[v])}"];')
    for i in range(len(h.edges)):
        lines.append(f'  e{i} [shape=box, label="e{i}"];')
    for i, edge in enumerate(h.edges):
        for v in edge:
            lines.append(f"  v{v} -- e{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export(args) -> int:
    h = _build(args)
    if args.format == "json":
        text = json.dumps(_hypergraph_payload(args.spec, args.kind, h),
                          separators=(",", ":")) + "\n"
    else:
        text = to_dot(h, f"{args.spec}/{args.kind}")
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_report(args) -> int:
    h = _build(args)
    from .report import write_report

    paths = write_report(h, args.spec, args.kind, args.out_dir)
    for key in ("vertices", "edges", "figure"):
        print(f"{key}: {paths[key]}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperalg",
        description="Hypergraphs of finite groups and semigroups: "
                    "construction, analysis, and claim verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_kind(p):
        p.add_argument("spec", help="algebra expression, e.g. cyclic:8, "
                       "quaternion, product:(cyclic:2),(cyclic:3)")
        p.add_argument("kind", choices=HYPERGRAPH_KINDS,
                       help="hypergraph construction")

    build = sub.add_parser("build", help="print a hypergraph as JSON")
    add_spec_kind(build)
    build.set_defaults(func=cmd_build)

    analyze = sub.add_parser("analyze",
                             help="degrees, uniformity, connectivity")
    add_spec_kind(analyze)
    analyze.add_argument("--json", action="store_true",
                         help="machine-readable output")
    analyze.set_defaults(func=cmd_analyze)

    verify = sub.add_parser("verify",
                            help="run structural checks over the registry")
    verify.add_argument("theorem",
                        help="check id or 'all'; ids: "
                        + ", ".join(theorem_ids()))
    verify.add_argument("--registry", default=None,
                        help="comma-separated algebra expressions "
                        "(default: built-in registry)")
    verify.add_argument("--max-n", type=int, default=300,
                        help="cyclic-group ceiling for chain/hypergraph "
                        "comparisons (default 300)")
    verify.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                        help="node budget for Hamiltonian searches")
    verify.add_argument("--json", action="store_true",
                        help="machine-readable output")
    verify.set_defaults(func=cmd_verify)

    chains = sub.add_parser("chains",
                            help="maximal divisor chains of n with edge sizes")
    chains.add_argument("n", type=int)
    chains.add_argument("--json", action="store_true")
    chains.set_defaults(func=cmd_chains)

    smallest = sub.add_parser("smallest-n",
                              help="least n <= bound with more chains than n")
    smallest.add_argument("bound", type=int)
    smallest.add_argument("--json", action="store_true")
    smallest.set_defaults(func=cmd_smallest_n)

    export = sub.add_parser("export", help="write JSON or DOT")
    add_spec_kind(export)
    export.add_argument("--format", choices=("json", "dot"), default="json")
    export.add_argument("--out", default=None, help="output path "
                        "(default: standard output)")
    export.set_defaults(func=cmd_export)

    report = sub.add_parser("report",
                            help="write CSV tables and a PNG figure")
    add_spec_kind(report)
    report.add_argument("--out-dir", default=".",
                        help="directory for the report files")
    report.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IncompatibleKindError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GuardExceeded, SearchBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
