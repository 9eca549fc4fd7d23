"""Command-line front end.

Subcommands: gen, verify, gamma, turan, lll-table, lll-run, bounds.
Exit codes: 0 success, 1 usage/format error, 2 infeasible, 3 budget
exceeded. '-' as an input path reads the graph from stdin with the format
auto-detected from the first byte.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import exact, graph6, lll, turan
from .errors import BudgetExceededError, DominatorError
from .graph import Graph, generate, parse_edge_list, write_edge_list

SCHEMA = "dominator/1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_BUDGET = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _diag(code: str, message: str):
    print("error: %s: %s" % (code, str(message).replace("\n", " ")),
          file=sys.stderr)


def _read_graph(path: str, fmt: str = "auto") -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    if fmt == "auto":
        stripped = text.lstrip()
        if not stripped:
            raise DominatorError("empty graph input")
        fmt = "edgelist" if stripped[0].isdigit() else "graph6"
    if fmt == "edgelist":
        return parse_edge_list(text)
    return graph6.parse_graph6(text)


def _fraction_json(x):
    if x is None:
        return None
    f = Fraction(x)
    return {"num": f.numerator, "den": f.denominator}


def _cert_json(cert: exact.DominationCertificate) -> dict:
    notes = {k: (str(v) if isinstance(v, Fraction) else v)
             for k, v in cert.notes.items()}
    return {
        "schema": SCHEMA,
        "type": "certificate",
        "method": cert.method,
        "a": cert.a,
        "b": cert.b,
        "size": len(cert.S),
        "set": sorted(cert.S),
        "verified": cert.verified,
        "claimed_bound": _fraction_json(cert.claimed_bound),
        "notes": notes,
    }


def _print_cert(cert, output: str):
    if output == "text":
        print("size %d verified=%s" % (len(cert.S), cert.verified))
        print("set " + " ".join(str(v) for v in sorted(cert.S)))
    else:
        print(json.dumps(_cert_json(cert), indent=2))


def _seed_or_env(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("DOMINATOR_SEED")
    if env is not None:
        return int(env)
    raise _UsageError("a seed is required (--seed or DOMINATOR_SEED)")


def cmd_gen(args) -> int:
    params = {}
    for name in ("n", "r", "s", "t", "q"):
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    seed = None
    if args.kind == "random_regular":
        seed = _seed_or_env(args)
    g = generate(args.kind, seed=seed, **params)
    if args.format == "graph6":
        print(graph6.write_graph6(g))
    else:
        sys.stdout.write(write_edge_list(g))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.graph, args.format)
    S = sorted({int(tok) for tok in args.set.replace(",", " ").split()})
    ok = exact.is_ab_dominating(g, S, args.a, args.b)
    if args.output == "json":
        print(json.dumps({"schema": SCHEMA, "type": "verify",
                          "a": args.a, "b": args.b, "set": S,
                          "dominating": ok}))
    else:
        print("dominating" if ok else "not-dominating")
    return EXIT_OK if ok else EXIT_INFEASIBLE


def cmd_gamma(args) -> int:
    g = _read_graph(args.graph, args.format)
    res = exact.gamma_exact(g, args.a, args.b, args.node_limit)
    if res.status == "infeasible":
        _diag("infeasible", "no (%d,%d)-dominating set exists"
              % (args.a, args.b))
        return EXIT_INFEASIBLE
    if res.status == "budget-exceeded":
        _diag("budget-exceeded", "node limit %d hit before optimality"
              % args.node_limit)
        return EXIT_BUDGET
    if args.output == "json":
        print(json.dumps({"schema": SCHEMA, "type": "gamma",
                          "a": args.a, "b": args.b, "gamma": res.size,
                          "witness": sorted(res.witness)}))
    else:
        print(res.size)
        print("witness " + " ".join(str(v) for v in sorted(res.witness)))
    return EXIT_OK


def _make_strategy(args) -> turan.Strategy:
    seed = args.seed
    if args.chooser == "seeded_random" and seed is None:
        seed = _seed_or_env(args)
    sub = None
    if args.subgraph:
        sub = _read_graph(args.subgraph, "auto")
    return turan.Strategy(args.strategy, k=args.k, d=args.d,
                          a=args.a, b=args.b, chooser=args.chooser,
                          seed=seed, spanning_subgraph=sub)


def cmd_turan(args) -> int:
    g = _read_graph(args.graph, args.format)
    cert = turan.turan_dominating_set(g, _make_strategy(args),
                                      use_exact=args.exact)
    _print_cert(cert, args.output)
    return EXIT_OK


def _table_records(rows):
    return [lll.report_to_record(r) for r in lll.report_rows(rows)]


_TABLE_COLUMNS = ["delta", "Delta", "a", "b", "minimal_N", "bound_num",
                  "bound_den", "P_num", "P_den", "condition_value_decimal"]


def cmd_lll_table(args) -> int:
    if args.delta is not None:
        rows = [(args.delta, args.Delta if args.Delta is not None
                 else args.delta, args.a, args.b)]
        if args.a is None or args.b is None:
            raise _UsageError("--delta needs -a and -b")
    elif args.rows:
        rows = []
        with open(args.rows) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                rows.append(tuple(int(tok) for tok in line.split()))
    else:
        rows = lll.TABLE1_ROWS
    records = _table_records(rows)
    if args.output == "json":
        print(json.dumps({"schema": SCHEMA, "type": "lll_table",
                          "rows": records}, indent=2))
    else:
        print("\t".join(_TABLE_COLUMNS))
        for rec in records:
            print("\t".join("" if rec[c] is None else str(rec[c])
                            for c in _TABLE_COLUMNS))
    return EXIT_OK


def cmd_lll_run(args) -> int:
    g = _read_graph(args.graph, args.format)
    seed = _seed_or_env(args)
    try:
        run = lll.moser_tardos(g, args.N, args.a, args.b, seed,
                               args.max_resamples)
    except BudgetExceededError as err:
        _diag("resample-budget-exceeded",
              "%s (%s bad vertices remain)" % (err, err.detail))
        return EXIT_BUDGET
    cert = lll.extract_dominating(g, run.coloring, args.a, args.b)
    if args.output == "json":
        payload = _cert_json(cert)
        payload["resamples"] = run.resamples
        payload["coloring"] = list(run.coloring.colors)
        print(json.dumps(payload, indent=2))
    else:
        print("resamples %d" % run.resamples)
        _print_cert(cert, "text")
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _read_graph(args.graph, args.format)
    if args.assume:
        g = Graph(g.n, g.edges, g.tags | frozenset(args.assume))
    reports = bounds_mod.compare_all(g, args.a, args.b,
                                     node_limit=args.node_limit)
    if args.output == "json":
        rows = []
        for r in reports:
            rows.append({
                "method": r.method,
                "applicable": r.applicable,
                "value": None if r.value is None else float(r.value),
                "reason": r.reason,
                "vacuous": r.vacuous,
            })
        print(json.dumps({"schema": SCHEMA, "type": "bounds",
                          "a": args.a, "b": args.b, "rows": rows},
                         indent=2))
    else:
        print("method\tapplicable\tvalue\treason")
        for r in reports:
            val = "" if r.value is None else (
                "%s%s" % (float(r.value),
                          " (vacuous)" if r.vacuous else ""))
            print("%s\t%s\t%s\t%s" % (r.method, r.applicable, val,
                                      r.reason))
    return EXIT_OK


def _add_graph_arg(p):
    p.add_argument("graph", help="input path or '-' for stdin")
    p.add_argument("--format", choices=["auto", "edgelist", "graph6"],
                   default="auto")


def build_parser() -> _Parser:
    parser = _Parser(prog="dominator",
                     description="(a,b)-domination bounds and certificates")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph family")
    p.add_argument("kind", choices=["heawood", "petersen", "cycle",
                                    "complete", "complete_bipartite",
                                    "projective_incidence",
                                    "random_regular"])
    p.add_argument("-n", type=int)
    p.add_argument("-r", type=int)
    p.add_argument("-s", type=int)
    p.add_argument("-t", type=int)
    p.add_argument("-q", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=["edgelist", "graph6"],
                   default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a set for (a,b)-domination")
    _add_graph_arg(p)
    p.add_argument("--set", required=True,
                   help="vertex ids, comma or space separated")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gamma", help="exact (a,b)-domination number")
    _add_graph_arg(p)
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--node-limit", type=int,
                   default=exact.DEFAULT_NODE_LIMIT)
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("turan", help="constructive certificate via the "
                                     "auxiliary-graph method")
    _add_graph_arg(p)
    p.add_argument("--strategy", required=True,
                   choices=["tt22_min3", "tt22_min4", "tt22_mixed",
                            "kk_clique", "kk_matching", "kk_partition",
                            "ab_general", "ab_spanning"])
    p.add_argument("-k", type=int)
    p.add_argument("-d", type=int)
    p.add_argument("-a", type=int)
    p.add_argument("-b", type=int)
    p.add_argument("--chooser", choices=["lowest_index", "seeded_random"],
                   default="lowest_index")
    p.add_argument("--seed", type=int)
    p.add_argument("--subgraph", help="edge-list file with a spanning "
                                      "regular subgraph (ab_spanning)")
    p.add_argument("--exact", action="store_true",
                   help="extract an exact maximum independent set")
    p.add_argument("--output", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_turan)

    p = sub.add_parser("lll-table", help="minimal color counts; no "
                                         "arguments reproduces the "
                                         "published 15-row table")
    p.add_argument("--rows", help="file of 'delta Delta a b' rows")
    p.add_argument("--delta", type=int)
    p.add_argument("--Delta", type=int)
    p.add_argument("-a", type=int)
    p.add_argument("-b", type=int)
    p.add_argument("--output", choices=["text", "tsv", "json"],
                   default="tsv")
    p.set_defaults(func=cmd_lll_table)

    p = sub.add_parser("lll-run", help="Moser-Tardos resampling run")
    _add_graph_arg(p)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-resamples", type=int)
    p.add_argument("--output", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_lll_run)

    p = sub.add_parser("bounds", help="compare every applicable bound")
    _add_graph_arg(p)
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--assume", action="append",
                   choices=["projective_incidence", "moore", "heawood"],
                   help="assert a structural property the CLI cannot "
                        "detect (repeatable)")
    p.add_argument("--node-limit", type=int,
                   default=exact.DEFAULT_NODE_LIMIT)
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as err:
        _diag("usage", str(err))
        return EXIT_USAGE
    except BudgetExceededError as err:
        _diag("budget-exceeded", str(err))
        return EXIT_BUDGET
    except DominatorError as err:
        _diag("format", str(err))
        return EXIT_USAGE
    except OSError as err:
        _diag("io", str(err))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
