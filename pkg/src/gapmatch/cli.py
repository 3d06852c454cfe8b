"""Command-line front end: ``gapmatch match | analyze | generate | bench``.

Exit codes for ``match``: 0 matched, 1 not matched, 2 error.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys

from . import __version__
from .core import DEFAULT_ORACLE_STEPS, oracle_match
from .errors import BudgetExhausted, GapMatchError, ValidationError
from .generators import (brute_1in3, brute_clique, brute_ov3, gen_clique, gen_ov3, gen_sat,
                         random_cnf, random_graph, random_ov)
from .io import read_instance, serialize_instance
from .matchers import ALGORITHMS, dispatch, run
from .matchers.nfa_product import DEFAULT_STATE_BUDGET
from .structure import analyze

EXIT_MATCH, EXIT_NO_MATCH, EXIT_ERROR = 0, 1, 2
BENCH_FIELDS = ("n", "K", "algorithm", "millis", "multiplications")


def _error(args, code, message):
    if getattr(args, "json", False):
        print(json.dumps({"error": code, "message": message}))
    else:
        print(f"error [{code}]: {message}", file=sys.stderr)
    return EXIT_ERROR


def _code(exc):
    if isinstance(exc, ValidationError):
        return exc.code
    name = type(exc).__name__
    return "".join("-" + c.lower() if c.isupper() else c for c in name).lstrip("-")


def _clean_stats(stats):
    return {k: v for k, v in stats.items() if isinstance(v, (int, float, str, bool, list, dict))}


def cmd_match(args) -> int:
    try:
        inst = read_instance(args.file)
        if args.algorithm == "auto":
            result = dispatch(inst, oracle_steps=args.oracle_steps, state_budget=args.state_budget)
        else:
            result = run(inst, args.algorithm, oracle_steps=args.oracle_steps,
                         state_budget=args.state_budget)
    except OSError as exc:
        return _error(args, "io", str(exc))
    except GapMatchError as exc:
        return _error(args, _code(exc), str(exc))
    witness_source = result.algorithm if result.witness else None
    if args.witness and args.algorithm == "auto" and result.matched and result.witness is None:
        # decision-only matcher: ask the oracle for a concrete embedding
        try:
            found = oracle_match(inst, args.oracle_steps)
            result.witness, witness_source = found.witness, "oracle"
        except BudgetExhausted:
            pass
    report = {
        "verdict": "match" if result.matched else "no-match",
        "algorithm": result.algorithm,
        "stats": _clean_stats(result.stats),
    }
    if args.witness:
        report["witness"] = list(result.witness) if result.witness else None
        report["witness_source"] = witness_source
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"{report['verdict']} ({result.algorithm})")
        if args.witness:
            print("witness:", " ".join(map(str, result.witness)) if result.witness else "none")
    return EXIT_MATCH if result.matched else EXIT_NO_MATCH


def cmd_analyze(args) -> int:
    try:
        inst = read_instance(args.file)
    except OSError as exc:
        return _error(args, "io", str(exc))
    except GapMatchError as exc:
        return _error(args, _code(exc), str(exc))
    summary = {"n": inst.n, **analyze(inst.constraints, inst.m)}
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        for key in sorted(summary):
            print(f"{key}: {summary[key]}")
    return 0


def cmd_generate(args) -> int:
    try:
        if args.kind == "clique":
            g = random_graph(args.n, args.p, seed=args.seed)
            inst = gen_clique(g, args.k, args.d)
            answer = brute_clique(g, args.k) if args.with_oracle_answer else None
        elif args.kind == "sat":
            f = random_cnf(args.n, args.m, seed=args.seed)
            inst = gen_sat(f)
            answer = brute_1in3(f) if args.with_oracle_answer else None
        else:
            t = random_ov(args.n, args.d, args.p, seed=args.seed)
            inst = gen_ov3(t)
            answer = brute_ov3(t) if args.with_oracle_answer else None
    except GapMatchError as exc:
        return _error(args, _code(exc), str(exc))
    inst.metadata["seed"] = args.seed
    if answer is not None:
        inst.metadata["expected"] = "match" if answer else "no-match"
    text = serialize_instance(inst)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    from .bench import run_bench

    sizes = [int(x) for x in args.sizes.split(",") if x]
    algorithms = [a.strip() for a in args.algorithm.split(",") if a.strip()]
    for a in algorithms:
        if a not in ALGORITHMS:
            return _error(args, "invalid-argument", f"unknown algorithm {a!r}")
    rows = run_bench(args.suite, sizes, algorithms, seed=args.seed, oracle_steps=args.oracle_steps)
    buf = _io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS + ("verdict",), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    sys.stdout.write(buf.getvalue())
    if args.figure:
        from .plotting import plot_bench

        plot_bench(rows, args.figure, title=f"{args.suite} suite")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gapmatch",
                                     description="Subsequence matching under gap constraints.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def budgets(p):
        p.add_argument("--oracle-steps", type=int, default=DEFAULT_ORACLE_STEPS,
                       help="step budget of the backtracking oracle (default 10^7)")
        p.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET,
                       help="configuration budget of the product automaton (default 10^6)")

    m = sub.add_parser("match", help="decide one instance file")
    m.add_argument("file")
    m.add_argument("--algorithm", choices=("auto",) + ALGORITHMS, default="auto")
    m.add_argument("--witness", action="store_true", help="print an embedding when one is known")
    m.add_argument("--json", action="store_true")
    budgets(m)
    m.set_defaults(func=cmd_match)

    a = sub.add_parser("analyze", help="report the shape of an instance's constraints")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generate", help="compile a random source instance")
    g.add_argument("kind", choices=("clique", "sat", "ov3"))
    g.add_argument("--n", type=int, default=4, help="vertices, variables or vectors per set")
    g.add_argument("--k", type=int, default=3, help="clique size")
    g.add_argument("--m", type=int, default=3, help="number of clauses")
    g.add_argument("--d", type=int, default=None,
                   help="ov3: vector dimension (default 4); clique: fixed row span")
    g.add_argument("--p", type=float, default=0.5, help="edge or one-bit probability")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--with-oracle-answer", action="store_true",
                   help="record the brute-force verdict under metadata.expected")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="time algorithms on a scalable family")
    b.add_argument("suite", choices=("ov3", "nested"))
    b.add_argument("--sizes", default="256,512,1024")
    b.add_argument("--algorithm", default="tree-matmul", help="comma-separated algorithm names")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--oracle-steps", type=int, default=10**6)
    b.add_argument("--csv", help="also write the CSV table to this file")
    b.add_argument("--figure", help="write a PNG/SVG/PDF chart to this file")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "generate" and args.kind == "ov3" and args.d is None:
        args.d = 4
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
