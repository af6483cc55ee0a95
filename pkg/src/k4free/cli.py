"""Command line interface.

Exit codes: 0 success / all checks pass, 1 a property violation was
found, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import sys

from .csp import encode_maxcut, read_csp, solve
from .errors import DomainError
from .generators import gen_k5_union, gen_k6_chain, gen_random_connected
from .graph import format_graph, read_graph
from .oracle import brute_force_s, exact_s
from .potential import greedy_fifth_transversal
from .reduction import reduce_core
from .suites import SUITES, SuiteParams, run_suite


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="k4free")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph from a named family")
    g.add_argument("--family", required=True, choices=["k5-union", "k6-chain", "random-connected"])
    g.add_argument("--k", type=int, default=1)
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")

    c = sub.add_parser("check", help="test K4-minor-freeness of a graph file")
    c.add_argument("file")

    s = sub.add_parser("solve", help="compute a minimum (or greedy) transversal")
    s.add_argument("file")
    s.add_argument("--method", default="exact", choices=["brute", "exact", "greedy"])
    s.add_argument("--certify", action="store_true", help="re-verify the remainder reduces to empty")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=list(SUITES))
    v.add_argument("--max-n", type=int)
    v.add_argument("--samples", type=int, default=0)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--k-max", type=int, default=3)
    v.add_argument("--report")

    csp = sub.add_parser("csp", help="Max-2-CSP solving")
    csub = csp.add_subparsers(dest="csp_command", required=True)
    cs = csub.add_parser("solve", help="solve a CSP instance file")
    cs.add_argument("file")
    cs.add_argument("--transversal", default="exact", choices=["exact", "greedy"])
    cm = csub.add_parser("maxcut", help="solve Max Cut on a graph file")
    cm.add_argument("file")
    cm.add_argument("--transversal", default="exact", choices=["exact", "greedy"])
    return p


def _cmd_gen(args) -> int:
    if args.family == "k5-union":
        g = gen_k5_union(args.k)
    elif args.family == "k6-chain":
        g = gen_k6_chain(args.k)
    else:
        if args.n is None or args.m is None:
            raise DomainError("random-connected needs --n and --m")
        g = gen_random_connected(args.n, args.m, args.seed)
    text = format_graph(g)
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_check(args) -> int:
    g = read_graph(args.file)
    trace = reduce_core(g)
    free = trace.end.n == 0
    print(f"k4-minor-free: {'yes' if free else 'no'}")
    print(f"reduction steps: {len(trace.steps)}")
    return 0


def _cmd_solve(args) -> int:
    g = read_graph(args.file)
    if args.method == "brute":
        res = brute_force_s(g)
    elif args.method == "exact":
        res = exact_s(g)
    else:
        res = greedy_fifth_transversal(g)
    print(f"size: {res.size}")
    print("vertices: " + " ".join(str(v) for v in sorted(res.vertices)))
    if args.certify:
        rest = g.induced_subgraph(g.vertices - res.vertices)
        if reduce_core(rest).end.n != 0:
            print("certificate: FAILED")
            return 1
        print("certificate: ok")
    return 0


def _cmd_verify(args) -> int:
    params = SuiteParams(
        max_n=args.max_n,
        samples=args.samples,
        seed=args.seed,
        k_max=args.k_max,
    )
    report = run_suite(args.suite, params)
    text = report.to_text()
    if args.report:
        with open(args.report, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    print(f"suite {args.suite}: {'PASS' if report.passed else 'FAIL'}"
          f" ({len(report.records)} records, {report.failures} failures)")
    return 0 if report.passed else 1


def _cmd_csp(args) -> int:
    if args.csp_command == "solve":
        inst = read_csp(args.file)
    else:
        inst = encode_maxcut(read_graph(args.file))
    res = solve(inst, args.transversal)
    print(f"objective: {res.objective}")
    print("assignment: " + " ".join(f"{v}={res.values[v]}" for v in sorted(res.values)))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "csp":
            return _cmd_csp(args)
    except (DomainError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 2  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
