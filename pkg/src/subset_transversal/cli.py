"""Command-line front end: ``solve``, ``verify``, ``gen``, ``reduce`` and ``bench``.

Vertices are 1-indexed in every file and report.  Exit codes: 0 on success,
1 on I/O or format errors, 2 when the instance is outside the requested class,
3 when ``verify`` rejects the proposed solution.
"""

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import solve as auto_solve
from .errors import FormatError, NotInClass, TransversalError
from .generators import FAMILIES, random_instance, reduce_vc_to_soct_split
from .graph import format_instance, format_solution, parse_instance, parse_solution
from .oracle import MAX_BRUTE_N, brute_force_minimum
from .sfvs import sfvs_sp1p3free
from .soct import soct_p4free, soct_sp1p3free
from .svc import svc_p4free, svc_sp1p4free
from .validity import Instance, Problem, verify_solution

EXIT_OK, EXIT_IO, EXIT_CLASS, EXIT_INVALID = 0, 1, 2, 3

ROUTES = {
    ("svc", "p4free"): lambda G, T, s: svc_p4free(G, T),
    ("svc", "sp1p4free"): svc_sp1p4free,
    ("sfvs", "sp1p3free"): sfvs_sp1p3free,
    ("soct", "p4free"): lambda G, T, s: soct_p4free(G, T),
    ("soct", "sp1p3free"): soct_sp1p3free,
}


class UsageError(TransversalError):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def run_solver(inst, route="auto", s=None):
    """Solve with the named route; returns ``(solution, class_used)``."""
    problem = inst.problem.value
    if route == "auto":
        sol = auto_solve(inst)
        return sol, sol.stats.get("route", "auto")
    if route == "brute":
        return brute_force_minimum(inst), "brute"
    solver = ROUTES.get((problem, route))
    if solver is None:
        raise UsageError(f"no {route} solver for {problem}")
    if route in ("sp1p3free", "sp1p4free") and s is None:
        raise UsageError(f"--s is required with --class {route}")
    return solver(inst.graph, inst.terminals, s), route


def _report(inst, sol, class_used, elapsed_ms):
    stats = {k: v for k, v in sol.stats.items() if k != "route"}
    return {
        "problem": inst.problem.value,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "|T|": inst.terminals.bit_count(),
        "class_used": class_used,
        "s": sol.stats.get("s"),
        "solution": [v + 1 for v in sol.vertex_list()],
        "size": sol.size,
        "valid": verify_solution(inst, sol.vertices),
        "elapsed_ms": round(elapsed_ms, 3),
        "stats": stats,
    }


def cmd_solve(args):
    G, T = parse_instance(_read(args.instance))
    inst = Instance(G, T, args.problem)
    start = time.perf_counter()
    sol, class_used = run_solver(inst, args.cls, args.s)
    report = _report(inst, sol, class_used, (time.perf_counter() - start) * 1000)
    if not args.stats:
        report.pop("stats")
    if args.budget is not None:
        report["decision"] = "FEASIBLE" if sol.size <= args.budget else "INFEASIBLE"
    if args.output == "json":
        _write(None, json.dumps(report) + "\n")
    else:
        lines = [f"{key}: {value}" for key, value in report.items() if key not in ("solution", "stats")]
        lines.append("solution: " + " ".join(map(str, report["solution"])))
        if args.stats:
            lines.extend(f"stat {k}: {v}" for k, v in sorted(report["stats"].items()))
        _write(None, "\n".join(lines) + "\n")
    if args.solution_out:
        _write(args.solution_out, format_solution(sol.vertices))
    return EXIT_OK


def cmd_verify(args):
    G, T = parse_instance(_read(args.instance))
    S = parse_solution(_read(args.solution), G.n)
    ok = verify_solution(Instance(G, T, args.problem), S)
    print("VALID" if ok else "INVALID")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_gen(args):
    inst = random_instance(args.family, args.n, args.seed, Problem.SVC, s=args.s, p=args.p,
                           density=args.density)
    comment = f"{args.family} n={args.n} s={args.s} p={args.p} seed={args.seed}"
    _write(args.output, format_instance(inst.graph, inst.terminals, [comment]))
    return EXIT_OK


def cmd_reduce(args):
    G, _ = parse_instance(_read(args.instance))
    inst = reduce_vc_to_soct_split(G)
    comments = [f"split-graph reduction of a {G.n}-vertex graph; terminals are edge-vertices"]
    _write(args.output, format_instance(inst.graph, inst.terminals, comments))
    return EXIT_OK


def _bench_one(job):
    index, family, n, s, p, seed, problem, oracle_max_n = job
    inst = random_instance(family, n, seed, problem, s=s, p=p)
    start = time.perf_counter()
    try:
        sol, class_used = run_solver(inst)
        size = sol.size
    except NotInClass:
        class_used, size = "not-in-class", ""
    elapsed = (time.perf_counter() - start) * 1000
    oracle = brute_force_minimum(inst).size if n <= oracle_max_n else ""
    return {"instance": index, "class": class_used, "n": n, "s": s, "size": size,
            "oracle_size": oracle, "elapsed_ms": f"{elapsed:.3f}"}


def cmd_bench(args):
    jobs = [(i, args.family, args.n, args.s, args.p, args.seed + i, Problem(args.problem),
             args.oracle_max_n) for i in range(args.count)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(job) for job in jobs]
    out = sys.stdout if args.output in (None, "-") else open(args.output, "w", newline="")
    try:
        writer = csv.DictWriter(out, fieldnames=list(rows[0]) if rows else ["instance"])
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="subset-transversal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a minimum transversal")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("--problem", choices=[x.value for x in Problem], required=True)
    p.add_argument("--class", dest="cls", default="auto",
                   choices=["auto", "p4free", "sp1p3free", "sp1p4free", "brute"])
    p.add_argument("--s", type=int)
    p.add_argument("--budget", type=int, help="also answer whether a solution of this size exists")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--output", choices=["json", "text"], default="json")
    p.add_argument("--solution-out", help="also write the solution file here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a proposed solution")
    p.add_argument("instance")
    p.add_argument("solution")
    p.add_argument("--problem", choices=[x.value for x in Problem], required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a seeded random instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, help="terminal probability (default: random)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="vertex cover instance to split-graph odd cycle transversal")
    p.add_argument("instance")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bench", help="solve a seeded suite and emit CSV")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--problem", choices=[x.value for x in Problem], required=True)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--oracle-max-n", type=int, default=14)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "oracle_max_n", 0) > MAX_BRUTE_N:
        args.oracle_max_n = MAX_BRUTE_N
    try:
        return args.func(args)
    except NotInClass as exc:
        where = ""
        if exc.witness is not None:
            where = " (induced copy on vertices " + " ".join(str(v + 1) for v in sorted(exc.witness)) + ")"
        print(f"error: graph is not {exc.pattern_name}-free{where}", file=sys.stderr)
        return EXIT_CLASS
    except (FormatError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
