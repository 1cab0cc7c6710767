"""Command-line entry point: gen, returns, analyze, witness, verify."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .construct import (
    Poly,
    build_example_8_2,
    build_example_8_4,
    check_example_8_2,
    check_example_8_4,
    poly_diophantine,
)
from .density import density_profile, gap_syndeticity
from .dynsim import SkewProduct, TorusRotation, golden, parse_open_set, parse_system, return_times, sqrt2_minus_1
from .ipcalc import window_rank
from .natset import CosetSpec, emit_set_text, parse_set_file, write_set_file
from .patterns import find_gp
from .report import CheckRecord, SuiteReport, strip_timing, to_jsonable
from .suites import DEFAULT_SEED, environment, resolve, run_suite, suite_ids
from .transfer import solve_translate_witness, verify_density_transfer, verify_witness


def _emit(args, report: SuiteReport) -> None:
    if args.out and args.command != "gen":
        Path(args.out).write_text(report.dumps() + "\n")
    if args.format == "json":
        print(report.dumps())
    else:
        print(report.text())
        for c in report.checks:
            if c.witness is not None:
                print(f"    {json.dumps(c.witness, sort_keys=True)}")


def _record(check_id: str, params: dict, verdict: str, witness, start: float) -> CheckRecord:
    return CheckRecord(check_id, to_jsonable(params), verdict, to_jsonable(witness), time.perf_counter() - start)


def _parse_coset(text: str) -> CosetSpec:
    """``full``, ``coprime N [n]`` or ``one N [n]``."""
    parts = text.split()
    if parts[0] == "full":
        return CosetSpec(int(parts[1]) if len(parts) > 1 else 1)
    N = int(parts[1])
    n = int(parts[2]) if len(parts) > 2 else 1
    return CosetSpec.coprime(N, n) if parts[0] == "coprime" else CosetSpec.congruent_one(N, n)


def _parse_point(text: str, sys_, seed: int):
    import random

    if text == "random":
        rng = random.Random(seed)
        coords = [Fraction(rng.randrange(10**6), 10**6) for _ in range(2)]
        return coords[0] if isinstance(sys_, TorusRotation) else tuple(coords)
    if isinstance(sys_, SkewProduct):
        return tuple(Fraction(c) for c in text.split(","))
    if isinstance(sys_, TorusRotation):
        return Fraction(text)
    return int(text)


# -- subcommands -----------------------------------------------------------

def cmd_gen(args) -> int:
    hi = args.window
    start = time.perf_counter()
    if args.kind == "example-8.2":
        pairs = [tuple(int(v) for v in p.split(",")) for p in args.pairs.split(";")]
        A, plan = build_example_8_2(hi, pairs)
        chk = check_example_8_2(A, plan)
        provenance = {"plan": plan.to_json(), "check": chk.to_json()}
        verdict = "pass" if chk.ok else "fail"
    elif args.kind == "example-8.4":
        ex = build_example_8_4(hi)
        chk = check_example_8_4(ex)
        A = ex.A
        provenance = {"plan": ex.plan.to_json(), "B": list(ex.B.members), "check": chk.to_json()}
        verdict = "pass" if chk.ok else "fail"
    elif args.kind == "poly":
        rot = {"sqrt2-1": sqrt2_minus_1, "golden": golden}[args.alpha]()
        lo, up = (Fraction(v) for v in args.interval.split())
        ps = poly_diophantine([Poly((0, 1), rot.alpha, rot.prec)], [(lo, up)], hi)
        A = ps.set
        provenance = {"alpha": args.alpha, "interval": [str(lo), str(up)], "excluded": list(ps.excluded)}
        verdict = "pass"
    else:
        raise SystemExit(f"unknown generator {args.kind!r}")
    comments = [f"generated by gplab gen {args.kind}"]
    report = SuiteReport("gen", {"window": hi, "seed": args.seed, "bounds": {"kind": args.kind}}, [
        _record(f"gen-{args.kind}", {"window": hi}, verdict, provenance, start)
    ])
    if args.out:
        write_set_file(args.out, A, comments)
        Path(str(args.out) + ".json").write_text(report.dumps() + "\n")
    if args.format == "json":
        print(report.dumps())
    elif not args.out:
        sys.stdout.write(emit_set_text(A, comments))
    else:
        print(report.text())
    return 0 if verdict != "fail" else 1


def cmd_returns(args) -> int:
    start = time.perf_counter()
    sys_ = parse_system(args.system)
    U = parse_open_set(args.open, sys_)
    x = _parse_point(args.point, sys_, args.seed)
    rt = return_times(sys_, x, U, args.window, args.power)
    witness = {
        "count": len(rt.set),
        "members": list(rt.set.members[: args.show]),
        "ambiguous": list(rt.ambiguous),
        "margin": rt.margin,
    }
    params = {"system": args.system, "point": str(x), "open": args.open, "power": args.power, "window": args.window}
    report = SuiteReport("returns", {"window": args.window, "seed": args.seed, "bounds": {}}, [
        _record("return-set", params, "pass" if not rt.ambiguous else "inconclusive", witness, start)
    ])
    if args.set_out:
        write_set_file(args.set_out, rt.set, [f"return set of {args.system} from {x}"])
    _emit(args, report)
    return 0


def cmd_analyze(args) -> int:
    A = parse_set_file(args.file)
    if args.window is not None:
        A = A.restrict(min(args.window, A.hi))
    checks = []
    env = {"window": A.hi, "seed": args.seed, "bounds": {"gp_length": args.gp_length, "m_bound": args.m_bound, "rank_window": args.rank_window, "s_bound": args.s_bound}}

    start = time.perf_counter()
    gap = gap_syndeticity(A)
    checks.append(_record("gap", {}, "pass" if gap is not None else "inconclusive", {"max_gap": gap, "count": len(A)}, start))

    start = time.perf_counter()
    coset = _parse_coset(args.coset)
    try:
        prof = density_profile(A, coset, s_bound=args.s_bound)
        checks.append(_record("density-profile", {"coset": coset.describe()}, "pass", prof, start))
    except ValueError as e:
        checks.append(_record("density-profile", {"coset": coset.describe()}, "inconclusive", {"error": str(e)}, start))

    start = time.perf_counter()
    w = find_gp(A, args.gp_length, args.m_bound)
    checks.append(_record("gp", {"length": args.gp_length, "m_bound": args.m_bound}, "pass" if w else "inconclusive", w, start))

    start = time.perf_counter()
    small = A.restrict(min(A.hi, args.rank_window))
    r, violator = window_rank(small, args.rank_cap)
    checks.append(_record(
        "window-rank",
        {"rank_window": small.hi, "cap": args.rank_cap},
        "pass" if r is not None else "inconclusive",
        {"rank": r, "violator": violator, "scope": "window-relative"},
        start,
    ))
    _emit(args, SuiteReport("analyze", env, checks))
    return 0


def cmd_witness(args) -> int:
    F = [int(v) for v in args.F.split(",")]
    start = time.perf_counter()
    w = solve_translate_witness(args.N, args.t, F)
    problems = verify_witness(w, F)
    g = w.g
    trace = [f"K = {w.N}/({w.N},{w.t}) = {w.K}", f"F' = {list(w.F_prime)}, f0 = {w.f0}"]
    P = 1
    for f in w.F_prime:
        P *= f
    trace.append(f"b*prod(F') - a*K = {w.b}*{P} - {w.a}*{w.K} = {w.b * P - w.a * w.K} = t/(N,t) = {w.t // g}")
    for f in w.F_prime:
        lhs = w.c * g * f - w.a * w.N
        trace.append(f"f={f}: c*(N,t)*f - a*N = {lhs} = {lhs % (f * w.N)} mod {f * w.N}; t mod {f * w.N} = {w.t % (f * w.N)}")
    witness = {"witness": w, "trace": trace, "problems": problems}
    checks = [_record("translate-witness", {"N": args.N, "t": args.t, "F": F}, "fail" if problems else "pass", witness, start)]
    if args.set_file:
        start = time.perf_counter()
        A = parse_set_file(args.set_file)
        res = verify_density_transfer(A, args.t, args.N, F, args.search_bound)
        checks.append(_record("density-transfer", {"search_bound": args.search_bound}, "pass" if res.ratio > 0 else "inconclusive", res, start))
    env = {"window": args.window or 0, "seed": args.seed, "bounds": {}}
    _emit(args, SuiteReport("witness", env, checks))
    if args.format == "text":
        print("verification trace:")
        for line in trace:
            print(f"  {line}")
        print("  all conditions hold" if not problems else f"  FAILED: {', '.join(problems)}")
    return 1 if problems else 0


def cmd_verify(args) -> int:
    if args.replay:
        doc = json.loads(Path(args.replay).read_text())
        report = run_suite(doc["suite"], doc["environment"], args.jobs)
        same = strip_timing(report.to_json()) == strip_timing(doc)
        _emit(args, report)
        print("replay: identical" if same else "replay: MISMATCH", file=sys.stderr)
        return 0 if same and not report.failed else 1
    ids = suite_ids() if args.suite == "all" else [resolve(args.suite)]
    failed = False
    reports = []
    for sid in ids:
        env = environment(sid, args.window, args.seed)
        report = run_suite(sid, env, args.jobs)
        failed = failed or report.failed
        reports.append(report)
    if args.out:
        docs = [r.to_json() for r in reports]
        Path(args.out).write_text(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2, sort_keys=True) + "\n")
    for r in reports:
        print(r.dumps() if args.format == "json" else r.text())
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--window", type=int, default=None, help="upper end of the window [1, hi]")
    common.add_argument("--out", help="write the JSON report (for gen: the set file) here")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled points")
    common.add_argument("--jobs", type=int, default=1, help="parallel workers for suites")

    parser = argparse.ArgumentParser(prog="gplab", description="Finite laboratory for multiplicative patterns in return-time sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a constructed set")
    p.add_argument("kind", choices=("example-8.2", "example-8.4", "poly"))
    p.add_argument("--pairs", default="1,2;2,2;1,3", help="(t,n) pairs as 't,n;t,n'")
    p.add_argument("--alpha", default="sqrt2-1", choices=("sqrt2-1", "golden"))
    p.add_argument("--interval", default="0 1/2", help="half-open interval 'lo hi'")
    p.set_defaults(func=cmd_gen, default_window=10**4)

    p = sub.add_parser("returns", parents=[common], help="return-time set of a system")
    p.add_argument("--system", required=True, help="'rot k=4', 'torus alpha=sqrt2-1', 'skew alpha=golden'")
    p.add_argument("--point", default="0", help="state, rational, 'x,y' or 'random'")
    p.add_argument("--open", required=True, help="'states 0 2' or 'interval 0 1/4[; interval ...]'")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--show", type=int, default=50, help="members listed in the report")
    p.add_argument("--set-out", help="also write the set in the text format")
    p.set_defaults(func=cmd_returns, default_window=1000)

    p = sub.add_parser("analyze", parents=[common], help="gap, density, GP and rank of a set file")
    p.add_argument("file")
    p.add_argument("--coset", default="full", help="'full', 'coprime N [n]' or 'one N [n]'")
    p.add_argument("--s-bound", type=int, default=20)
    p.add_argument("--gp-length", type=int, default=3)
    p.add_argument("--m-bound", type=int, default=20)
    p.add_argument("--rank-window", type=int, default=240)
    p.add_argument("--rank-cap", type=int, default=6)
    p.set_defaults(func=cmd_analyze, default_window=None)

    p = sub.add_parser("witness", parents=[common], help="translate witness with verification trace")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--F", required=True, help="comma-separated elements")
    p.add_argument("--set-file", help="also search a density-transfer dilation into this set")
    p.add_argument("--search-bound", type=int, default=100)
    p.set_defaults(func=cmd_witness, default_window=None)

    p = sub.add_parser("verify", parents=[common], help="run replay suites")
    p.add_argument("--suite", default="all", help="suite id or 'all': " + ", ".join(suite_ids()))
    p.add_argument("--replay", help="rerun the suite and environment recorded in a report")
    p.set_defaults(func=cmd_verify, default_window=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.window is None and args.default_window is not None:
        args.window = args.default_window
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as e:
        print(f"gplab: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
