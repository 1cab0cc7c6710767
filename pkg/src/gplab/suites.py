"""Replay suites: named batteries of checks producing a SuiteReport.

A suite expands its environment block (window, seed, bounds) into a list
of check specs; each spec is a plain dict, so checks can be farmed out to
worker processes and reassembled in their original order.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations
from math import gcd

from .construct import (
    CapacityError,
    Poly,
    build_example_8_2,
    build_example_8_4,
    check_example_8_2,
    check_example_8_4,
    ip2_free_scan,
    poly_diophantine,
)
from .density import decide_thick_dilation, density_profile, pigeonhole_select
from .dynsim import (
    Arcs,
    Box,
    FiniteRotation,
    SkewProduct,
    diagonal_orbit,
    golden,
    return_set,
    return_times,
    sqrt2_minus_1,
    thickness_equivalence_check,
    translate_quotient_syndetic_check,
)
from .natset import CosetSpec, NatSet, PeriodicSet, from_periodic
from .patterns import find_geo_arith, find_gp
from .report import CheckRecord, SuiteReport, to_jsonable
from .transfer import iprstar_bound_check, solve_translate_witness, verify_witness

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
DEFAULT_SEED = 20240601


def _rotation(name: str):
    return {"sqrt2-1": sqrt2_minus_1, "golden": golden}[name]()


def _sample_points(seed: int, count: int) -> list[Fraction]:
    rng = random.Random(seed)
    return [Fraction(rng.randrange(10**6), 10**6) for _ in range(count)]


# -- individual checks -----------------------------------------------------
# each takes a params dict and returns (verdict, witness)

def check_rot4_identity(p):
    hi = p["window"]
    R = return_set(FiniteRotation(4), 2, {0}, hi)
    expected = from_periodic(PeriodicSet(4, {2}), hi)
    if R != expected:
        return FAIL, {"first_difference": min(set(R) ^ set(expected))}
    P = PeriodicSet(4, {2})
    odds = [f for f in range(1, p["f_max"] + 1, 2)]
    coset = CosetSpec.coprime(2, 2)
    s = decide_thick_dilation(P, odds, coset)
    # a dilation good for all odds <= f_max is good for every subset of them
    ok = s is not None and all(2 * s * f in R for f in odds)
    return (PASS if ok else FAIL), {"s": s, "F": f"odds <= {p['f_max']}", "coset": coset.describe()}


def check_torus_gp(p):
    rot = _rotation(p["alpha"])
    U = Arcs.interval(0, Fraction(p["U_hi"]))
    rt = return_times(rot, Fraction(p["x"]), U, p["window"])
    R = rt.trusted
    w = find_gp(R, p["length"], p["m_bound"])
    if w is None:
        return INCONCLUSIVE, {"ambiguous": len(rt.ambiguous)}
    return PASS, {"gp": w.to_json(), "ambiguous": len(rt.ambiguous)}


def check_skew_gp(p):
    rot = _rotation(p["alpha"])
    sys = SkewProduct(rot.alpha, rot.prec)
    U = Box(Arcs.interval(0, 1), Arcs.interval(0, Fraction(p["U_hi"])))
    rt = return_times(sys, (0, 0), U, p["window"])
    w = find_gp(rt.trusted, p["length"], p["m_bound"])
    if w is None:
        return INCONCLUSIVE, {"ambiguous": len(rt.ambiguous)}
    return PASS, {"gp": w.to_json(), "ambiguous": len(rt.ambiguous)}


def check_density_profile(p):
    rot = _rotation(p["alpha"])
    U = Arcs.interval(0, Fraction(p["U_hi"]))
    rows = []
    for x in [Fraction(0)] + _sample_points(p["seed"], p["points"]):
        R = return_times(rot, x, U, p["window"]).trusted
        prof = density_profile(R, CosetSpec(), s_bound=p["s_bound"])
        rows.append({"x": str(x), "summary": str(prof.summary)})
    verdict = PASS if all(Fraction(r["summary"]) > 0 for r in rows) else INCONCLUSIVE
    return verdict, rows


def check_rot4_density(p):
    R = return_set(FiniteRotation(4), 2, {0}, p["window"])
    prof = density_profile(R, CosetSpec.coprime(2, 2), s_bound=p["s_bound"])
    return (PASS if prof.summary == 1 else FAIL), prof.to_json()


def check_pigeonhole(p):
    rot = _rotation(p["alpha"])
    U = Arcs.interval(0, Fraction(p["U_hi"]))
    sets = [return_times(rot, x, U, p["window"]).trusted for x in _sample_points(p["seed"], p["family"])]
    eta = Fraction(p["eta"])
    dens = [Fraction(len(A), A.hi) for A in sets]
    if min(dens) <= eta:
        return INCONCLUSIVE, {"min_density": str(min(dens))}
    n = pigeonhole_select(sets, eta)
    return (PASS if n is not None else FAIL), {"n": n, "min_density": str(min(dens))}


def check_translate_grid(p):
    N = p["N"]
    count = 0
    failures = []
    for t in range(-p["t_max"], p["t_max"] + 1):
        K = N // gcd(N, t)
        elements = [f for f in range(1, p["f_max"] + 1) if gcd(f, K) == 1]
        for size in range(1, p["size"] + 1):
            for F in combinations(elements, size):
                w = solve_translate_witness(N, t, F)
                if verify_witness(w, F):
                    failures.append([N, t, list(F)])
                count += 1
    return (PASS if not failures else FAIL), {"cases": count, "failures": failures[:10]}


def _bound_instance(name: str, hi: int):
    if name == "evens":
        return from_periodic(PeriodicSet(2, {0}), hi)
    if name == "N-minus-1":
        return NatSet(range(2, hi + 1), hi)
    if name == "rot4-x0-U0":
        return return_set(FiniteRotation(4), 0, {0}, hi)
    raise ValueError(name)


def check_iprstar_bound(p):
    A = _bound_instance(p["set"], p["window"])
    N, r, rows = iprstar_bound_check(A, None, p["t_range"], n_bound=p["n_bound"], s_bound=p["s_bound"], rank_window=p["rank_window"])
    below = [row.t for row in rows if row.below]
    return (PASS if not below else FAIL), {"N": N, "r": r, "rows": [row.to_json() for row in rows]}


def check_diagonal(p):
    out = []
    ok = True
    for m in p["vectors"]:
        d = diagonal_orbit(p["k"], tuple(m))
        ok = ok and d.ok
        out.append(d.to_json())
    return (PASS if ok else FAIL), out


def check_example_82(p):
    A, plan = build_example_8_2(p["window"], [tuple(q) for q in p["pairs"]])
    c = check_example_8_2(A, plan)
    ok = c.ok and all(g >= p["min_gap"] for g in c.pair_gaps.values())
    return (PASS if ok else FAIL), c.to_json()


def check_example_82_capacity(p):
    try:
        build_example_8_2(p["window"], [tuple(q) for q in p["pairs"]])
    except CapacityError as e:
        return PASS, {"error": str(e)}
    return FAIL, {"error": None}


def check_example_84(p):
    ex = build_example_8_4(p["window"])
    c = check_example_8_4(ex)
    ok = c.ok and ip2_free_scan(ex.B)
    return (PASS if ok else FAIL), {"plan": ex.plan.to_json(), "check": c.to_json()}


def check_poly_geo_arith(p):
    rot = _rotation(p["alpha"])
    ps = poly_diophantine([Poly((0, 1), rot.alpha, rot.prec)], [(0, Fraction(p["I_hi"]))], p["window"])
    res = find_geo_arith(ps.set, p["length"], p["bound"], p["bound"], p["bound"])
    if res.witness is None:
        return INCONCLUSIVE, {"excluded": len(ps.excluded), "truncated": res.truncated}
    return PASS, {"witness": res.witness.to_json(), "excluded": len(ps.excluded)}


def check_thickness(p):
    rows = thickness_equivalence_check(FiniteRotation(p["k"]), None, p["n_range"])
    disagree = [r.to_json() for r in rows if not r.agree]
    return (PASS if not disagree else FAIL), {"rows": len(rows), "holding": sum(r.cond1 for r in rows), "disagreements": disagree}


def check_syndetic_translates(p):
    if p["system"] == "rot4":
        sys, x, U = FiniteRotation(4), 2, frozenset({0})
    else:
        sys, x, U = _rotation(p["system"]), Fraction(0), Arcs.interval(0, Fraction(p["U_hi"]))
    rows = translate_quotient_syndetic_check(sys, x, U, p["N"], p["t_range"], p["n_range"], p["window"], p["threshold"])
    flagged = [r for r in rows if r["flagged"]]
    return (PASS if not flagged else FAIL), {"max_gap": max(r["gap"] or 0 for r in rows), "flagged": flagged}


CHECKS = {f.__name__[len("check_") :]: f for f in [
    check_rot4_identity,
    check_torus_gp,
    check_skew_gp,
    check_density_profile,
    check_rot4_density,
    check_pigeonhole,
    check_translate_grid,
    check_iprstar_bound,
    check_diagonal,
    check_example_82,
    check_example_82_capacity,
    check_example_84,
    check_poly_geo_arith,
    check_thickness,
    check_syndetic_translates,
]}


# -- suites ----------------------------------------------------------------

def _t11(env):
    W, b = env["window"], env["bounds"]
    return [
        ("rot4-return-identity", "rot4_identity", {"window": min(W, 10**4), "f_max": 50}),
        ("torus-sqrt2-gp", "torus_gp", {"alpha": "sqrt2-1", "x": "0", "U_hi": "1/4", "window": W, "length": b["gp_length"], "m_bound": 20}),
        ("torus-golden-gp", "torus_gp", {"alpha": "golden", "x": "0", "U_hi": "1/4", "window": W, "length": b["gp_length"], "m_bound": 20}),
        *[
            (f"torus-sqrt2-gp-x{i}", "torus_gp", {"alpha": "sqrt2-1", "x": str(x), "U_hi": "1/4", "window": W, "length": b["gp_length"], "m_bound": 20})
            for i, x in enumerate(_sample_points(env["seed"], b["points"]), 1)
        ],
        ("skew-gp", "skew_gp", {"alpha": "sqrt2-1", "U_hi": "1/4", "window": min(W, 10**5), "length": 3, "m_bound": 20}),
    ]


def _t12(env):
    W, b = env["window"], env["bounds"]
    return [
        ("rot4-coset-density", "rot4_density", {"window": min(W, 10**4), "s_bound": 50}),
        ("torus-density-profile", "density_profile", {"alpha": "sqrt2-1", "U_hi": "1/4", "window": W, "s_bound": b["s_bound"], "seed": env["seed"], "points": b["points"]}),
        ("pigeonhole", "pigeonhole", {"alpha": "sqrt2-1", "U_hi": "1/4", "window": W, "seed": env["seed"], "family": 16, "eta": "1/5"}),
    ]


def _l62(env):
    b = env["bounds"]
    return [
        (f"grid-N{N}", "translate_grid", {"N": N, "t_max": b["t_max"], "f_max": b["f_max"], "size": b["size"]})
        for N in range(1, b["N_max"] + 1)
    ]


def _t72(env):
    W, b = env["window"], env["bounds"]
    return [
        (f"bound-{name}", "iprstar_bound", {"set": name, "window": W, "t_range": 6, "n_bound": 12, "s_bound": 20, "rank_window": b["rank_window"]})
        for name in ("evens", "N-minus-1", "rot4-x0-U0")
    ]


def _s4(env):
    vectors = [[1], [1, 2], [1, 3], [2, 3], [1, 2, 3]]
    return [(f"diagonal-k{k}", "diagonal", {"k": k, "vectors": vectors}) for k in range(2, 9)]


def _s8(env):
    W = env["window"]
    return [
        ("example-8.2", "example_82", {"window": W, "pairs": [[1, 2], [2, 2], [1, 3]], "min_gap": 50}),
        ("example-8.2-small", "example_82", {"window": 1000, "pairs": [[1, 2]], "min_gap": 50}),
        ("example-8.2-capacity", "example_82_capacity", {"window": 10, "pairs": [[1, 2], [2, 3], [3, 4], [4, 5]]}),
        ("example-8.4", "example_84", {"window": min(W, 10**4)}),
        ("poly-geo-arith", "poly_geo_arith", {"alpha": "sqrt2-1", "I_hi": "1/2", "window": max(W, 10**6), "length": 2, "bound": 30}),
    ]


def _s9(env):
    return [(f"thickness-k{k}", "thickness", {"k": k, "n_range": 4}) for k in range(1, 7)]


def _l81(env):
    W = env["window"]
    return [
        ("rot4", "syndetic_translates", {"system": "rot4", "N": 4, "t_range": 10, "n_range": 10, "window": min(W, 10**4), "threshold": 4}),
        ("torus-sqrt2", "syndetic_translates", {"system": "sqrt2-1", "U_hi": "1/4", "N": 1, "t_range": 10, "n_range": 10, "window": W, "threshold": 20}),
    ]


SUITES = {
    "T1.1-rotation": (_t11, {"window": 10**6, "bounds": {"gp_length": 4, "points": 3}}),
    "T1.2-rotation": (_t12, {"window": 10**5, "bounds": {"s_bound": 100, "points": 3}}),
    "L6.2-grid": (_l62, {"window": 30, "bounds": {"N_max": 12, "t_max": 12, "f_max": 30, "size": 4}}),
    "T7.2-bound": (_t72, {"window": 5000, "bounds": {"rank_window": 240}}),
    "§4-diagonal": (_s4, {"window": 0, "bounds": {}}),
    "§8-examples": (_s8, {"window": 10**5, "bounds": {}}),
    "§9-thickness": (_s9, {"window": 0, "bounds": {}}),
    "L8.1-translates": (_l81, {"window": 10**5, "bounds": {}}),
}
ALIASES = {"S4-diagonal": "§4-diagonal", "S8-examples": "§8-examples", "S9-thickness": "§9-thickness"}


def suite_ids() -> list[str]:
    return list(SUITES)


def resolve(suite_id: str) -> str:
    sid = ALIASES.get(suite_id, suite_id)
    if sid not in SUITES:
        raise KeyError(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}")
    return sid


def environment(suite_id: str, window: int | None = None, seed: int | None = None, bounds: dict | None = None) -> dict:
    sid = resolve(suite_id)
    defaults = SUITES[sid][1]
    merged = dict(defaults["bounds"])
    merged.update(bounds or {})
    return {
        "window": defaults["window"] if window is None else int(window),
        "seed": DEFAULT_SEED if seed is None else int(seed),
        "bounds": merged,
    }


def run_check(spec: tuple) -> dict:
    check_id, name, params = spec
    start = time.perf_counter()
    verdict, witness = CHECKS[name](params)
    elapsed = time.perf_counter() - start
    return CheckRecord(check_id, params, verdict, to_jsonable(witness), elapsed).to_json()


def run_suite(suite_id: str, env: dict | None = None, jobs: int = 1) -> SuiteReport:
    """Run every check of a suite; records keep the suite's check order."""
    sid = resolve(suite_id)
    if env is None:
        env = environment(sid)
    specs = SUITES[sid][0](env)
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_check, specs))
    else:
        results = [run_check(s) for s in specs]
    checks = [CheckRecord(r["id"], r["params"], r["verdict"], r["witness"], r["wall_time"]) for r in results]
    return SuiteReport(sid, env, checks)
