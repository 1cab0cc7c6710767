"""Dilation witnesses that move density across translates.

Given N, t and a finite F inside S_K (K = N/(N,t)), the solver picks the
largest residue class F' of F mod K and integers a, b, c with

    b * prod(F') - a*K = t/(N,t)
    c*(N,t)*f - a*N = t  (mod f*N)   for every f in F',

so that every dilation Kn + c maps F' into (A + t)/(N,t) whenever a
matching dilation of A exists.  ``verify_witness`` rechecks all of this
from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import NamedTuple

from .density import default_grids
from .ipcalc import rank_minimizing_N, window_rank
from .natset import ABS_BOUND, BoundError, CosetSpec, NatSet, quotient, translate


class WitnessError(AssertionError):
    pass


class TranslateWitness(NamedTuple):
    N: int
    t: int
    K: int
    F_prime: tuple[int, ...]
    f0: int
    a: int
    b: int
    c: int

    @property
    def g(self) -> int:
        return self.N // self.K

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "t": self.t,
            "K": self.K,
            "F_prime": list(self.F_prime),
            "f0": self.f0,
            "a": self.a,
            "b": self.b,
            "c": self.c,
        }


def _solve(N: int, t: int, F) -> tuple:
    g = gcd(N, t)
    K = N // g
    if K == 1:
        Fp = tuple(sorted(F))
    else:
        classes: dict[int, list[int]] = {}
        for f in F:
            classes.setdefault(f % K, []).append(f)
        # largest class, least residue on ties
        r = min(classes, key=lambda r: (-len(classes[r]), r))
        Fp = tuple(sorted(classes[r]))
    P = prod(Fp)
    if P > ABS_BOUND:
        raise BoundError(f"product of F' = {P} exceeds absolute bound")
    tg = t // g
    b = (tg * pow(P, -1, K)) % K if K > 1 else 0
    if b == 0:
        b = K
    a, rem = divmod(b * P - tg, K)
    assert rem == 0
    c = b * Fp[0] ** (len(Fp) - 1)
    return K, Fp, a, b, c


def solve_translate_witness(N: int, t: int, F) -> TranslateWitness:
    """Witness for (N, t, F); b is the least positive Bezout solution."""
    if N < 1:
        raise ValueError("N must be >= 1")
    F = tuple(F)
    if not F:
        raise ValueError("F must be non-empty")
    K = N // gcd(N, t)
    bad = [f for f in F if f < 1 or gcd(f, K) != 1]
    if bad:
        raise ValueError(f"elements {bad} are not in S_{K}")
    K, Fp, a, b, c = _solve(N, t, F)
    w = TranslateWitness(N, t, K, Fp, Fp[0], a, b, c)
    problems = verify_witness(w)
    if problems:
        raise WitnessError(f"{w}: {problems}")
    return w


def verify_witness(w: TranslateWitness, F=None) -> list[str]:
    """Recheck a witness by direct arithmetic; returns the failed conditions.

    When F is given, F' must also be a residue class of F mod K of maximal
    size.
    """
    problems = []
    N, t = w.N, w.t
    g = gcd(N, t)
    K = N // g
    if w.K != K:
        problems.append("K")
    if w.b < 1 or w.c < 1:
        problems.append("positivity")
    Fp = w.F_prime
    if not Fp or w.f0 not in Fp:
        problems.append("f0")
    for f in Fp:
        if (f - w.f0) % K or gcd(f, K) != 1:
            problems.append(f"class {f}")
    P = 1
    for f in Fp:
        P *= f
    if w.b * P - w.a * K != t // g or t % g:
        problems.append("bezout")
    if gcd(w.c, K) != 1:
        problems.append("c coprime")
    for f in Fp:
        if (w.c * g * f - w.a * N - t) % (f * N):
            problems.append(f"congruence {f}")
    if F is not None:
        if not set(Fp) <= set(F):
            problems.append("subset")
        counts = [sum(1 for f in F if f % K == r) for r in range(K)]
        if len(Fp) != max(counts):
            problems.append("largest class")
    return problems


@dataclass(frozen=True)
class TransferResult:
    witness: TranslateWitness
    s: int | None
    ratio: Fraction
    diagnostic: str = ""

    def to_json(self) -> dict:
        return {
            "witness": self.witness.to_json(),
            "s": self.s,
            "ratio": str(self.ratio),
            "diagnostic": self.diagnostic,
        }


def transfer_target(A: NatSet, t: int, N: int) -> NatSet:
    """(A + t)/(N, t), where A + t = {m : m - t in A}."""
    return quotient(translate(A, -t), gcd(N, t))


def verify_density_transfer(A: NatSet, t: int, N: int, F, search_bound: int) -> TransferResult:
    """Best dilation s = Kn + c (s >= 1, n <= search_bound) of F into (A + t)/(N, t).

    Only the class of c mod K matters, so n may be negative as long as s
    stays positive.  Maximum hit ratio wins, least s on ties.
    """
    F = tuple(sorted(set(F)))
    w = solve_translate_witness(N, t, F)
    target = transfer_target(A, t, N)
    K, c = w.K, w.c
    if not target:
        return TransferResult(w, None, Fraction(0), "target (A + t)/(N, t) is empty on the window")
    top = F[-1]
    best_s, best_hits = None, -1
    s = (c - 1) % K + 1
    s_max = min(K * search_bound + c, target.hi // top)
    while s <= s_max:
        assert gcd(s, K) == 1
        hits = sum(1 for f in F if s * f in target)
        if hits > best_hits:
            best_s, best_hits = s, hits
            if hits == len(F):
                break
        s += K
    if best_s is None:
        return TransferResult(w, None, Fraction(0), "no dilation in the class fits the window")
    return TransferResult(w, best_s, Fraction(best_hits, len(F)))


@dataclass(frozen=True)
class BoundRow:
    t: int
    g: int
    K: int
    observed: Fraction
    bound: Fraction
    grids: int
    skipped: int

    @property
    def below(self) -> bool:
        return self.observed < self.bound

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "g": self.g,
            "K": self.K,
            "observed": str(self.observed),
            "bound": str(self.bound),
            "below": self.below,
            "grids": self.grids,
            "skipped": self.skipped,
        }


def iprstar_bound_check(
    A: NatSet,
    r: int | None,
    t_range: int,
    N: int | None = None,
    n_bound: int = 12,
    s_bound: int = 20,
    rank_window: int = 240,
) -> tuple[int, int, list[BoundRow]]:
    """Compare observed transfer ratios with (N, t)/(2^(2r+2) N) for |t| <= t_range.

    r defaults to the window rank of A and N to the rank-minimising
    dilation, both computed on A restricted to ``rank_window`` (the
    exhaustive IP_r* search grows like hi^(r-1)).  For each t the observed
    value is the least, over the default grids of S_K, of the best ratio;
    grids whose witness overflows are skipped and counted.  Rows below the
    bound are flagged, not raised.
    """
    small = A.restrict(min(A.hi, rank_window))
    if r is None:
        r, _ = window_rank(small)
        if r is None:
            raise ValueError("A is not window-IP_r* for any r up to the cap")
    if N is None:
        N, _ = rank_minimizing_N(small, n_bound)
    rows = []
    for t in range(-t_range, t_range + 1):
        g = gcd(N, t)
        K = N // g
        bound = Fraction(g, 2 ** (2 * r + 2) * N)
        target_hi = transfer_target(A, t, N).hi
        grids = default_grids(CosetSpec.coprime(K), target_hi, s_bound)
        observed = None
        skipped = 0
        for grid in grids:
            try:
                res = verify_density_transfer(A, t, N, grid.elements(), s_bound)
            except BoundError:
                skipped += 1
                continue
            observed = res.ratio if observed is None else min(observed, res.ratio)
        rows.append(BoundRow(t, g, K, Fraction(0) if observed is None else observed, bound, len(grids), skipped))
    return N, r, rows
