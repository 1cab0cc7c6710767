"""Concrete dynamical systems and their return-time sets.

Finite rotations are exact.  Torus rotations and the quadratic skew product
run on a rational approximant p/q of the rotation number with a declared
precision; orbit points are integers over a common denominator, so every
comparison is exact against the approximant.  Points closer to the boundary
of U than the margin (delta plus accumulated approximant error) are flagged
as ambiguous instead of being trusted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import combinations
from math import floor, gcd, lcm
from typing import Iterable, Sequence

from .density import as_fraction, decide_thick_dilation, gap_syndeticity
from .natset import NatSet, PeriodicSet, Window, quotient, translate

DELTA = Fraction(1, 10**9)

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


class NotMinimalError(ValueError):
    pass


# -- systems ---------------------------------------------------------------

@dataclass(frozen=True)
class FiniteRotation:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("rotation size must be >= 1")

    def step(self, x: int, n: int = 1) -> int:
        return (x + n) % self.k

    def states(self) -> range:
        return range(self.k)

    def describe(self) -> str:
        return f"rot k={self.k}"


@dataclass(frozen=True)
class TorusRotation:
    """x -> x + alpha on [0, 1), alpha given as an exact rational approximant.

    ``prec`` bounds |alpha - true rotation number|; ``irrational`` declares
    that the true number is irrational, which is taken on trust.
    """

    alpha: Fraction
    prec: Fraction = Fraction(0)
    irrational: bool = True

    def __post_init__(self):
        a = as_fraction(self.alpha) % 1
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "prec", as_fraction(self.prec))

    def step(self, x, n: int = 1) -> Fraction:
        return (as_fraction(x) + n * self.alpha) % 1

    def describe(self) -> str:
        return f"torus alpha={self.alpha.numerator}/{self.alpha.denominator} prec={float(self.prec):g}"


@dataclass(frozen=True)
class SkewProduct:
    """(x, y) -> (x + alpha, y + 2x + alpha) on the 2-torus.

    T^n (x, y) = (x + n alpha, y + 2nx + n^2 alpha).
    """

    alpha: Fraction
    prec: Fraction = Fraction(0)
    irrational: bool = True

    def __post_init__(self):
        a = as_fraction(self.alpha) % 1
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "prec", as_fraction(self.prec))

    def step(self, point, n: int = 1) -> tuple[Fraction, Fraction]:
        x, y = (as_fraction(c) for c in point)
        return ((x + n * self.alpha) % 1, (y + 2 * n * x + n * n * self.alpha) % 1)

    def describe(self) -> str:
        return f"skew alpha={self.alpha.numerator}/{self.alpha.denominator} prec={float(self.prec):g}"


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("product needs at least one factor")

    def step(self, point, n: int = 1) -> tuple:
        return tuple(f.step(p, n) for f, p in zip(self.factors, point))

    def describe(self) -> str:
        return " x ".join(f.describe() for f in self.factors)


def decimal_approximant(value: str, digits: int) -> Fraction:
    return Fraction(Decimal(value)).limit_denominator(10**digits)


def sqrt2_minus_1(digits: int = 30) -> TorusRotation:
    """Rotation by sqrt(2) - 1, truncated to the given number of decimals."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        a = Decimal(2).sqrt() - 1
        a = a.quantize(Decimal(1).scaleb(-digits), rounding="ROUND_DOWN")
    return TorusRotation(Fraction(a), Fraction(1, 10**digits))


def golden(digits: int = 30) -> TorusRotation:
    """Rotation by (sqrt(5) - 1) / 2, truncated to the given number of decimals."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        a = (Decimal(5).sqrt() - 1) / 2
        a = a.quantize(Decimal(1).scaleb(-digits), rounding="ROUND_DOWN")
    return TorusRotation(Fraction(a), Fraction(1, 10**digits))


# -- open sets -------------------------------------------------------------

@dataclass(frozen=True)
class Arcs:
    """Finite union of half-open arcs [lo, hi) in [0, 1); lo < hi."""

    arcs: tuple

    def __post_init__(self):
        arcs = tuple(sorted((as_fraction(lo), as_fraction(hi)) for lo, hi in self.arcs))
        for lo, hi in arcs:
            if not 0 <= lo < hi <= 1:
                raise ValueError(f"bad arc [{lo}, {hi})")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def interval(cls, lo, hi) -> "Arcs":
        return cls(((lo, hi),))

    def __contains__(self, x) -> bool:
        x = as_fraction(x) % 1
        return any(lo <= x < hi for lo, hi in self.arcs)

    def endpoints(self) -> list[Fraction]:
        """Boundary points on the circle; the full circle has none."""
        pts = set()
        for lo, hi in self.arcs:
            if (lo, hi) != (0, 1):
                pts.update((lo, hi % 1))
        return sorted(pts)

    def __bool__(self) -> bool:
        return bool(self.arcs)


@dataclass(frozen=True)
class Box:
    """Product of per-coordinate arc unions, for the skew product."""

    x: Arcs
    y: Arcs

    def __contains__(self, point) -> bool:
        return point[0] in self.x and point[1] in self.y

    def __bool__(self) -> bool:
        return bool(self.x) and bool(self.y)


# -- return times ----------------------------------------------------------

@dataclass(frozen=True)
class ReturnTimes:
    """Return set on a window plus the times flagged as boundary-ambiguous.

    Ambiguous times are classified by the approximant but should not be
    trusted; ``trusted`` removes them.
    """

    set: NatSet
    ambiguous: tuple[int, ...] = ()
    margin: float = 0.0

    @property
    def trusted(self) -> NatSet:
        if not self.ambiguous:
            return self.set
        bad = set(self.ambiguous)
        return NatSet((m for m in self.set if m not in bad), self.set.hi)


def _circle_scan(start: int, step: int, Q: int, count: int, arcs: Arcs, margin: int):
    """Indices 1..count where (start + i*step) mod Q lies in the scaled arcs.

    Also returns the indices within ``margin`` (circular) of an endpoint;
    exact endpoint hits are always included.
    """
    bounds = [(lo.numerator * (Q // lo.denominator), hi.numerator * (Q // hi.denominator)) for lo, hi in arcs.arcs]
    ends = [e.numerator * (Q // e.denominator) for e in arcs.endpoints()]
    mask = bytearray(count + 1)
    ambiguous = []
    X = start
    single = len(bounds) == 1
    lo0, hi0 = bounds[0]
    for i in range(1, count + 1):
        X = (X + step) % Q
        if single:
            if lo0 <= X < hi0:
                mask[i] = 1
        elif any(lo <= X < hi for lo, hi in bounds):
            mask[i] = 1
        for e in ends:
            d = (X - e) % Q
            if d <= margin or Q - d <= margin:
                ambiguous.append(i)
                break
    return mask, ambiguous


def _scaled(values: Iterable[Fraction]) -> int:
    return lcm(*(v.denominator for v in values))


def _margin_units(Q: int, err: Fraction, delta: Fraction) -> int:
    # integer distances d/Q are ambiguous iff d <= (delta + err) * Q
    return floor((delta + err) * Q)


def return_times(sys, x, U, w: Window | int, power: int = 1, delta=DELTA) -> ReturnTimes:
    """R(x, U) for T^power, i.e. {n in [1, hi] : T^(power*n) x in U}."""
    hi = w.hi if isinstance(w, Window) else int(w)
    if power < 1:
        raise ValueError("power must be >= 1")
    if not U:
        raise ValueError("U must be non-empty")
    if isinstance(sys, FiniteRotation):
        U = frozenset(u % sys.k for u in U)
        k = sys.k
        mask = bytearray(hi + 1)
        p = power % k
        for n in range(1, min(hi, k) + 1):
            if (x + n * p) % k in U:
                mask[n::k] = b"\x01" * len(range(n, hi + 1, k))
        return ReturnTimes(NatSet.from_mask(mask, hi))
    delta = as_fraction(delta)
    if isinstance(sys, TorusRotation):
        if not isinstance(U, Arcs):
            raise TypeError("torus open sets are Arcs")
        x = as_fraction(x) % 1
        pts = [sys.alpha, x] + [e for arc in U.arcs for e in arc]
        Q = _scaled(pts)
        step = power * sys.alpha.numerator * (Q // sys.alpha.denominator)
        start = x.numerator * (Q // x.denominator)
        margin = _margin_units(Q, power * hi * sys.prec, delta)
        mask, amb = _circle_scan(start, step, Q, hi, U, margin)
        return ReturnTimes(NatSet.from_mask(mask, hi), tuple(amb), float(delta + power * hi * sys.prec))
    if isinstance(sys, SkewProduct):
        return _skew_return_times(sys, x, U, hi, power, delta)
    if isinstance(sys, Product):
        if len(x) != len(sys.factors) or len(U) != len(sys.factors):
            raise ValueError("product point and open set need one entry per factor")
        parts = [return_times(f, xi, Ui, hi, power, delta) for f, xi, Ui in zip(sys.factors, x, U)]
        acc = parts[0].set
        for p in parts[1:]:
            acc = acc & p.set
        amb = sorted(set().union(*(p.ambiguous for p in parts)))
        return ReturnTimes(acc, tuple(amb), max(p.margin for p in parts))
    raise TypeError(f"unknown system {sys!r}")


def _skew_return_times(sys: SkewProduct, point, U: Box, hi: int, power: int, delta: Fraction) -> ReturnTimes:
    if not isinstance(U, Box):
        raise TypeError("skew product open sets are Boxes")
    x, y = (as_fraction(c) % 1 for c in point)
    pts = [sys.alpha, x, y] + [e for arcs in (U.x, U.y) for arc in arcs.arcs for e in arc]
    Q = _scaled(pts)
    P = sys.alpha.numerator * (Q // sys.alpha.denominator)
    X = x.numerator * (Q // x.denominator)
    Y = y.numerator * (Q // y.denominator)
    mx = _margin_units(Q, power * hi * sys.prec, delta)
    my = _margin_units(Q, (power * hi) ** 2 * sys.prec, delta)
    xb = [(lo.numerator * (Q // lo.denominator), h.numerator * (Q // h.denominator)) for lo, h in U.x.arcs]
    yb = [(lo.numerator * (Q // lo.denominator), h.numerator * (Q // h.denominator)) for lo, h in U.y.arcs]
    xe = [e.numerator * (Q // e.denominator) for e in U.x.endpoints()]
    ye = [e.numerator * (Q // e.denominator) for e in U.y.endpoints()]
    pP, ppP = power * P, power * power * P
    mask = bytearray(hi + 1)
    amb = []
    for n in range(1, hi + 1):
        # T^p (x, y) = (x + p a, y + 2 p x + p^2 a)
        Y = (Y + 2 * power * X + ppP) % Q
        X = (X + pP) % Q
        if any(lo <= X < h for lo, h in xb) and any(lo <= Y < h for lo, h in yb):
            mask[n] = 1
        if any(min((X - e) % Q, (e - X) % Q) <= mx for e in xe) or any(min((Y - e) % Q, (e - Y) % Q) <= my for e in ye):
            amb.append(n)
    return ReturnTimes(NatSet.from_mask(mask, hi), tuple(amb), float(delta + (power * hi) ** 2 * sys.prec))


def return_set(sys, x, U, w: Window | int, power: int = 1, delta=DELTA) -> NatSet:
    return return_times(sys, x, U, w, power, delta).set


# -- Kronecker components --------------------------------------------------

@dataclass(frozen=True)
class ComponentDecomposition:
    """The d clopen T^n-minimal pieces; ``label`` maps a state to its index.

    T sends piece j to piece j + 1 mod d.
    """

    n: int
    d: int
    factor_d: tuple | None = None

    def label(self, state) -> int:
        if self.d == 1:
            return 0
        if self.factor_d is None:
            return state % self.d
        # per-factor labels combine by CRT; non-finite factors have d = 1
        return _crt([(s % g, g) for s, g in zip(state, self.factor_d) if g > 1])

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d}


def _crt(pairs: Sequence[tuple[int, int]]) -> int:
    r, m = 0, 1
    for a, g in pairs:
        # solve r + m*u = a (mod g); moduli are coprime
        u = ((a - r) * pow(m, -1, g)) % g if g > 1 else 0
        r, m = r + m * u, m * g
    return r % m


def kronecker_components(sys, n: int) -> ComponentDecomposition:
    if n < 1:
        raise ValueError("n must be >= 1")
    if isinstance(sys, FiniteRotation):
        return ComponentDecomposition(n, gcd(n, sys.k))
    if isinstance(sys, (TorusRotation, SkewProduct)):
        if not sys.irrational:
            raise NotMinimalError("rotation number not declared irrational")
        return ComponentDecomposition(n, 1)
    if isinstance(sys, Product):
        ks = []
        irr = 0
        for f in sys.factors:
            if isinstance(f, FiniteRotation):
                ks.append(f.k)
            elif isinstance(f, (TorusRotation, SkewProduct)) and f.irrational:
                irr += 1
            else:
                raise NotMinimalError(f"unsupported factor {f!r}")
        if irr > 1:
            raise NotMinimalError("minimality of a product of several irrational factors is not certified")
        if any(gcd(a, b) != 1 for a, b in combinations(ks, 2)):
            raise NotMinimalError("finite rotation factors must have coprime sizes")
        factor_d = tuple(gcd(n, f.k) if isinstance(f, FiniteRotation) else 1 for f in sys.factors)
        d = 1
        for g in factor_d:
            d *= g
        return ComponentDecomposition(n, d, factor_d)
    raise TypeError(f"unknown system {sys!r}")


def total_visibility(sys: FiniteRotation, U, depth: int | None = None) -> Fraction:
    """inf over n and i of d_n |U & X_{n,i}| / k for the uniform measure.

    With no depth, n ranges over the divisors of k, which already realise
    every decomposition, so the value is exact.
    """
    if not isinstance(sys, FiniteRotation):
        raise TypeError("total visibility is computed for finite rotations")
    U = frozenset(u % sys.k for u in U)
    if not U:
        raise ValueError("U must be non-empty")
    k = sys.k
    levels = [n for n in range(1, k + 1) if k % n == 0] if depth is None else range(1, depth + 1)
    best = Fraction(1)
    for n in levels:
        d = gcd(n, k)
        for i in range(d):
            hit = sum(1 for u in U if u % d == i)
            best = min(best, Fraction(d * hit, k))
    return best


# -- orbit density ---------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    verdict: str
    counterexample: dict | None = None
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "counterexample": self.counterexample, "detail": self.detail}


def _circ(a: Fraction, b: Fraction) -> Fraction:
    d = abs(a - b) % 1
    return min(d, 1 - d)


def eps_dense_coprime_check(sys, eps, N: int, n_range: int, step_bound: int, points: int = 4, seed: int = 0) -> CheckResult:
    """Is the T^n orbit of x eps-dense (within step_bound steps) for n coprime to N?

    Finite rotations use the metric |a - b| / k on the cycle and enumerate
    every x.  Torus rotations pass when the largest gap of the sorted orbit
    is below 2 eps.  The skew product uses a sufficient grid test (every
    cell of side < eps holds an orbit point); a miss is inconclusive.
    """
    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    ns = [n for n in range(1, n_range + 1) if gcd(n, N) == 1]
    if isinstance(sys, FiniteRotation):
        k = sys.k
        for n in ns:
            for x in range(k):
                orbit = {(x + j * n) % k for j in range(1, step_bound + 1)}
                for y in range(k):
                    far = min(min((y - o) % k, (o - y) % k) for o in orbit)
                    if Fraction(far, k) >= eps:
                        return CheckResult(FAIL, {"n": n, "x": x, "missed": y, "distance": str(Fraction(far, k))})
        return CheckResult(PASS, detail={"n_tested": ns})
    rng = random.Random(seed)
    if isinstance(sys, TorusRotation):
        starts = [Fraction(0)] + [Fraction(rng.randrange(10**6), 10**6) for _ in range(points - 1)]
        for n in ns:
            for x in starts:
                orbit = sorted(sys.step(x, j * n) for j in range(1, step_bound + 1))
                gaps = [b - a for a, b in zip(orbit, orbit[1:])] + [1 - orbit[-1] + orbit[0]]
                widest = max(gaps)
                if widest >= 2 * eps:
                    return CheckResult(FAIL, {"n": n, "x": str(x), "max_gap": str(widest)})
        return CheckResult(PASS, detail={"n_tested": ns, "points": [str(s) for s in starts]})
    if isinstance(sys, SkewProduct):
        g = int(1 / eps) + 1
        starts = [(Fraction(0), Fraction(0))] + [
            (Fraction(rng.randrange(10**6), 10**6), Fraction(rng.randrange(10**6), 10**6)) for _ in range(points - 1)
        ]
        for n in ns:
            for pt in starts:
                cells = set()
                p = pt
                for _ in range(step_bound):
                    p = sys.step(p, n)
                    cells.add((int(p[0] * g), int(p[1] * g)))
                if len(cells) < g * g:
                    return CheckResult(INCONCLUSIVE, {"n": n, "x": [str(c) for c in pt], "cells_hit": len(cells), "cells": g * g})
        return CheckResult(PASS, detail={"n_tested": ns})
    raise TypeError(f"unsupported system {sys!r}")


# -- diagonal orbit closures ----------------------------------------------

@dataclass(frozen=True)
class DiagonalOrbit:
    k: int
    m: tuple[int, ...]
    M: int
    states: frozenset
    components: tuple[frozenset, ...]
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "m": list(self.m),
            "M": self.M,
            "states": len(self.states),
            "component_sizes": [len(c) for c in self.components],
            "checks": self.checks,
        }


def _closure(seeds: Iterable[tuple], maps: Sequence) -> frozenset:
    seen = set(seeds)
    todo = list(seen)
    while todo:
        p = todo.pop()
        for f in maps:
            q = f(p)
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return frozenset(seen)


def diagonal_orbit(k: int, m: Sequence[int], cap: int = 10**6) -> DiagonalOrbit:
    """Orbit closure of the diagonal of X^l under T^m1 x ... x T^ml, X = Z/k.

    The pieces are the closures of the diagonals of the level-M components
    X_{M,j}, M = lcm(m).  All maps are bijections of a finite set, so forward
    closures are group orbits and one base point per piece decides
    transitivity.
    """
    m = tuple(int(v) for v in m)
    if not m or min(m) < 1:
        raise ValueError("m must be a non-empty vector of positive integers")
    if k ** len(m) > cap:
        raise ValueError(f"{k}^{len(m)} states exceed the cap {cap}")
    M = lcm(*m)
    d = gcd(M, k)

    def shift(p):
        return tuple((c + e) % k for c, e in zip(p, m))

    def diag_t(p):
        return tuple((c + 1) % k for c in p)

    def diag_tM(p):
        return tuple((c + M) % k for c in p)

    diag = [(a,) * len(m) for a in range(k)]
    states = _closure(diag, [shift])
    comps = tuple(_closure([(a,) * len(m) for a in range(k) if a % d == j], [shift]) for j in range(d))

    union = frozenset().union(*comps)
    disjoint = sum(len(c) for c in comps) == len(union)
    cyclic = all(frozenset(diag_t(p) for p in comps[j]) == comps[(j + 1) % d] for j in range(d))
    invariant = all(frozenset(f(p) for p in c) == c for c in comps for f in (shift, diag_tM))
    transitive = all(_closure([next(iter(c))], [shift, diag_tM]) == c for c in comps)
    checks = {
        "disjoint": disjoint,
        "union": union == states,
        "count": len(comps) == d == kronecker_components(FiniteRotation(k), M).d,
        "cyclic": cyclic,
        "invariant": invariant,
        "transitive": transitive,
    }
    return DiagonalOrbit(k, m, M, states, comps, checks)


# -- multiplicative thickness ---------------------------------------------

@dataclass(frozen=True)
class ThicknessRow:
    U: tuple[int, ...]
    n: int
    cond1: bool
    cond4: bool
    cond5: bool
    counterexample: dict | None

    @property
    def agree(self) -> bool:
        return self.cond1 == self.cond4 == self.cond5

    def to_json(self) -> dict:
        return {
            "U": list(self.U),
            "n": self.n,
            "cond1": self.cond1,
            "cond4": self.cond4,
            "cond5": self.cond5,
            "counterexample": self.counterexample,
        }


def thickness_equivalence_check(sys: FiniteRotation, U_family: Iterable[Iterable[int]] | None = None, n_range: int = 4) -> list[ThicknessRow]:
    """Evaluate three equivalent forms of multiplicative thickness per (U, n).

    (1) every R(x, U), as a periodic set, contains a dilate of {1..n};
    (4) every x has some m in one period with x + m*i in U for i = 1..n;
    (5) with F = {1..k}, every shift l in one period has m in F with
        l + m{1..n} inside R(x, U), read off a computed window.
    The three use separate code paths.
    """
    if not isinstance(sys, FiniteRotation):
        raise TypeError("the equivalence check needs a finite rotation")
    k = sys.k
    if U_family is None:
        U_family = [c for r in range(1, k + 1) for c in combinations(range(k), r)]
    rows = []
    for U in U_family:
        U = tuple(sorted(set(u % k for u in U)))
        Uset = frozenset(U)
        for n in range(1, n_range + 1):
            F = range(1, n + 1)
            c1 = all(
                decide_thick_dilation(PeriodicSet(k, frozenset((u - x) % k for u in U)), F) is not None
                for x in range(k)
            )
            bad = next((x for x in range(k) if not any(all((x + m * i) % k in Uset for i in F) for m in range(1, k + 1))), None)
            c4 = bad is None
            c5 = True
            for x in range(k):
                R = return_set(sys, x, Uset, k - 1 + k * n)
                if not all(any(all(l + m * i in R for i in F) for m in range(1, k + 1)) for l in range(k)):
                    c5 = False
                    break
            cex = None if bad is None else {"x": bad, "n": n}
            rows.append(ThicknessRow(U, n, c1, c4, c5, cex))
    return rows


def translate_quotient_syndetic_check(sys, x, U, N: int, t_range: int, n_range: int, w: Window | int, threshold: int = 20) -> list[dict]:
    """Largest gap of (R(x, U) - t) / n for t <= t_range and n <= n_range coprime to N."""
    hi = w.hi if isinstance(w, Window) else int(w)
    R = return_set(sys, x, U, hi)
    rows = []
    for t in range(0, t_range + 1):
        shifted = translate(R, t)
        for n in range(1, n_range + 1):
            if gcd(n, N) != 1:
                continue
            gap = gap_syndeticity(quotient(shifted, n))
            rows.append({"t": t, "n": n, "gap": gap, "flagged": gap is None or gap > threshold})
    return rows


# -- textual config --------------------------------------------------------

def _parse_alpha(text: str, digits: int = 30) -> tuple[Fraction, Fraction]:
    named = {"sqrt2-1": sqrt2_minus_1, "golden": golden}
    if text in named:
        rot = named[text](digits)
        return rot.alpha, rot.prec
    if "/" in text:
        return Fraction(text), Fraction(0)
    return Fraction(Decimal(text)), Fraction(0)


def parse_system(text: str):
    """Parse ``rot k=4``, ``torus alpha=... prec=...`` or ``skew alpha=...``."""
    parts = text.split()
    if not parts:
        raise ValueError("empty system spec")
    kind, opts = parts[0], dict(p.split("=", 1) for p in parts[1:])
    if kind == "rot":
        return FiniteRotation(int(opts["k"]))
    if kind in ("torus", "skew"):
        alpha, prec = _parse_alpha(opts.get("alpha", "sqrt2-1"))
        if "prec" in opts:
            prec = Fraction(Decimal(opts["prec"]))
        cls = TorusRotation if kind == "torus" else SkewProduct
        return cls(alpha, prec)
    raise ValueError(f"unknown system kind {kind!r}")


def parse_open_set(text: str, sys=None):
    """``interval 0/1 1/4`` (repeatable, ``;``-separated) or ``states 0 2``."""
    chunks = [c.split() for c in text.split(";") if c.strip()]
    if chunks and chunks[0][0] == "states":
        return frozenset(int(v) for v in chunks[0][1:])
    arcs = []
    for c in chunks:
        if c[0] != "interval" or len(c) != 3:
            raise ValueError(f"bad open set {text!r}")
        arcs.append((Fraction(c[1]), Fraction(c[2])))
    A = Arcs(tuple(arcs))
    if isinstance(sys, SkewProduct):
        return Box(A, Arcs.interval(0, 1))
    return A
