"""Explicit counterexample sets and polynomial Diophantine sets.

Each builder comes with a checker that re-derives the claimed properties
from the produced set by direct membership; checkers never reuse the
builder's bookkeeping beyond the block coordinates they are told about.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, lcm

from .density import as_fraction
from .dynsim import DELTA, Arcs
from .ipcalc import FsSpec, contains_ip_r, is_ip_r_star_window
from .natset import NatSet, Window, check_bound, translate


class CapacityError(ValueError):
    """The window is too small for the requested construction."""


# -- syndetic set avoiding dense dilated translates -------------------------

@dataclass(frozen=True)
class Block:
    t: int
    n: int
    start: int
    length: int

    @property
    def end(self) -> int:
        return self.start + self.length - 1


@dataclass(frozen=True)
class ThickFamilyPlan:
    pairs: tuple[tuple[int, int], ...]
    blocks: tuple[Block, ...]
    guard: int = 2
    scale: int = 50

    def to_json(self) -> dict:
        return {
            "pairs": [list(p) for p in self.pairs],
            "guard": self.guard,
            "scale": self.scale,
            "blocks": [{"t": b.t, "n": b.n, "start": b.start, "length": b.length} for b in self.blocks],
        }


def plan_thick_family(hi: int, pairs, scale: int = 50, guard: int = 2) -> ThickFamilyPlan:
    """Round-robin blocks; in round rho the block for (t, n) has length scale*rho^2*n*t.

    Blocks start after a leading guard and are separated by ``guard``
    integers, so no block touches another.
    """
    pairs = tuple((int(t), int(n)) for t, n in pairs)
    if not pairs:
        raise ValueError("need at least one (t, n) pair")
    for t, n in pairs:
        if t < 1 or n < 2:
            raise ValueError(f"pair {(t, n)} needs t >= 1 and n >= 2")
    blocks = []
    cursor = guard + 1
    rho = 1
    while True:
        for t, n in pairs:
            length = scale * rho * rho * n * t
            if cursor + length - 1 > hi:
                if rho == 1:
                    raise CapacityError(f"window {hi} cannot hold one block per pair")
                return ThickFamilyPlan(pairs, tuple(blocks), guard, scale)
            blocks.append(Block(t, n, cursor, length))
            cursor += length + guard
        rho += 1


def build_example_8_2(w: Window | int, pairs=((1, 2), (2, 2), (1, 3)), scale: int = 50) -> tuple[NatSet, ThickFamilyPlan]:
    """A syndetic set with A u (A - 1) covering the window whose translates miss thick sets.

    Inside each block for (t, n) the members congruent to t mod n (and at
    least n + t) are removed; everything outside the blocks is kept.
    """
    hi = w.hi if isinstance(w, Window) else int(w)
    plan = plan_thick_family(hi, pairs, scale)
    mask = bytearray(b"\x01") * (hi + 1)
    for b in plan.blocks:
        first = b.start + (b.t - b.start) % b.n
        first = max(first, b.n + b.t)
        mask[first : b.end + 1 : b.n] = bytes(len(range(first, b.end + 1, b.n)))
    return NatSet.from_mask(mask, hi), plan


@dataclass(frozen=True)
class Check82:
    cover_ok: bool
    uncovered: tuple[int, ...]
    block_gaps: tuple[tuple[int, int, int, int], ...]
    pair_gaps: dict

    @property
    def ok(self) -> bool:
        return self.cover_ok and all(g >= need for _, _, g, need in self.block_gaps)

    def to_json(self) -> dict:
        return {
            "cover_ok": self.cover_ok,
            "uncovered": list(self.uncovered[:20]),
            "blocks": [{"t": t, "n": n, "gap": g, "required": need} for t, n, g, need in self.block_gaps],
            "pair_gaps": {f"{t},{n}": g for (t, n), g in self.pair_gaps.items()},
        }


def check_example_8_2(A: NatSet, plan: ThickFamilyPlan) -> Check82:
    """(i) every m <= hi - 1 has m or m + 1 in A; (ii) per block, (A - t)/n misses a long run."""
    hi = A.hi
    uncovered = tuple(m for m in range(1, hi) if m not in A and m + 1 not in A)
    gaps = []
    pair_gaps: dict = {}
    for b in plan.blocks:
        lo_m = -(-(b.start - b.t) // b.n)
        hi_m = (b.end - b.t) // b.n
        run = best = 0
        for m in range(lo_m, hi_m + 1):
            if m >= 1 and m * b.n + b.t not in A:
                run += 1
                best = max(best, run)
            else:
                run = 0
        gaps.append((b.t, b.n, best, b.length // b.n - 1))
        pair_gaps[(b.t, b.n)] = max(pair_gaps.get((b.t, b.n), 0), best)
    return Check82(not uncovered, uncovered, tuple(gaps), pair_gaps)


# -- IP_2* set whose translates are not IP_r* ------------------------------

def _m_sequence():
    """1, -1, 1, -1, 2, -2, 1, -1, 2, -2, 3, -3, ..."""
    top = 1
    while True:
        for v in range(1, top + 1):
            yield v
            yield -v
        top += 1


@dataclass(frozen=True)
class Ip2FreePlan:
    m: tuple[int, ...]
    r: tuple[int, ...]

    def blocks(self) -> list[tuple[int, int, int]]:
        """(n, m_n, r_n) for each placed block r_n{1..n} + m_n."""
        return [(i + 1, mi, ri) for i, (mi, ri) in enumerate(zip(self.m, self.r))]

    def to_json(self) -> dict:
        return {"m": list(self.m), "r": list(self.r)}


def plan_ip2_free(hi: int) -> Ip2FreePlan:
    """Blocks r_n{1..n} + m_n with r_1 = 2 and r_(n+1) = 2(r_n n + M) + M + 1.

    M is the largest |m_i| for i <= n + 1.  Only blocks lying entirely in
    [1, hi] are kept.
    """
    ms, rs = [], []
    seq = _m_sequence()
    r, M, n = 2, 0, 1
    while True:
        m = next(seq)
        M = max(M, abs(m))
        if n > 1:
            r = 2 * (rs[-1] * (n - 1) + M) + M + 1
        if r * n + m > hi:
            break
        ms.append(m)
        rs.append(check_bound(r))
        n += 1
    return Ip2FreePlan(tuple(ms), tuple(rs))


@dataclass(frozen=True)
class Example84:
    A: NatSet
    B: NatSet
    plan: Ip2FreePlan
    witnesses: dict = field(default_factory=dict)


def build_example_8_4(w: Window | int) -> Example84:
    """B = union of r_n{1..n} + m_n, A = window minus B.

    ``witnesses`` maps each realised t to the FS set (r_n repeated n times,
    largest such block) lying in B - t.
    """
    hi = w.hi if isinstance(w, Window) else int(w)
    if hi < 1000:
        raise CapacityError("window must be at least 1000")
    plan = plan_ip2_free(hi)
    if len(plan.r) < 2:
        raise CapacityError(f"window {hi} holds fewer than two blocks")
    B = set()
    witnesses = {}
    for n, m, r in plan.blocks():
        B.update(r * i + m for i in range(1, n + 1))
        witnesses[m] = FsSpec((r,) * n)
    B = NatSet(B, hi)
    return Example84(B.complement(), B, plan, witnesses)


@dataclass(frozen=True)
class Check84:
    ip2_free: bool
    triple: tuple | None
    ip2_star: bool
    star_violator: FsSpec | None
    translates: dict

    @property
    def ok(self) -> bool:
        return self.ip2_free and self.ip2_star and all(v["ok"] for v in self.translates.values())

    def to_json(self) -> dict:
        return {
            "ip2_free": self.ip2_free,
            "triple": self.triple,
            "ip2_star": self.ip2_star,
            "star_violator": None if self.star_violator is None else self.star_violator.to_json(),
            "translates": {str(t): v for t, v in self.translates.items()},
        }


def check_example_8_4(ex: Example84) -> Check84:
    """(i) no x <= y in B with x + y in B; (ii) A is window-IP_2*; (iii) per t a violator in A - t."""
    A, B = ex.A, ex.B
    hi = A.hi
    members = B.members
    lookup = frozenset(members)
    triple = None
    for i, x in enumerate(members):
        for y in members[i:]:
            if x + y > hi:
                break
            if x + y in lookup:
                triple = (x, y, x + y)
                break
        if triple:
            break
    star = is_ip_r_star_window(A, 2)
    translates = {}
    for t, fs in sorted(ex.witnesses.items()):
        shifted = translate(A, t)
        sums = sorted(fs.sums())
        inside = all(s <= shifted.hi and s + t >= 1 and s not in shifted for s in sums)
        violator = is_ip_r_star_window(shifted, fs.r)
        translates[t] = {
            "k": fs.r,
            "fs": list(fs.generators),
            "fs_disjoint": inside,
            "violator": None if violator is None else list(violator.generators),
            "ok": inside and violator is not None,
        }
    return Check84(triple is None, triple, star is None, star, translates)


def ip2_free_scan(B: NatSet) -> bool:
    """Same claim as check (i), via the generic FS search."""
    return contains_ip_r(B, 2, B.hi) is None


# -- polynomial Diophantine sets -------------------------------------------

@dataclass(frozen=True)
class Poly:
    """p(n) = scale * (c_0 + c_1 n + ... + c_d n^d).

    ``scale`` is a rational approximant with absolute error ``prec``; None
    means the polynomial is exactly rational.
    """

    coeffs: tuple
    scale: Fraction | None = None
    prec: Fraction = Fraction(0)

    def __post_init__(self):
        cs = [as_fraction(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        if self.scale is not None:
            object.__setattr__(self, "scale", as_fraction(self.scale))
        object.__setattr__(self, "prec", as_fraction(self.prec))
        if len(cs) < 2:
            raise ValueError("polynomial must be non-constant")
        if self.scale is None and all(c.denominator == 1 for c in cs[1:]):
            raise ValueError("integer polynomial has constant fractional part")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class PolySet:
    set: NatSet
    excluded: tuple[int, ...]


def poly_diophantine(polys, intervals, w: Window | int, delta=DELTA) -> PolySet:
    """{n : {p_i(n)} in I_i for all i}; n near a boundary (within delta + error) is excluded."""
    hi = w.hi if isinstance(w, Window) else int(w)
    polys = list(polys)
    intervals = [I if isinstance(I, Arcs) else Arcs.interval(*I) for I in intervals]
    if len(polys) != len(intervals) or not polys:
        raise ValueError("need one interval per polynomial")
    delta = as_fraction(delta)
    keep = bytearray(b"\x01") * (hi + 1)
    excluded = set()
    for p, I in zip(polys, intervals):
        scale = p.scale if p.scale is not None else Fraction(1)
        D = lcm(*(c.denominator for c in p.coeffs))
        ints = [int(c * D) for c in p.coeffs]
        # {p(n)} = (S * q(n)) mod Q / Q with integer q(n) = D * poly(n)
        S, Q = scale.numerator, scale.denominator * D
        Q = lcm(Q, *(x.denominator for arc in I.arcs for x in arc))
        mult = Q // (scale.denominator * D)
        bounds = [(lo.numerator * (Q // lo.denominator), h.numerator * (Q // h.denominator)) for lo, h in I.arcs]
        ends = [e.numerator * (Q // e.denominator) for e in I.endpoints()]
        qmax = sum(abs(c) for c in p.coeffs) * hi ** p.degree
        margin = floor((delta + qmax * p.prec) * Q)
        for n in range(1, hi + 1):
            v = 0
            for c in reversed(ints):
                v = v * n + c
            X = (S * v * mult) % Q
            if not any(lo <= X < h for lo, h in bounds):
                keep[n] = 0
            for e in ends:
                d = (X - e) % Q
                if d <= margin or Q - d <= margin:
                    excluded.add(n)
                    break
    for n in excluded:
        keep[n] = 0
    return PolySet(NatSet.from_mask(keep, hi), tuple(sorted(excluded)))


def poly_diophantine_set(polys, intervals, w: Window | int, delta=DELTA) -> NatSet:
    return poly_diophantine(polys, intervals, w, delta).set
