"""Syndeticity, multiplicative thickness and empirical multiplicative density."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Sequence

from .natset import ABS_BOUND, BoundError, CosetSpec, NatSet, PeriodicSet


def as_fraction(x) -> Fraction:
    """Exact rational from int/Fraction/str; floats go through their repr."""
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def gap_syndeticity(A: NatSet) -> int | None:
    """Largest gap between consecutive members, with 0 and hi+1 as virtual members.

    Returns None for the empty set.
    """
    if not A:
        return None
    prev, widest = 0, 0
    for m in A:
        widest = max(widest, m - prev)
        prev = m
    return max(widest, A.hi + 1 - prev)


def decide_thick_dilation(P: PeriodicSet, F: Iterable[int], S: CosetSpec = CosetSpec()) -> int | None:
    """Least s in S with s*n*F inside P, where n is the coset dilation.

    Whether s works depends only on s modulo lcm(P.modulus, S.period), so
    one period decides the question exactly; None means no s exists.
    """
    F = sorted(set(F))
    if not F:
        raise ValueError("F must be non-empty")
    q = P.modulus
    period = q * S.period // gcd(q, S.period)
    targets = [(S.n * f) % q for f in F]
    top = S.n * F[-1]
    for s in range(1, period + 1):
        if s * top > ABS_BOUND:
            raise BoundError(f"dilation {s} * {top} exceeds absolute bound")
        if not S.in_semigroup(s):
            continue
        if all((s * r) % q in P.residues for r in targets):
            return s
    return None


@dataclass(frozen=True)
class GridFamily:
    """One multiplicative test set: a power grid {m, ..., m^L} or a prime grid.

    The prime grid is {m * p_1^e_1 ... p_k^e_k : 1 <= e_i <= L}.
    """

    style: str
    m: int
    L: int
    primes: tuple = ()

    @classmethod
    def power(cls, m: int, L: int) -> "GridFamily":
        return cls("power", m, L)

    @classmethod
    def prime(cls, m: int, L: int, k: int, coset: CosetSpec = CosetSpec()) -> "GridFamily":
        return cls("prime", m, L, tuple(semigroup_primes(coset, k)))

    def elements(self) -> tuple[int, ...]:
        if self.style == "power":
            return tuple(self.m**e for e in range(1, self.L + 1))
        out = [self.m]
        for p in self.primes:
            out = [x * p**e for x in out for e in range(1, self.L + 1)]
        return tuple(sorted(out))

    def to_json(self) -> dict:
        return {"style": self.style, "m": self.m, "L": self.L, "primes": list(self.primes)}


def semigroup_primes(coset: CosetSpec, k: int) -> list[int]:
    out, p = [], 2
    while len(out) < k:
        if all(p % d for d in range(2, int(p**0.5) + 1)) and coset.in_semigroup(p):
            out.append(p)
        p += 1
    return out


def default_grids(coset: CosetSpec, hi: int, s_bound: int) -> list[GridFamily]:
    """Power grids for m in {2, 3, 5} and prime grids with k <= 4, sized to fit.

    Every grid satisfies n * max(grid) * s_bound <= hi.
    """
    room = hi // (s_bound * coset.n)
    grids = []
    bases = [m for m in (2, 3, 5) if coset.in_semigroup(m)]
    if not bases:
        bases = semigroup_primes(coset, 1)
    for m in bases:
        L = 0
        while m ** (L + 1) <= room:
            L += 1
        if L >= 2:
            grids.append(GridFamily.power(m, L))
    for k in range(1, 5):
        primes = semigroup_primes(coset, k)
        L = 0
        while prod(p ** (L + 1) for p in primes) <= room:
            L += 1
        if L >= 2:
            grids.append(GridFamily("prime", 1, L, tuple(primes)))
    return grids


@dataclass(frozen=True)
class ProfileEntry:
    grid: GridFamily
    test_set: tuple[int, ...]
    best_s: int
    ratio: Fraction


@dataclass(frozen=True)
class DensityProfile:
    """Finite-family empirical profile of the multiplicative density of A in a coset.

    Neither an upper nor a lower bound for the true density: only the listed
    test sets and dilations s <= s_bound were examined.
    """

    coset: CosetSpec
    s_bound: int
    entries: tuple[ProfileEntry, ...]
    label: str = field(default="empirical")

    @property
    def summary(self) -> Fraction:
        return min((e.ratio for e in self.entries), default=Fraction(0))

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "coset": self.coset.describe(),
            "s_bound": self.s_bound,
            "summary": str(self.summary),
            "entries": [
                {"grid": e.grid.to_json(), "size": len(e.test_set), "best_s": e.best_s, "ratio": str(e.ratio)}
                for e in self.entries
            ],
        }


def best_dilation(A: NatSet, F: Sequence[int], dilations: Iterable[int]) -> tuple[int, Fraction]:
    """Dilation with the largest |sF & A| / |F|; least s on ties."""
    best_s, best_hits = None, -1
    for s in dilations:
        hits = sum(1 for f in F if s * f in A)
        if hits > best_hits:
            best_s, best_hits = s, hits
            if hits == len(F):
                break
    if best_s is None:
        return 0, Fraction(0)
    return best_s, Fraction(best_hits, len(F))


def density_profile(A: NatSet, coset: CosetSpec, grids: Sequence[GridFamily] | None = None, s_bound: int = 100) -> DensityProfile:
    if grids is None:
        grids = default_grids(coset, A.hi, s_bound)
    entries = []
    for grid in grids:
        G = grid.elements()
        outside = [g for g in G if not coset.in_semigroup(g)]
        if outside:
            raise ValueError(f"grid {grid} has elements outside {coset.describe()}: {outside[:5]}")
        F = [coset.n * g for g in G]
        if F[-1] * s_bound > A.hi:
            raise ValueError(f"grid {grid} times s_bound {s_bound} leaves the window [1, {A.hi}]")
        s, ratio = best_dilation(A, F, (s for s in range(1, s_bound + 1) if coset.in_semigroup(s)))
        entries.append(ProfileEntry(grid, tuple(F), s, ratio))
    return DensityProfile(coset, s_bound, tuple(entries))


def pigeonhole_select(sets: Sequence[NatSet], eta) -> int | None:
    """Least n lying in strictly more than eta*k of the k sets.

    Counting measure on the shared window stands in for the invariant mean:
    if every set has counting density above eta, such n exists.
    """
    eta = as_fraction(eta)
    if not 0 <= eta < 1:
        raise ValueError("eta must lie in [0, 1)")
    if not sets:
        raise ValueError("need at least one set")
    hi = sets[0].hi
    if any(A.hi != hi for A in sets):
        raise ValueError("all sets must share one window")
    need = eta * len(sets)
    counts = [0] * (hi + 1)
    for A in sets:
        for m in A:
            counts[m] += 1
    for n in range(1, hi + 1):
        if counts[n] > need:
            return n
    return None
