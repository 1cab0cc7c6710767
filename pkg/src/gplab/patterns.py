"""Searches for geometric, arithmetic and geo-arithmetic configurations.

All searches are window-relative: ``None`` means nothing was found inside
the searched window and bounds, never that the configuration is absent
from the infinite set.  Every returned witness is re-checked by direct
membership before it leaves the module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .density import as_fraction
from .natset import ABS_BOUND, BoundError, NatSet


class WitnessError(AssertionError):
    """A search produced a witness that fails its own membership check."""


@dataclass(frozen=True)
class GpWitness:
    n: int
    m: int
    length: int

    def elements(self) -> tuple[int, ...]:
        return tuple(self.n * self.m**j for j in range(1, self.length + 1))

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "length": self.length, "elements": list(self.elements())}


@dataclass(frozen=True)
class ApWitness:
    start: int
    step: int
    length: int

    def elements(self) -> tuple[int, ...]:
        return tuple(self.start + i * self.step for i in range(self.length))

    def to_json(self) -> dict:
        return {"start": self.start, "step": self.step, "length": self.length}


@dataclass(frozen=True)
class GeoArithWitness:
    a: int
    c: int
    d: int
    length: int

    def elements(self) -> tuple[int, ...]:
        ell = self.length
        return tuple(sorted({self.c * (self.a + i * self.d) ** j for i in range(1, ell + 1) for j in range(1, ell + 1)}))

    def to_json(self) -> dict:
        return {"a": self.a, "c": self.c, "d": self.d, "length": self.length, "elements": list(self.elements())}


@dataclass(frozen=True)
class GeoArithResult:
    witness: GeoArithWitness | None
    truncated: bool


def _certify(witness, A: NatSet):
    missing = [x for x in witness.elements() if x not in A]
    if missing:
        raise WitnessError(f"{witness} fails membership at {missing}")
    return witness


def find_gp(A: NatSet, length: int, m_bound: int) -> GpWitness | None:
    """Lexicographically least (m, n) with {nm, ..., nm^length} inside A.

    m runs over 2..m_bound in the outer loop, n in the inner loop, which
    stops as soon as n * m^length leaves the window.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    hi = A.hi
    for m in range(2, m_bound + 1):
        top = m**length
        if top > hi:
            break
        powers = [m**j for j in range(1, length + 1)]
        for n in range(1, hi // top + 1):
            if all(n * p in A for p in powers):
                return _certify(GpWitness(n, m, length), A)
    return None


def _iter_aps(E: NatSet, length: int) -> Iterator[ApWitness]:
    members = E.members
    if not members:
        return
    if length == 1:
        for a in members:
            yield ApWitness(a, 1, 1)
        return
    top = members[-1]
    for a in members:
        for step in range(1, (top - a) // (length - 1) + 1):
            if all(a + i * step in E for i in range(1, length)):
                yield ApWitness(a, step, length)


def ap_search(E: NatSet, length: int) -> ApWitness | None:
    """Least (start, step) arithmetic progression of the given length in E."""
    if length < 1:
        raise ValueError("length must be >= 1")
    w = next(_iter_aps(E, length), None)
    return None if w is None else _certify(w, E)


def gp_via_density(A: NatSet, m: int, L: int, eps, length: int, s_bound: int) -> GpWitness | None:
    """Find a GP through a dense dilated power grid.

    For s = 1..s_bound, if |s{m, ..., m^L} & A| >= eps*L, the exponent set
    E = {e : s m^e in A} is searched for arithmetic progressions; an AP
    (e0, delta) gives the GP with ratio m^delta and n = s m^(e0 - delta),
    provided e0 >= delta.
    """
    eps = as_fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    if m < 2 or L < 1 or length < 1:
        raise ValueError("need m >= 2, L >= 1, length >= 1")
    if m**L * s_bound > ABS_BOUND:
        raise BoundError(f"{m}^{L} * {s_bound} exceeds absolute bound")
    need = eps * L
    for s in range(1, s_bound + 1):
        exps = [e for e in range(1, L + 1) if s * m**e in A]
        if len(exps) < need:
            continue
        E = NatSet(exps, L)
        for ap in _iter_aps(E, length):
            if ap.start < ap.step:
                continue
            w = GpWitness(s * m ** (ap.start - ap.step), m**ap.step, length)
            return _certify(w, A)
    return None


def find_geo_arith(A: NatSet, length: int, a_bound: int, c_bound: int, d_bound: int) -> GeoArithResult:
    """Least (a, c, d), in that lexicographic order, with {c(a+id)^j : 1 <= i, j <= length} in A.

    Windows never exceed the absolute bound, so triples past it could not
    fit anyway; ``truncated`` records that the requested box reached that
    far and was cut off there rather than searched.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    hi = A.hi
    truncated = c_bound * (a_bound + length * d_bound) ** length > ABS_BOUND
    rng = range(1, length + 1)
    for a in range(1, a_bound + 1):
        for c in range(1, c_bound + 1):
            for d in range(1, d_bound + 1):
                big = c * (a + length * d) ** length
                if big > hi:
                    break
                if all(c * (a + i * d) ** j in A for i in rng for j in rng):
                    return GeoArithResult(_certify(GeoArithWitness(a, c, d, length), A), truncated)
    return GeoArithResult(None, truncated)


def gp_from_geo_arith(w: GeoArithWitness, i: int = 1) -> GpWitness:
    """Row i of a geo-arithmetic grid: c(a+id)^j, j = 1..length, is a GP."""
    return GpWitness(w.c, w.a + i * w.d, w.length)


def hit_fraction(A: NatSet, elements) -> Fraction:
    elements = list(elements)
    return Fraction(sum(1 for x in elements if x in A), len(elements))
