"""Finite sums sets, IP_r / IP_r* detection and window-relative ranks.

Generators may repeat: FS(x, x) = {x, 2x}.  Everything here is relative to
a finite window, so a "confirmed" IP_r* verdict only says that no finite
sums set with r generators *inside the window* avoids the set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .natset import NatSet, check_bound, quotient


class TooIpRich(RuntimeError):
    """The greedy finite sums set in the complement outgrew its size cap."""


class RankCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class FsSpec:
    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(int(x) for x in self.generators)
        if not gens or min(gens) < 1:
            raise ValueError("need at least one positive generator")
        object.__setattr__(self, "generators", gens)

    @property
    def r(self) -> int:
        return len(self.generators)

    def sums(self) -> frozenset:
        acc = {0}
        for x in self.generators:
            acc |= {s + x for s in acc}
        acc.discard(0)
        return frozenset(acc)

    def to_json(self) -> dict:
        return {"generators": list(self.generators), "sums": sorted(self.sums())}


def fs_expand(spec: FsSpec) -> NatSet:
    total = check_bound(sum(spec.generators))
    return NatSet(spec.sums(), total)


def _fs_inside(target_bits: int, hi: int, r: int, gen_bound: int) -> tuple[int, ...] | None:
    """Least non-decreasing r-tuple whose finite sums all lie in the target.

    The target is a bit mask of a subset of [1, hi].  A new generator y is
    admissible iff y + p is in the target for every subset sum p so far
    (p = 0 included), so the candidates are the AND of the shifted masks.
    """
    limit = min(gen_bound, hi)
    window = (1 << (limit + 1)) - 2

    def search(gens: list[int], sums: list[int], lo: int):
        if len(gens) == r:
            return tuple(gens)
        cand = window >> lo << lo
        for p in sums:
            cand &= target_bits >> p
            if not cand:
                return None
        while cand:
            low = cand & -cand
            y = low.bit_length() - 1
            cand ^= low
            found = search(gens + [y], sums + [p + y for p in sums], y)
            if found:
                return found
        return None

    return search([], [0], 1)


def contains_ip_r(A: NatSet, r: int, gen_bound: int) -> FsSpec | None:
    """Least non-decreasing generator tuple (entries <= gen_bound) with FS inside A."""
    if r < 1:
        raise ValueError("r must be >= 1")
    found = _fs_inside(A.bits, A.hi, r, gen_bound)
    return None if found is None else FsSpec(found)


def is_ip_r_star_window(A: NatSet, r: int) -> FsSpec | None:
    """Least FS(x_1..x_r) inside the window that misses A, or None if A meets them all."""
    if r < 1:
        raise ValueError("r must be >= 1")
    found = _fs_inside(A.complement().bits, A.hi, r, A.hi)
    return None if found is None else FsSpec(found)


def window_rank(A: NatSet, cap: int = 8) -> tuple[int | None, FsSpec | None]:
    """Least r <= cap with A window-IP_r*, plus the violator at r - 1.

    Returns (None, last violator) when the rank exceeds the cap.
    """
    violator = None
    for r in range(1, cap + 1):
        v = is_ip_r_star_window(A, r)
        if v is None:
            return r, violator
        violator = v
    return None, violator


@dataclass(frozen=True)
class RankReport:
    set_id: str
    hi: int
    rank: int
    witness: FsSpec | None
    scope: str = "window-relative"

    def to_json(self) -> dict:
        return {
            "set": self.set_id,
            "window": self.hi,
            "rank": self.rank,
            "witness": None if self.witness is None else self.witness.to_json(),
            "scope": self.scope,
        }


def rank_report(A: NatSet, set_id: str = "A", cap: int = 8) -> RankReport:
    r, witness = window_rank(A, cap)
    if r is None:
        raise RankCapExceeded(f"{set_id}: window rank exceeds cap {cap}")
    return RankReport(set_id, A.hi, r, witness)


@dataclass(frozen=True)
class CoverReport:
    generators: tuple[int, ...]
    shifts: tuple[int, ...]
    margin: int
    uncovered: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.generators)

    @property
    def translates(self) -> int:
        return len(self.shifts)

    @property
    def bound(self) -> int:
        return 2**self.s

    @property
    def ok(self) -> bool:
        return not self.uncovered and self.translates <= self.bound

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "F0": list(self.shifts),
            "margin": self.margin,
            "uncovered": list(self.uncovered),
            "translates": self.translates,
            "bound": self.bound,
        }


def covering_translates(A: NatSet, size_cap: int = 16) -> CoverReport:
    """Grow a maximal finite sums set F in the complement of A and check A - F0 covers.

    Candidates are tried in ascending order, repeats allowed.  F0 = F u {0};
    every m <= hi - max(F0) must satisfy m + f in A for some f in F0.  Points
    above that margin are not checked, since their extensions leave the
    window.
    """
    if not A:
        raise ValueError("A must be non-empty")
    hi = A.hi
    comp = A.complement()
    gens: list[int] = []
    sums = [0]
    y = 1
    while y <= hi:
        if all(y + p <= hi and (y + p) in comp for p in sums):
            gens.append(y)
            if len(gens) > size_cap:
                raise TooIpRich(f"complement holds an FS set with more than {size_cap} generators")
            sums = sorted(set(sums) | {p + y for p in sums})
            continue
        y += 1
    margin = max(sums)
    uncovered = tuple(m for m in range(1, hi - margin + 1) if not any(m + f in A for f in sums))
    return CoverReport(tuple(gens), tuple(sums), margin, uncovered)


def rank_minimizing_N(A: NatSet, n_bound: int, cap: int = 8) -> tuple[int, int]:
    """(N, rank(A/N)) minimising the window rank of A/n over n <= n_bound; least N on ties."""
    best = None
    for n in range(1, n_bound + 1):
        r, _ = window_rank(quotient(A, n), cap)
        if r is not None and (best is None or r < best[1]):
            best = (n, r)
    if best is None:
        raise RankCapExceeded(f"window rank of A/n exceeds {cap} for every n <= {n_bound}")
    return best
