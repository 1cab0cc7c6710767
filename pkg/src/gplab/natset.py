"""Finite sets of positive integers over a bounded window [1, hi].

Every other module in the package consumes :class:`NatSet`.  Values are
immutable; the storage is either a byte map (dense sets) or a sorted tuple
plus a frozenset (sparse sets), picked by the member-count/window ratio.
"""

from __future__ import annotations

import warnings
from math import gcd
from dataclasses import dataclass
from itertools import compress
from pathlib import Path
from typing import Iterable, Iterator

ABS_BOUND = 2**62
DENSE_RATIO = 1 / 64

# byte 0 -> "0", byte 1 -> "1"; used to turn a byte map into a bit mask
_BITCHARS = bytes.maketrans(b"\x00\x01", b"01")


class BoundError(OverflowError):
    """An intermediate product exceeded the configured absolute bound."""


class SetFormatError(ValueError):
    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line!r}")
        self.lineno = lineno


def check_bound(value: int, bound: int = ABS_BOUND) -> int:
    if abs(value) > bound:
        raise BoundError(f"{value} exceeds absolute bound {bound}")
    return value


@dataclass(frozen=True)
class Window:
    """The truncation [lo, hi] of the positive integers.

    ``hi == 0`` is allowed and denotes the empty window; it arises from
    quotients and translates of small windows.
    """

    hi: int
    lo: int = 1

    def __post_init__(self):
        if self.lo != 1:
            raise ValueError("windows always start at 1")
        if self.hi < 0:
            raise ValueError(f"window upper end must be >= 0, got {self.hi}")
        check_bound(self.hi)

    def __contains__(self, m: int) -> bool:
        return 1 <= m <= self.hi

    def __len__(self) -> int:
        return self.hi


class NatSet:
    """Immutable finite subset of [1, hi]; iteration is ascending."""

    __slots__ = ("_hi", "_mask", "_members", "_lookup", "_bits")

    def __init__(self, members: Iterable[int] = (), hi: int | None = None):
        items = sorted(set(int(m) for m in members))
        if hi is None:
            hi = items[-1] if items else 0
        if items and (items[0] < 1 or items[-1] > hi):
            raise ValueError(f"members must lie in [1, {hi}]")
        self._init(hi, items=tuple(items))

    def _init(self, hi: int, items: tuple | None = None, mask: bytearray | None = None):
        Window(hi)
        self._hi = hi
        self._bits = None
        if mask is not None:
            count = mask.count(1)
            if hi and count / hi >= DENSE_RATIO:
                self._mask, self._members, self._lookup = mask, None, None
                return
            items = tuple(compress(range(hi + 1), mask))
        if hi and len(items) / hi >= DENSE_RATIO:
            mask = bytearray(hi + 1)
            for m in items:
                mask[m] = 1
            self._mask, self._members, self._lookup = mask, items, None
        else:
            self._mask, self._members, self._lookup = None, items, frozenset(items)

    @classmethod
    def from_mask(cls, mask: bytearray, hi: int | None = None) -> "NatSet":
        """Build from a byte map where ``mask[m] == 1`` marks membership.

        ``mask[0]`` is ignored.  The mask is taken over, not copied.
        """
        if hi is None:
            hi = len(mask) - 1
        if len(mask) != hi + 1:
            raise ValueError("mask length must be hi + 1")
        mask[0] = 0
        obj = cls.__new__(cls)
        obj._init(hi, mask=mask)
        return obj

    @classmethod
    def full(cls, hi: int) -> "NatSet":
        mask = bytearray(b"\x01") * (hi + 1)
        return cls.from_mask(mask, hi)

    @property
    def hi(self) -> int:
        return self._hi

    @property
    def window(self) -> Window:
        return Window(self._hi)

    @property
    def is_dense(self) -> bool:
        return self._mask is not None

    @property
    def members(self) -> tuple[int, ...]:
        if self._members is None:
            self._members = tuple(compress(range(self._hi + 1), self._mask))
        return self._members

    def __contains__(self, m) -> bool:
        if self._mask is not None:
            return 0 < m <= self._hi and self._mask[m] == 1
        return m in self._lookup

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        if self._members is not None:
            return len(self._members)
        return self._mask.count(1)

    def __bool__(self) -> bool:
        return len(self) > 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, NatSet):
            return NotImplemented
        if self._hi != other._hi:
            return False
        if self._mask is not None and other._mask is not None:
            return self._mask == other._mask
        return self.members == other.members

    def __hash__(self) -> int:
        return hash((self._hi, self.members))

    def __repr__(self) -> str:
        shown = self.members[:8]
        tail = ", ..." if len(self) > 8 else ""
        return f"NatSet({{{', '.join(map(str, shown))}{tail}}}, hi={self._hi})"

    def byte_map(self) -> bytearray:
        """A fresh byte map of length hi + 1 (index 0 unused)."""
        if self._mask is not None:
            return bytearray(self._mask)
        mask = bytearray(self._hi + 1)
        for m in self.members:
            mask[m] = 1
        return mask

    @property
    def bits(self) -> int:
        """Membership as a Python int with bit m set for each member m."""
        if self._bits is None:
            mask = self.byte_map()
            mask.reverse()
            self._bits = int(mask.translate(_BITCHARS), 2) if mask else 0
        return self._bits

    def complement(self) -> "NatSet":
        return NatSet.from_mask(_flip(self.byte_map()), self._hi)

    def restrict(self, hi: int) -> "NatSet":
        """Intersect with [1, hi] and shrink the window to hi (hi <= self.hi)."""
        if hi > self._hi:
            raise ValueError("restrict can only shrink the window")
        if self._mask is not None:
            return NatSet.from_mask(self._mask[: hi + 1], hi)
        return NatSet((m for m in self.members if m <= hi), hi)

    def __and__(self, other: "NatSet") -> "NatSet":
        hi = min(self._hi, other._hi)
        return NatSet((m for m in self.members if m <= hi and m in other), hi)

    def __or__(self, other: "NatSet") -> "NatSet":
        return NatSet(set(self.members) | set(other.members), max(self._hi, other._hi))

    def density(self):
        from fractions import Fraction

        return Fraction(len(self), self._hi) if self._hi else Fraction(0)


_FLIP = bytes.maketrans(b"\x00\x01", b"\x01\x00")


def _flip(mask: bytearray) -> bytearray:
    return mask.translate(_FLIP)


@dataclass(frozen=True)
class PeriodicSet:
    """{m in N : m mod modulus in residues}, represented without a window."""

    modulus: int
    residues: frozenset

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        res = frozenset(int(r) for r in self.residues)
        if any(not 0 <= r < self.modulus for r in res):
            raise ValueError("residues must lie in [0, modulus)")
        object.__setattr__(self, "residues", res)

    def __contains__(self, m: int) -> bool:
        return m >= 1 and m % self.modulus in self.residues

    def quotient(self, n: int) -> "PeriodicSet":
        return PeriodicSet(self.modulus, frozenset(r for r in range(self.modulus) if r * n % self.modulus in self.residues))

    def translate(self, t: int) -> "PeriodicSet":
        """{m : m + t in P}; exact only away from the left edge (m + t >= 1)."""
        return PeriodicSet(self.modulus, frozenset((r - t) % self.modulus for r in self.residues))


@dataclass(frozen=True)
class CosetSpec:
    """A coset n*S of a multiplicative subsemigroup S.

    ``kind`` is ``"full"`` (S = N), ``"coprime"`` (S_N, integers coprime to
    the modulus) or ``"one"`` (S_{N,1}, integers congruent to 1 mod N).
    """

    n: int = 1
    kind: str = "full"
    modulus: int = 1

    def __post_init__(self):
        if self.n < 1 or self.modulus < 1:
            raise ValueError("coset dilation and modulus must be positive")
        if self.kind not in ("full", "coprime", "one"):
            raise ValueError(f"unknown semigroup kind {self.kind!r}")
        if self.kind == "full" and self.modulus != 1:
            raise ValueError("the full semigroup has modulus 1")

    @classmethod
    def coprime(cls, N: int, n: int = 1) -> "CosetSpec":
        return cls(n, "coprime", N)

    @classmethod
    def congruent_one(cls, N: int, n: int = 1) -> "CosetSpec":
        return cls(n, "one", N)

    def in_semigroup(self, s: int) -> bool:
        if s < 1:
            return False
        if self.kind == "coprime":
            return gcd(s, self.modulus) == 1
        if self.kind == "one":
            return s % self.modulus == 1 % self.modulus
        return True

    def __contains__(self, m: int) -> bool:
        return m >= 1 and m % self.n == 0 and self.in_semigroup(m // self.n)

    @property
    def period(self) -> int:
        """Membership in S depends only on s mod this number."""
        return self.modulus

    def describe(self) -> str:
        sg = {"full": "N", "coprime": f"S_{self.modulus}", "one": f"S_{{{self.modulus},1}}"}[self.kind]
        return sg if self.n == 1 else f"{self.n}*{sg}"


def quotient(A: NatSet, n: int) -> NatSet:
    """A / n = {m : mn in A}, on the window [1, hi // n]."""
    if n < 1:
        raise ValueError("quotient needs n >= 1")
    if n == 1:
        return A
    hi = A.hi // n
    if A.is_dense:
        mask = A._mask[::n][: hi + 1]
        return NatSet.from_mask(bytearray(mask), hi)
    return NatSet((m // n for m in A.members if m % n == 0), hi)


def translate(A: NatSet, t: int) -> NatSet:
    """A - t = {m >= 1 : m + t in A}, on the window [1, hi - t].

    Positive t shrinks the window and drops members that fall below 1;
    negative t grows it, so that every m in the new window has its preimage
    m + t inside the old one.  A shift past the right end (t >= hi) gives
    the empty window.
    """
    hi = max(A.hi - t, 0)
    check_bound(hi)
    if t == 0:
        return A
    if A.is_dense:
        if t > 0:
            mask = bytearray(1) + A._mask[t + 1 :]
        else:
            mask = bytearray(-t) + A._mask
        return NatSet.from_mask(mask[: hi + 1], hi)
    return NatSet((m - t for m in A.members if m - t >= 1 and m - t <= hi), hi)


def from_periodic(P: PeriodicSet, w: Window | int) -> NatSet:
    hi = w.hi if isinstance(w, Window) else int(w)
    q = P.modulus
    mask = bytearray(hi + 1)
    for r in P.residues:
        start = r if r >= 1 else q
        mask[start::q] = b"\x01" * len(range(start, hi + 1, q))
    return NatSet.from_mask(mask, hi)


def interval(lo: int, hi_member: int, hi: int | None = None) -> NatSet:
    """{lo, ..., hi_member} on the window [1, hi] (default hi_member)."""
    return NatSet(range(lo, hi_member + 1), hi_member if hi is None else hi)


# -- text format -----------------------------------------------------------

def parse_set_text(text: str) -> NatSet:
    """Parse the one-integer-per-line set format.

    ``#`` starts a comment line; the first non-comment line may be
    ``window <hi>``.  Without a window line, hi is the largest member.
    """
    hi = None
    seen: set[int] = set()
    dupes = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if first and line.startswith("window"):
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise SetFormatError(lineno, raw, "malformed window line")
            hi = int(parts[1])
            first = False
            continue
        first = False
        try:
            m = int(line)
        except ValueError:
            raise SetFormatError(lineno, raw, "not a decimal integer") from None
        if m < 1:
            raise SetFormatError(lineno, raw, "members must be positive")
        if hi is not None and m > hi:
            raise SetFormatError(lineno, raw, f"member outside window {hi}")
        if m in seen:
            dupes.append(m)
        seen.add(m)
    if dupes:
        warnings.warn(f"duplicate members dropped: {sorted(set(dupes))}", stacklevel=2)
    return NatSet(seen, hi)


def emit_set_text(A: NatSet, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"window {A.hi}")
    lines.extend(str(m) for m in A.members)
    return "\n".join(lines) + "\n"


def parse_set_file(path) -> NatSet:
    return parse_set_text(Path(path).read_text(encoding="utf-8"))


def write_set_file(path, A: NatSet, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(emit_set_text(A, comments), encoding="utf-8")
