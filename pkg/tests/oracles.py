"""Brute-force reference implementations used to derive and freeze expected values.

Nothing here imports the package; every function works on plain Python
sets, lists and Fractions by direct enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import gcd


def fs(gens):
    out = set()
    for r in range(1, len(gens) + 1):
        for idx in combinations(range(len(gens)), r):
            out.add(sum(gens[i] for i in idx))
    return out


def least_fs_inside(target: set, r: int, gen_bound: int):
    """Least non-decreasing r-tuple (lexicographic) with FS inside target."""
    for gens in combinations_with_replacement(range(1, gen_bound + 1), r):
        if fs(gens) <= target:
            return gens
    return None


def least_fs_avoiding(A: set, hi: int, r: int):
    comp = set(range(1, hi + 1)) - A
    return least_fs_inside(comp, r, hi)


def window_rank(A: set, hi: int, cap: int = 6):
    for r in range(1, cap + 1):
        if least_fs_avoiding(A, hi, r) is None:
            return r
    return None


def find_gp(A: set, hi: int, length: int, m_bound: int):
    for m in range(2, m_bound + 1):
        for n in range(1, hi + 1):
            if all(n * m**j in A for j in range(1, length + 1)):
                return n, m
    return None


def find_geo_arith(A: set, length: int, bound: int):
    """Least (a, c, d) in lexicographic order, all parameters <= bound."""
    for a in range(1, bound + 1):
        for c in range(1, bound + 1):
            for d in range(1, bound + 1):
                if all(c * (a + i * d) ** j in A for i in range(1, length + 1) for j in range(1, length + 1)):
                    return a, c, d
    return None


def ap_search(E: set, length: int):
    if not E:
        return None
    top = max(E)
    for a in sorted(E):
        for step in range(1, top + 1):
            if all(a + i * step in E for i in range(length)):
                return a, step
    return None


def rotation_returns(k: int, x: int, U: set, hi: int, power: int = 1):
    return {n for n in range(1, hi + 1) if (x + power * n) % k in U}


def torus_returns(alpha: Fraction, x: Fraction, lo: Fraction, up: Fraction, hi: int, power: int = 1):
    return {n for n in range(1, hi + 1) if lo <= (x + power * n * alpha) % 1 < up}


def quotient(A: set, n: int):
    return {m // n for m in A if m % n == 0}


def translate(A: set, t: int):
    return {m - t for m in A if m - t >= 1}


def gap(A: set, hi: int):
    if not A:
        return None
    pts = [0] + sorted(A) + [hi + 1]
    return max(b - a for a, b in zip(pts, pts[1:]))


def thick_dilation(modulus: int, residues: set, F, semigroup) -> int | None:
    """Least s in one period lcm with s*F inside the periodic set."""
    for s in range(1, 10 * modulus * 12 + 1):
        if semigroup(s) and all((s * f) % modulus in residues for f in F):
            return s
    return None


def translate_witness_ok(N, t, F, w) -> bool:
    """Recheck a witness dict {a, b, c, F_prime, f0, K} from the defining identities."""
    g = gcd(N, t)
    K = N // g
    Fp = list(w["F_prime"])
    if w["K"] != K or not set(Fp) <= set(F):
        return False
    sizes = {}
    for f in F:
        sizes[f % K] = sizes.get(f % K, 0) + 1
    if len(Fp) != max(sizes.values()):
        return False
    if any((f - w["f0"]) % K for f in Fp) or any(gcd(f, K) != 1 for f in Fp):
        return False
    P = 1
    for f in Fp:
        P *= f
    if w["b"] * P - w["a"] * K != Fraction(t, g):
        return False
    if gcd(w["c"], K) != 1 or w["b"] < 1 or w["c"] < 1:
        return False
    return all((w["c"] * g * f - w["a"] * N) % (f * N) == t % (f * N) for f in Fp)


def orbit_components(k: int, m):
    """Diagonal orbit closure and its pieces by plain iteration; pieces are keyed by the diagonal label mod gcd(lcm(m), k)."""
    from math import lcm

    ell = len(m)
    M = lcm(*m)
    d = gcd(M, k)
    pieces = {}
    for a in range(k):
        p = (a,) * ell
        seen = set()
        while p not in seen:
            seen.add(p)
            p = tuple((c + e) % k for c, e in zip(p, m))
        pieces.setdefault(a % d, set()).update(seen)
    return pieces
