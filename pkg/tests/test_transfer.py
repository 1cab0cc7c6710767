from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from gplab.dynsim import FiniteRotation, return_set
from gplab.natset import NatSet, PeriodicSet, from_periodic, interval
from gplab.transfer import (
    TranslateWitness,
    iprstar_bound_check,
    solve_translate_witness,
    transfer_target,
    verify_density_transfer,
    verify_witness,
)


def test_witness_examples():
    w = solve_translate_witness(4, 2, {3, 5})
    assert (w.K, w.F_prime, w.f0, w.a, w.b, w.c) == (2, (3, 5), 3, 7, 1, 3)
    assert 1 * 15 - 7 * 2 == 1
    assert (3 * 2 * 3 - 28) % 12 == 2 and (30 - 28) % 20 == 2

    w = solve_translate_witness(1, 0, {2, 3})
    assert (w.K, w.a, w.b, w.c) == (1, 6, 1, 2)
    assert (4 - 6) % 2 == 0 and (6 - 6) % 3 == 0

    w = solve_translate_witness(2, 1, {3})
    assert (w.K, w.a, w.b, w.c) == (2, 1, 1, 1)


def test_witness_errors():
    with pytest.raises(ValueError):
        solve_translate_witness(0, 1, {1})
    with pytest.raises(ValueError):
        solve_translate_witness(4, 1, set())
    with pytest.raises(ValueError):
        solve_translate_witness(4, 1, {2, 3})


def test_largest_class_and_tie_break():
    w = solve_translate_witness(3, 1, [1, 2, 4, 5, 7])
    assert w.F_prime == (1, 4, 7) and w.f0 == 1
    w = solve_translate_witness(3, 1, [2, 4])
    assert w.F_prime == (4,)
    assert verify_witness(w, [2, 4]) == []
    assert "largest class" in verify_witness(w._replace(F_prime=(4,)), [1, 4, 7])


def test_verifier_catches_tampering():
    w = solve_translate_witness(4, 2, {3, 5})
    assert verify_witness(w, {3, 5}) == []
    assert "bezout" in verify_witness(w._replace(a=w.a + 1))
    assert any(p.startswith("congruence") for p in verify_witness(w._replace(c=w.c + 1)))
    assert "c coprime" in verify_witness(w._replace(c=2))
    assert "positivity" in verify_witness(w._replace(b=0))


def test_witness_json():
    w = solve_translate_witness(4, 2, {3, 5})
    assert w.to_json() == {"N": 4, "t": 2, "K": 2, "F_prime": [3, 5], "f0": 3, "a": 7, "b": 1, "c": 3}
    assert oracles.translate_witness_ok(4, 2, {3, 5}, w.to_json())


def test_density_transfer_examples():
    A = from_periodic(PeriodicSet(4, {0}), 4000)
    # 0 is not in A, so 1 is missing from (A + 2)/2
    assert set(transfer_target(A, 2, 4)) == set(range(3, 2002, 2))
    res = verify_density_transfer(A, 2, 4, {3, 5}, 50)
    assert res.ratio == 1 and res.s == 1 and gcd(res.s, 2) == 1

    res = verify_density_transfer(interval(1, 1000), 0, 1, {2, 7, 9}, 50)
    assert res.ratio == 1 and res.s == 1

    odds = from_periodic(PeriodicSet(2, {1}), 1000)
    res = verify_density_transfer(odds, 1, 2, {3}, 50)
    assert res.ratio == 0 and res.s is not None and res.s % 2 == 1

    res = verify_density_transfer(NatSet((), 100), 1, 2, {3}, 5)
    assert res.ratio == 0 and res.s is None and res.diagnostic


def test_bound_examples():
    evens = from_periodic(PeriodicSet(2, {0}), 2000)
    N, r, rows = iprstar_bound_check(evens, 2, 0)
    assert (N, r) == (2, 2)
    (row,) = rows
    assert row.t == 0 and row.observed == 1 and row.bound == Fraction(2, 2**6 * 2)

    N, r, rows = iprstar_bound_check(interval(1, 2000), 1, 1)
    assert N == 1 and all(row.observed == 1 and not row.below for row in rows)

    four = return_set(FiniteRotation(4), 0, {0}, 2000)
    N, r, rows = iprstar_bound_check(four, None, 2)
    row = [row for row in rows if row.t == 2][0]
    assert row.observed == 1 and row.K == N // gcd(N, 2)


@settings(max_examples=500)
@given(
    st.integers(1, 12),
    st.integers(-12, 12),
    st.lists(st.integers(1, 30), min_size=1, max_size=4, unique=True),
)
def test_witness_always_verifies(N, t, F):
    K = N // gcd(N, t)
    F = [f for f in F if gcd(f, K) == 1]
    if not F:
        return
    w = solve_translate_witness(N, t, F)
    assert isinstance(w, TranslateWitness)
    assert verify_witness(w, F) == []
    assert oracles.translate_witness_ok(N, t, F, w.to_json())
    for n in range(-3, 4):
        s = K * n + w.c
        if s > 0:
            assert gcd(s, K) == 1


@settings(max_examples=150)
@given(
    st.integers(1, 6),
    st.integers(-6, 6),
    st.integers(1, 12).flatmap(lambda q: st.tuples(st.just(q), st.sets(st.integers(0, q - 1), min_size=1))),
)
def test_transfer_ratio_matches_brute_force(N, t, P):
    q, residues = P
    A = from_periodic(PeriodicSet(q, residues), 600)
    K = N // gcd(N, t)
    F = [f for f in (1, 5, 7) if gcd(f, K) == 1]
    res = verify_density_transfer(A, t, N, F, 10)
    target = oracles.quotient(oracles.translate(set(A), -t), gcd(N, t))
    hi = (600 + t) // gcd(N, t)
    cands = [s for s in range(1, K * 10 + res.witness.c + 1) if (s - res.witness.c) % K == 0 and s * max(F) <= hi]
    best = max((Fraction(sum(s * f in target for f in F), len(F)) for s in cands), default=Fraction(0))
    assert res.ratio == best
