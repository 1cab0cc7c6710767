import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from gplab.natset import ABS_BOUND, NatSet, PeriodicSet, from_periodic, interval
from gplab.patterns import (
    GeoArithWitness,
    ap_search,
    find_geo_arith,
    find_gp,
    gp_from_geo_arith,
    gp_via_density,
    hit_fraction,
)


def small_sets(max_hi=120):
    return st.integers(1, max_hi).flatmap(
        lambda hi: st.tuples(st.just(hi), st.sets(st.integers(1, hi), max_size=hi))
    )


def test_find_gp_examples():
    w = find_gp(NatSet({2, 4, 8}, 8), 3, 10)
    assert (w.n, w.m) == (1, 2)
    w = find_gp(NatSet({5, 6, 12, 24, 50}), 3, 10)
    assert (w.n, w.m) == (3, 2) and w.elements() == (6, 12, 24)
    odds = from_periodic(PeriodicSet(2, {1}), 100)
    w = find_gp(odds, 2, 10)
    assert (w.n, w.m) == (1, 3) and w.elements() == (3, 9)
    with pytest.raises(ValueError):
        find_gp(odds, 0, 10)


def test_find_geo_arith_examples():
    res = find_geo_arith(interval(1, 100), 2, 5, 5, 5)
    assert (res.witness.a, res.witness.c, res.witness.d) == (1, 1, 1)
    assert set(res.witness.elements()) == {2, 4, 3, 9}
    evens = from_periodic(PeriodicSet(2, {0}), 100)
    res = find_geo_arith(evens, 2, 5, 5, 5)
    assert (res.witness.a, res.witness.c, res.witness.d) == (1, 2, 1)
    assert set(res.witness.elements()) == {4, 8, 6, 18}
    assert oracles.find_geo_arith(set(evens), 2, 5) == (1, 2, 1)
    assert find_geo_arith(NatSet({1}), 2, 5, 5, 5).witness is None


def test_find_geo_arith_reports_truncation():
    res = find_geo_arith(interval(1, 100), 3, 2, 2, 50)
    assert res.witness is not None and not res.truncated
    A = NatSet({1}, 10)
    res = find_geo_arith(A, 4, 1, 1, 2**20)
    assert res.witness is None and res.truncated
    assert (1 + 4 * 2**20) ** 4 > ABS_BOUND


def test_ap_search_examples():
    w = ap_search(NatSet({1, 2, 3}), 3)
    assert (w.start, w.step, w.length) == (1, 1, 3)
    w = ap_search(NatSet({1, 3, 5, 7}), 4)
    assert (w.start, w.step, w.length) == (1, 2, 4)
    assert ap_search(NatSet({1, 2, 4, 8}), 3) is None
    assert oracles.ap_search({1, 2, 4, 8}, 3) is None


def test_gp_via_density_examples():
    A = NatSet([2**e for e in range(1, 31)], 2**30)
    w = gp_via_density(A, 2, 30, 1, 3, 1)
    assert w is not None and all(x in A for x in w.elements())
    assert w.m == 2

    B = NatSet([3 * 2**e for e in range(0, 11, 2)], 3 * 2**10)
    w = gp_via_density(B, 2, 10, Fraction(1, 2), 3, 3)
    assert w is not None and w.m == 4 and all(x in B for x in w.elements())

    with pytest.raises(ValueError):
        gp_via_density(A, 2, 30, 0, 3, 1)
    with pytest.raises(ValueError):
        gp_via_density(A, 2, 30, Fraction(3, 2), 3, 1)


def test_gp_via_density_dense_random_corpus():
    hits = 0
    for seed in range(50):
        rng = random.Random(seed)
        exps = [e for e in range(1, 31) if rng.random() < 0.9]
        A = NatSet([2**e for e in exps], 2**30)
        has_ap = oracles.ap_search(set(exps), 3) is not None
        w = gp_via_density(A, 2, 30, Fraction(1, 2), 3, 1)
        if w is not None:
            hits += 1
            assert all(x in A for x in w.elements())
        else:
            # a miss is only acceptable when the exponent set has no 3-term AP at all
            assert not has_ap
    assert hits == 50


def test_gp_from_geo_arith_rows():
    w = GeoArithWitness(1, 2, 1, 2)
    gp = gp_from_geo_arith(w, 2)
    assert gp.elements() == (6, 18)
    assert hit_fraction(NatSet({6}, 20), gp.elements()) == Fraction(1, 2)


@settings(max_examples=200)
@given(small_sets(), st.integers(1, 4), st.integers(2, 10))
def test_find_gp_matches_oracle(data, length, m_bound):
    hi, members = data
    w = find_gp(NatSet(members, hi), length, m_bound)
    want = oracles.find_gp(members, hi, length, m_bound)
    assert (None if w is None else (w.n, w.m)) == want


@settings(max_examples=200)
@given(small_sets(60), st.integers(1, 4))
def test_ap_search_matches_oracle(data, length):
    hi, members = data
    w = ap_search(NatSet(members, hi), length)
    want = oracles.ap_search(members, length)
    if length == 1 and want is not None:
        want = (want[0], 1)
    assert (None if w is None else (w.start, w.step)) == want


@settings(max_examples=100)
@given(small_sets(200))
def test_find_geo_arith_matches_oracle(data):
    hi, members = data
    res = find_geo_arith(NatSet(members, hi), 2, 4, 4, 4)
    want = oracles.find_geo_arith(members, 2, 4)
    assert (None if res.witness is None else (res.witness.a, res.witness.c, res.witness.d)) == want
