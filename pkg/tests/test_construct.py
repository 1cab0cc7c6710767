from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from gplab.construct import (
    CapacityError,
    Poly,
    build_example_8_2,
    build_example_8_4,
    check_example_8_2,
    check_example_8_4,
    ip2_free_scan,
    plan_ip2_free,
    plan_thick_family,
    poly_diophantine,
    poly_diophantine_set,
)
from gplab.dynsim import sqrt2_minus_1
from gplab.ipcalc import contains_ip_r, is_ip_r_star_window
from gplab.natset import translate
from gplab.patterns import find_geo_arith


def _independent_cover_and_gaps(A, plan):
    """Checker written from the block list alone, sharing nothing with the builder."""
    S = set(A)
    cover = all(m in S or m + 1 in S for m in range(1, A.hi))
    runs = []
    for b in plan.blocks:
        vals = [m for m in range(1, A.hi // b.n + 1) if b.start <= m * b.n + b.t <= b.end]
        best = run = 0
        for m in vals:
            run = run + 1 if m * b.n + b.t not in S else 0
            best = max(best, run)
        runs.append(best)
    return cover, runs


def test_example_8_2_small_window():
    A, plan = build_example_8_2(1000, [(1, 2)])
    c = check_example_8_2(A, plan)
    assert c.ok and c.cover_ok
    first = plan.blocks[0]
    assert first.length >= 100
    assert c.block_gaps[0][2] >= 50
    cover, runs = _independent_cover_and_gaps(A, plan)
    assert cover and runs == [g for _, _, g, _ in c.block_gaps]


def test_example_8_2_large_window():
    A, plan = build_example_8_2(10**5, [(1, 2), (2, 2), (1, 3)])
    c = check_example_8_2(A, plan)
    assert c.ok
    assert set(c.pair_gaps) == {(1, 2), (2, 2), (1, 3)}
    # frozen from the independent checker
    assert c.pair_gaps == {(1, 2): 4050, (2, 2): 6400, (1, 3): 3200}
    cover, runs = _independent_cover_and_gaps(A, plan)
    assert cover and max(runs) == 6400


def test_example_8_2_capacity():
    with pytest.raises(CapacityError):
        build_example_8_2(10, [(1, 2), (2, 3), (3, 4), (4, 5)])
    with pytest.raises(ValueError):
        plan_thick_family(1000, [(1, 1)])
    with pytest.raises(ValueError):
        plan_thick_family(1000, [])


def test_thick_plan_invariants():
    plan = plan_thick_family(10**5, [(1, 2), (2, 2), (1, 3)])
    blocks = plan.blocks
    assert blocks[0].start >= 3
    for a, b in zip(blocks, blocks[1:]):
        assert b.start - a.end >= 3
    seen = {}
    for b in blocks:
        rho = seen[(b.t, b.n)] = seen.get((b.t, b.n), 0) + 1
        assert b.length >= rho * b.n * b.t
    lengths = {}
    for b in blocks:
        lengths.setdefault((b.t, b.n), []).append(b.length)
    assert all(ls == sorted(ls) and len(set(ls)) == len(ls) for ls in lengths.values())


def test_example_8_4():
    ex = build_example_8_4(10**4)
    B = set(ex.B)
    assert sorted(B) == [3, 7, 15, 37, 73, 109, 219, 439, 659, 879, 1769, 3536, 5303, 7070, 8837]
    assert not any(x + y in B for x in B for y in B if x <= y)
    assert contains_ip_r(ex.B, 2, ex.B.hi) is None and ip2_free_scan(ex.B)
    assert oracles.least_fs_inside(B, 2, 200) is None
    c = check_example_8_4(ex)
    assert c.ok and c.ip2_free and c.ip2_star
    assert {1, -1} <= set(c.translates)
    k = ex.witnesses[1].r
    v = is_ip_r_star_window(translate(ex.A, 1), k)
    assert v is not None
    shifted = set(translate(ex.A, 1))
    assert not oracles.fs(v.generators) & shifted
    with pytest.raises(CapacityError):
        build_example_8_4(999)


def test_ip2_free_plan_growth():
    plan = plan_ip2_free(10**6)
    assert plan.m[:6] == (1, -1, 1, -1, 2, -2)
    assert plan.r[0] == 2
    for n, (r0, r1) in enumerate(zip(plan.r, plan.r[1:]), 1):
        assert r1 > 2 * (r0 * n + max(abs(m) for m in plan.m[: n + 1]))


def test_poly_examples():
    rot = sqrt2_minus_1()
    p = Poly((0, 1), rot.alpha, rot.prec)
    S = poly_diophantine_set([p], [(0, Fraction(1, 2))], 10)
    assert {1, 3} <= set(S) and 2 not in S
    assert S.members == (1, 3, 5, 6, 8, 10)
    full = poly_diophantine([Poly((0, 0, 1), rot.alpha, rot.prec)], [(0, 1)], 50)
    assert full.set.members == tuple(range(1, 51)) and not full.excluded
    with pytest.raises(ValueError):
        Poly((0, 1))
    with pytest.raises(ValueError):
        Poly((3,), rot.alpha)
    with pytest.raises(ValueError):
        poly_diophantine([p], [], 10)


def test_poly_boundary_exclusion():
    res = poly_diophantine([Poly((0, Fraction(1, 3)))], [(0, Fraction(1, 3))], 12)
    # n/3 mod 1 is 0, 1/3 or 2/3; the first two are endpoints
    assert res.excluded == tuple(n for n in range(1, 13) if n % 3 != 2)
    assert res.set.members == ()


def test_poly_set_feeds_geo_arith():
    rot = sqrt2_minus_1()
    A = poly_diophantine_set([Poly((0, 1), rot.alpha, rot.prec)], [(0, Fraction(1, 2))], 10**4)
    res = find_geo_arith(A, 2, 30, 30, 30)
    assert res.witness is not None
    for x in res.witness.elements():
        assert (x * rot.alpha) % 1 < Fraction(1, 2)


@settings(max_examples=40)
@given(st.integers(300, 5000), st.lists(st.tuples(st.integers(1, 3), st.integers(2, 4)), min_size=1, max_size=3, unique=True))
def test_example_8_2_always_passes_its_checker(hi, pairs):
    try:
        A, plan = build_example_8_2(hi, pairs, scale=5)
    except CapacityError:
        return
    assert check_example_8_2(A, plan).ok
    cover, runs = _independent_cover_and_gaps(A, plan)
    assert cover
    assert all(run >= b.length // b.n - 1 for run, b in zip(runs, plan.blocks))
