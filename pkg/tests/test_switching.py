import itertools
import math
from fractions import Fraction

import pytest
from sympy import primerange

from dpip.decide import _combine
from dpip.lll import lll_reduce
from dpip.nf import Ideal, kummer_dedekind, prime_power
from dpip.switching import (
    landau_ratio,
    prime_ideal_count,
    prime_switch_density,
    stats_csv,
    switch_stats,
)


def test_stats_deterministic(K5):
    ring = Ideal.ring(K5)
    a = switch_stats(ring, [5], trials=30, seed=123)
    b = switch_stats(ring, [5], trials=30, seed=123)
    assert a == b
    c = switch_stats(ring, [5], trials=30, seed=124)
    assert c[0].switch_counts != a[0].switch_counts


def test_stats_single_trial(K5):
    s = switch_stats(Ideal.ring(K5), [10], trials=1, seed=9)[0]
    assert s.trials == 1
    assert len(s.switch_counts) == 1
    assert s.mean == s.switch_counts[0]


def test_stats_mean_bookkeeping(K5):
    s = switch_stats(Ideal.ring(K5), [10], trials=40, seed=5)[0]
    assert s.mean == Fraction(sum(s.switch_counts), 40)
    assert s.prime_fraction == Fraction(40 - s.capped_trials, sum(s.switch_counts))
    assert 0 <= s.prime_fraction <= 1
    assert s.capped_trials == 0


def test_stats_jobs_match_serial(K5):
    I = Ideal.from_generators(K5, [K5.rational(2), K5.element([1, 1])])
    serial = switch_stats(I, [4, 8], trials=12, seed=3, jobs=1)
    parallel = switch_stats(I, [4, 8], trials=12, seed=3, jobs=2)
    assert serial == parallel


def test_exhaustive_density_unit_ideal(K5):
    """Independent oracle: count a^2+5b^2 prime (or a matching prime power)."""
    ring = Ideal.ring(K5)
    est = prime_switch_density(ring, 5, mode="exhaustive", budget=200)
    count = 0
    for a, b in itertools.product(range(-5, 6), repeat=2):
        if (a, b) == (0, 0):
            continue
        n = a * a + 5 * b * b
        pk = prime_power(n)
        if pk is None:
            continue
        p, k = pk
        if k == 1:
            count += 1
        else:
            count += any(
                P.res_degree == k
                and P.to_ideal() == Ideal.principal(K5, K5.element([a, b]))
                for P in kummer_dedekind(p, K5)
            )
    assert est.value == Fraction(count, 121)
    assert est.value > 0
    assert est.exhaustive and est.stderr == 0.0


def test_density_bound_zero(K5):
    est = prime_switch_density(Ideal.ring(K5), 0, mode="exhaustive", budget=10)
    assert est.value == 0


def test_density_budget_guard(K5):
    with pytest.raises(ValueError):
        prime_switch_density(Ideal.ring(K5), 50, mode="exhaustive", budget=100)


def test_sampled_density_consistent_between_seeds(K5):
    ring = Ideal.ring(K5)
    a = prime_switch_density(ring, 5, mode="sampled", budget=4000, seed=1)
    b = prime_switch_density(ring, 5, mode="sampled", budget=4000, seed=2)
    se = math.hypot(a.stderr, b.stderr)
    assert abs(float(a.value) - float(b.value)) <= 4 * se


def test_geometric_consistency(K5):
    """Mean switch count ~ 1/density for the same ideal and bound."""
    ring = Ideal.ring(K5)
    density = prime_switch_density(ring, 5, mode="exhaustive", budget=200)
    stats = switch_stats(ring, [5], trials=400, seed=11)[0]
    p = float(density.value)
    mean = float(stats.mean)
    # waiting time of a Bernoulli(p) process: mean 1/p, variance (1-p)/p^2
    se = math.sqrt((1 - p) / (p * p * 400))
    assert abs(mean - 1 / p) <= 3.5 * se


def test_grid_monotone_under_basis_change(K5):
    """Cofactors reachable from one basis are reachable from another at
    a bound scaled by the transform's max column sum."""
    I = Ideal.from_generators(K5, [K5.rational(2), K5.element([1, 1])])
    lll_basis = lll_reduce(I)
    hnf_basis = I.basis_elements()
    # write each hnf vector over the lll basis to get the transform bound
    from fractions import Fraction as F

    cols = [list(b.coords) for b in lll_basis]
    det = cols[0][0] * cols[1][1] - cols[1][0] * cols[0][1]
    scale = 0
    for target in hnf_basis:
        a0, a1 = target.coords
        u = F(a0 * cols[1][1] - cols[1][0] * a1, det)
        v = F(cols[0][0] * a1 - a0 * cols[0][1], det)
        assert u.denominator == 1 and v.denominator == 1
        assert [u * c0 + v * c1 for c0, c1 in zip(*cols)] == [a0, a1]
        scale = max(scale, abs(u.numerator) + abs(v.numerator))
    bound = 2
    ni = I.norm_int()

    def cofactors(basis, b):
        out = set()
        for coeffs in itertools.product(range(-b, b + 1), repeat=2):
            if not any(coeffs):
                continue
            r = _combine(K5, basis, list(coeffs))
            out.add(Ideal.principal(K5, r).divide(I))
        return out

    small = cofactors(hnf_basis, bound)
    large = cofactors(lll_basis, bound * scale)
    assert small <= large


def test_landau_examples(K5, Ki):
    assert 0.5 <= landau_ratio(K5, 10**4) <= 2
    assert 0.5 <= landau_ratio(Ki, 10**4) <= 2
    with pytest.raises(ValueError):
        landau_ratio(K5, 50)


def test_landau_small_count_self_consistent(K5):
    """Independent recount of pi_K(100) by sieving residues mod 20."""
    count = prime_ideal_count(K5, 100)
    expected = 0
    for p in primerange(2, 101):
        if p in (2, 5):
            expected += 1  # ramified
        elif pow(-5, (p - 1) // 2, p) == 1:
            expected += 2  # split
        elif p * p <= 100:
            expected += 1  # inert of norm p^2
    assert count == expected


def test_landau_qi_split_count(Ki):
    """pi_{Q(i)}(T): split primes are exactly p = 1 mod 4 (plus 2, inert p^2)."""
    T = 10**4
    count = prime_ideal_count(Ki, T)
    expected = 1  # (1+i) above 2
    for p in primerange(3, T + 1):
        if p % 4 == 1:
            expected += 2
        elif p * p <= T:
            expected += 1
    assert count == expected


def test_landau_degree_guard(K64):
    with pytest.raises(ValueError):
        landau_ratio(K64, 1000)


def test_csv_format(K5):
    stats = switch_stats(Ideal.ring(K5), [5, 10], trials=5, seed=2)
    text = stats_csv(stats)
    lines = text.strip().split("\n")
    assert lines[0] == "bound_B,trials,mean_switches,prime_fraction,seed"
    assert len(lines) == 3
    assert lines[1].startswith("5,5,")
    assert lines[2].startswith("10,5,")


def test_trial_cap_records_and_flags(K5):
    # cap=1 forces every non-immediate trial to stop at the cap
    I = Ideal.principal(K5, K5.rational(2))
    stats = switch_stats(I, [2], trials=20, seed=1, cap=1)[0]
    assert all(c <= 1 for c in stats.switch_counts)
    if stats.capped_trials:
        assert stats.capped
        assert stats.prime_fraction < 1
