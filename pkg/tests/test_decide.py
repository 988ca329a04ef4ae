import random

import pytest
from sympy import primerange

from dpip.decide import (
    NO,
    YES,
    Decision,
    SwitchConfig,
    conjectural_bound,
    decide_ideal,
    decide_prime_ideal,
    default_switch_config,
    prime_cofactor,
    sample_switch,
    substream,
)
from dpip.errors import FieldMismatchError, MaxTrialsExceededError
from dpip.lll import lll_reduce
from dpip.nf import Ideal, as_prime_ideal, kummer_dedekind
from dpip.quadforms import genus_advice, is_principal_quad
from dpip.residue import element_in_prime


@pytest.fixture(scope="module")
def advice20():
    return genus_advice(-20)


def _prime(K, p, gen):
    return [P for P in kummer_dedekind(p, K) if P.gen_poly == gen][0]


def test_ramified_prime_is_rejected(K5, advice20):
    d = decide_prime_ideal(_prime(K5, 2, (1, 1)), advice20)
    assert d.verdict == NO and d.reason == "not-in-S"
    assert d.witness_prime is None and d.switches_used == 0


def test_split_principal_prime(K5, advice20):
    d = decide_prime_ideal(_prime(K5, 29, (16, 1)), advice20)
    assert d.verdict == YES and d.reason == "all-split"
    assert 29 == 3**2 + 5 * 2**2  # principal by explicit representation


def test_split_nonprincipal_prime(K5, advice20):
    d = decide_prime_ideal(_prime(K5, 3, (2, 1)), advice20)
    assert d.verdict == NO and d.reason == "non-split"
    assert d.failed_subfield == 0


def test_inert_primes_are_principal(K5, advice20):
    for p in (11, 13, 17, 19):
        factors = kummer_dedekind(p, K5)
        if len(factors) == 1 and factors[0].res_degree == 2:
            assert decide_prime_ideal(factors[0], advice20).verdict == YES


def test_exceptional_set_membership(K5):
    from dpip.advice import build_advice

    alt = build_advice(
        K5,
        [[K5.rational(-1), K5.rational(-1), K5.one()]],  # x^2 - x - 1, disc 5
        principal_test=lambda P: is_principal_quad(P.to_ideal(), -20),
    )
    p5 = kummer_dedekind(5, K5)[0]
    d = decide_prime_ideal(p5, alt)
    assert d.verdict == YES and d.reason == "in-S"


def test_advice_field_mismatch(K5, Ki, advice20):
    with pytest.raises(FieldMismatchError):
        decide_prime_ideal(kummer_dedekind(3, Ki)[0], advice20)


def test_decision_consistency_enforced():
    with pytest.raises(ValueError):
        Decision(verdict=YES, reason="non-split")


def test_switch_config_validation():
    with pytest.raises(ValueError):
        SwitchConfig(bound_B=0, max_trials=10, seed=1)
    with pytest.raises(ValueError):
        SwitchConfig(bound_B=5, max_trials=0, seed=1)
    with pytest.raises(ValueError):
        SwitchConfig(bound_B=5, max_trials=10, seed=-1)


def test_conjectural_bound(K5):
    assert conjectural_bound(K5) == 4 * 20


def test_sample_switch_unit_ideal(K5, advice20):
    ring = Ideal.ring(K5)
    cfg = default_switch_config(K5, bound_B=5, seed=11)
    rng = substream(cfg.seed, "test")
    basis = lll_reduce(ring)
    r, cof = sample_switch(ring, basis, cfg, rng)
    assert not r.is_zero()
    assert cof == Ideal.principal(K5, r)


def test_sample_switch_matches_exact_division(K5):
    I = Ideal.from_generators(K5, [K5.rational(2), K5.element([1, 1])])
    cfg = default_switch_config(K5, bound_B=4, seed=3)
    rng = substream(cfg.seed, "test")
    basis = lll_reduce(I)
    for _ in range(20):
        r, cof = sample_switch(I, basis, cfg, rng)
        assert I.contains_element(r)
        assert cof.is_integral()
        assert Ideal.principal(K5, r).divide(I) == cof
        assert cof * I == Ideal.principal(K5, r)


def test_divide_example_cofactor(K5):
    I = Ideal.from_generators(K5, [K5.rational(2), K5.element([1, 1])])
    r = K5.element([1, 1])
    cof = Ideal.principal(K5, r).divide(I)
    assert cof == Ideal.from_generators(K5, [K5.rational(3), K5.element([1, 1])])


def test_prime_cofactor_agrees_with_as_prime(K5):
    I = Ideal.from_generators(K5, [K5.rational(2), K5.element([1, 1])])
    basis = lll_reduce(I)
    rng = substream(5, "check")
    cfg = default_switch_config(K5, bound_B=6, seed=5)
    for _ in range(50):
        r, cof = sample_switch(I, basis, cfg, rng)
        assert prime_cofactor(I, r) == as_prime_ideal(cof)


def test_decide_principal_by_construction(K5, advice20):
    cfg = default_switch_config(K5, bound_B=8, seed=1)
    d = decide_ideal(Ideal.principal(K5, K5.element([3, 1])), advice20, cfg)
    assert d.verdict == YES
    assert d.witness_prime is not None


def test_decide_nonprincipal_product(K5, advice20):
    I2 = Ideal.from_generators(K5, [K5.rational(2), K5.element([1, 1])])
    I5 = Ideal.from_generators(K5, [K5.rational(5), K5.gen()])
    ten = I2 * I5
    assert ten.norm() == 10
    cfg = default_switch_config(K5, bound_B=8, seed=2)
    assert decide_ideal(ten, advice20, cfg).verdict == NO


def test_decide_prime_input_fast_path(K5, advice20):
    P = _prime(K5, 29, (16, 1))
    cfg = default_switch_config(K5, bound_B=8, seed=3)
    d = decide_ideal(P.to_ideal(), advice20, cfg)
    assert d.verdict == YES
    assert d.switches_used == 0
    assert d.witness_prime == P


def test_decide_deterministic(K5, advice20):
    I = Ideal.principal(K5, K5.element([4, 3]))
    cfg = default_switch_config(K5, bound_B=8, seed=77)
    runs = {decide_ideal(I, advice20, cfg) for _ in range(3)}
    assert len(runs) == 1
    other = decide_ideal(
        Ideal.principal(K5, K5.element([4, 3])),
        advice20,
        SwitchConfig(bound_B=8, max_trials=cfg.max_trials, seed=78),
    )
    assert other.verdict == next(iter(runs)).verdict


def test_decide_class_invariance(K5, advice20):
    rng = random.Random(9)
    cfg = default_switch_config(K5, bound_B=8, seed=5)
    I2 = Ideal.from_generators(K5, [K5.rational(2), K5.element([1, 1])])
    base = {
        "I2": decide_ideal(I2, advice20, cfg).verdict,
        "ring": YES,
    }
    checked = 0
    while checked < 50:
        alpha = K5.element([rng.randint(-6, 6), rng.randint(-6, 6)])
        if alpha.is_zero():
            continue
        scaled = I2 * Ideal.principal(K5, alpha)
        assert decide_ideal(scaled, advice20, cfg).verdict == base["I2"]
        principal = Ideal.principal(K5, alpha)
        assert decide_ideal(principal, advice20, cfg).verdict == YES
        checked += 1


def test_decide_soundness_random_principal(K5, K21, advice20):
    rng = random.Random(10)
    advice84 = genus_advice(-84)
    for K, advice in ((K5, advice20), (K21, advice84)):
        cfg = default_switch_config(K, bound_B=8, seed=6)
        done = 0
        while done < 100:
            alpha = K.element([rng.randint(-9, 9), rng.randint(-9, 9)])
            if alpha.is_zero():
                continue
            d = decide_ideal(Ideal.principal(K, alpha), advice, cfg)
            assert d.verdict == YES, (K.poly, alpha.coords, d)
            done += 1


def test_decide_agrees_with_oracle_on_primes(K5, K21, advice20):
    advice84 = genus_advice(-84)
    for K, advice, disc in ((K5, advice20, -20), (K21, advice84, -84)):
        for p in primerange(2, 200):
            for P in kummer_dedekind(p, K):
                want = is_principal_quad(P.to_ideal(), disc)
                got = decide_prime_ideal(P, advice).verdict == YES
                assert got == want


def test_genus_advice_soundness_all_elementary2_discs():
    """Advice verdicts match the form oracle for four elementary-2 fields."""
    for disc in (-20, -84, -120, -132):
        advice = genus_advice(disc)
        K = advice.field
        for p in primerange(2, 1000):
            for P in kummer_dedekind(p, K):
                if P.norm() >= 1000:
                    continue
                got = decide_prime_ideal(P, advice).verdict == YES
                assert got == is_principal_quad(P.to_ideal(), disc), (disc, P)


def test_max_trials_exhaustion(K5, advice20):
    # (2) is not prime, so the switching loop runs; at B=2 many draws give
    # non-prime cofactors, so a one-trial budget fails for some seed
    two = Ideal.principal(K5, K5.rational(2))
    for seed in range(100):
        cfg = SwitchConfig(bound_B=2, max_trials=1, seed=seed)
        try:
            decide_ideal(two, advice20, cfg)
        except MaxTrialsExceededError as exc:
            assert exc.trials == 1 and exc.bound == 2
            break
    else:
        pytest.fail("no seed exhausted the trial budget")


def test_advice_equivalence_small(K5, advice20):
    """x^2+1 and x^2-x-1 give identical verdicts off the discriminant gates."""
    from dpip.advice import build_advice

    alt = build_advice(
        K5,
        [[K5.rational(-1), K5.rational(-1), K5.one()]],
        principal_test=lambda P: is_principal_quad(P.to_ideal(), -20),
    )
    for p in primerange(2, 500):
        for P in kummer_dedekind(p, K5):
            gated = any(
                element_in_prime(disc, P)
                for disc in list(advice20.disc_cache) + list(alt.disc_cache)
            )
            if gated:
                continue
            assert (
                decide_prime_ideal(P, advice20).verdict
                == decide_prime_ideal(P, alt).verdict
            )
