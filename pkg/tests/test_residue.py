import itertools
import random

import pytest

from dpip import fppoly
from dpip.errors import SquarefreeViolationError
from dpip.nf import kummer_dedekind
from dpip.residue import (
    ResidueField,
    ResiduePoly,
    element_in_prime,
    reduce_poly_mod_prime,
    residue_field,
    splits_completely,
)


def _irreducible_modulus(p, f):
    if f == 1:
        return [0, 1]
    for tail in itertools.product(range(p), repeat=f):
        cand = list(tail) + [1]
        if fppoly.is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")


def test_residue_field_rejects_reducible():
    with pytest.raises(ValueError):
        ResidueField(5, [1, 0, 0, 0, 1])  # x^4+1 factors mod every prime
    with pytest.raises(ValueError):
        ResidueField(3, [0, 0, 1])  # x^2


def test_residue_field_arithmetic():
    F = ResidueField(3, _irreducible_modulus(3, 2))
    els = list(F.elements())
    assert len(els) == 9
    for a in els:
        for b in els:
            assert F.mul(a, b) == F.mul(b, a)
        if a:
            assert F.mul(a, F.inv(a)) == F.one()


def test_reduce_mod_prime_rational_coeffs(K5):
    P29 = [P for P in kummer_dedekind(29, K5) if P.gen_poly == (16, 1)][0]
    g = reduce_poly_mod_prime([K5.one(), K5.zero(), K5.one()], P29)
    assert g.coeffs == ((1,), (), (1,))


def test_reduce_mod_prime_maps_theta(K5):
    # theta = 1 under (3, theta - 1), so x^2 - theta becomes x^2 - 1
    P = [P for P in kummer_dedekind(3, K5) if P.gen_poly == (2, 1)][0]
    g = reduce_poly_mod_prime([-K5.gen(), K5.zero(), K5.one()], P)
    assert g.coeffs == ((2,), (), (1,))


def test_reduce_mod_prime_power_coefficient(K64):
    # theta^16 maps to the 16th Frobenius-power of the residue class of z
    P = kummer_dedekind(97, K64)[0]
    assert P.res_degree == 2
    coeff = [0] * 32
    coeff[16] = 1
    g = reduce_poly_mod_prime([K64.element(coeff), K64.one()], P)
    F = residue_field(P)
    z16 = fppoly.pow_mod([0, 1], 16, list(P.gen_poly), 97)
    assert g.coeffs[0] == tuple(z16)


def test_reduce_mod_requires_monic(K5):
    P = kummer_dedekind(3, K5)[0]
    with pytest.raises(ValueError):
        reduce_poly_mod_prime([K5.one(), K5.rational(2)], P)


def test_element_in_prime_examples(K5):
    P2 = kummer_dedekind(2, K5)[0]
    P3 = [P for P in kummer_dedekind(3, K5) if P.gen_poly == (2, 1)][0]
    P5 = kummer_dedekind(5, K5)[0]
    assert element_in_prime(K5.rational(-4), P2) is True
    assert element_in_prime(K5.rational(-4), P3) is False
    assert element_in_prime(K5.gen(), P5) is True


def test_element_in_prime_matches_lattice(K5, K21):
    rng = random.Random(0)
    for K in (K5, K21):
        for p in (2, 3, 5, 7, 11, 13):
            for P in kummer_dedekind(p, K):
                lattice = P.to_ideal()
                for _ in range(25):
                    a = K.element([rng.randint(-20, 20), rng.randint(-20, 20)])
                    assert element_in_prime(a, P) == lattice.contains_element(a)


def test_splitting_examples(K5):
    one, zero = K5.one(), K5.zero()
    P29 = [P for P in kummer_dedekind(29, K5) if P.gen_poly == (16, 1)][0]
    assert splits_completely(reduce_poly_mod_prime([one, zero, one], P29)) is True
    assert [a for a in range(29) if (a * a + 1) % 29 == 0] == [12, 17]
    P3 = kummer_dedekind(3, K5)[0]
    assert splits_completely(reduce_poly_mod_prime([one, zero, one], P3)) is False
    assert not [a for a in range(3) if (a * a + 1) % 3 == 0]
    # linear polynomials always split
    assert splits_completely(reduce_poly_mod_prime([K5.element([4, 2]), one], P3))


def test_splitting_vs_brute_force():
    rng = random.Random(1)
    checked = 0
    fields = [(2, 1), (3, 1), (5, 1), (7, 1), (13, 1), (2, 2), (3, 2), (5, 2),
              (7, 2), (2, 3), (3, 3), (2, 4), (11, 1), (97, 1)]
    for p, f in fields:
        F = ResidueField(p, _irreducible_modulus(p, f))
        els = list(F.elements())
        done = 0
        while done < 15:
            n = rng.randint(1, min(6, F.q - 1) if F.q > 2 else 2)
            coeffs = [rng.choice(els) for _ in range(n)] + [F.one()]
            g = ResiduePoly(F, coeffs)
            if g.degree() != n:
                continue
            try:
                verdict = splits_completely(g)
            except SquarefreeViolationError:
                continue
            roots = sum(1 for x in els if not g.evaluate(x))
            assert verdict == (roots == n), (p, f, coeffs)
            done += 1
            checked += 1
    assert checked >= 200


def test_squarefree_violation_raised():
    F = ResidueField(5, [0, 1])
    doubled = ResiduePoly(F, [(1,), (3,), (1,)])  # (x + 4)^2 mod 5
    with pytest.raises(SquarefreeViolationError):
        splits_completely(doubled)


def test_reduction_is_ring_hom(K5):
    rng = random.Random(2)
    for p in (3, 7, 11, 29):
        for P in kummer_dedekind(p, K5):
            F = residue_field(P)
            for _ in range(20):
                a = K5.element([rng.randint(-30, 30), rng.randint(-30, 30)])
                b = K5.element([rng.randint(-30, 30), rng.randint(-30, 30)])
                ia = F.from_poly(list(a.coords))
                ib = F.from_poly(list(b.coords))
                iab = F.from_poly(list((a * b).coords))
                assert F.mul(ia, ib) == iab
                isum = F.from_poly(list((a + b).coords))
                assert F.add(ia, ib) == isum
