"""The principality decision engine.

A prime ideal is decided directly from the advice: primes dividing some
subfield-polynomial discriminant are answered by membership in the
exceptional set S, every other prime is principal exactly when each
subfield polynomial splits completely in its residue field. A general
ideal is first switched to a prime: draw r = sum r_i b_i with uniform
coefficients over an LLL-reduced basis of I and replace I by (r)/I, which
lies in the inverse ideal class (so shares the answer), until the cofactor
is prime.

All randomness is drawn from per-run substreams derived by hashing
(seed, labels), so decisions are reproducible bit for bit and independent
trials can run concurrently.
"""

import hashlib
import random
from dataclasses import dataclass, replace

from .errors import FieldMismatchError, MaxTrialsExceededError
from .lll import lll_reduce
from .nf import as_prime_ideal, prime_power
from .residue import element_in_prime, reduce_poly_mod_prime, splits_completely

YES = "Yes"
NO = "No"

REASON_IN_S = "in-S"
REASON_NOT_IN_S = "not-in-S"
REASON_NON_SPLIT = "non-split"
REASON_ALL_SPLIT = "all-split"


@dataclass(frozen=True)
class Decision:
    verdict: str
    reason: str
    switches_used: int = 0
    witness_prime: object = None  # PrimeIdeal when the switching engine ran
    failed_subfield: int | None = None

    def __post_init__(self):
        ok = {
            REASON_IN_S: YES,
            REASON_ALL_SPLIT: YES,
            REASON_NOT_IN_S: NO,
            REASON_NON_SPLIT: NO,
        }
        if ok[self.reason] != self.verdict:
            raise ValueError(f"reason {self.reason} inconsistent with {self.verdict}")


@dataclass(frozen=True)
class SwitchConfig:
    bound_B: int
    max_trials: int
    seed: int

    def __post_init__(self):
        if self.bound_B < 1:
            raise ValueError("bound_B must be at least 1")
        if self.max_trials < 1:
            raise ValueError("max_trials must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


def default_switch_config(K, bound_B=16, seed=42, max_trials=None):
    """Caller-friendly defaults: small bound, 64*d trial budget."""
    if max_trials is None:
        max_trials = 64 * K.degree
    return SwitchConfig(bound_B=bound_B, max_trials=max_trials, seed=seed)


def conjectural_bound(K):
    """The conservative coefficient bound 2^d * |disc|."""
    return 2**K.degree * abs(K.disc)


def substream(seed, *labels):
    """An independent deterministic RNG for (seed, labels)."""
    key = ":".join(str(x) for x in (seed, *labels))
    digest = hashlib.sha256(key.encode()).digest()
    return random.Random(int.from_bytes(digest[:16], "big"))


def decide_prime_ideal(prime, advice):
    """Decide a prime ideal from the advice bundle.

    Discriminant gates run first: a prime dividing some disc(f_i) is
    principal iff it belongs to S. Otherwise the verdict is Yes exactly
    when every subfield polynomial splits completely mod the prime.
    """
    if prime.K != advice.field:
        raise FieldMismatchError("prime ideal does not belong to the advice field")
    for disc in advice.disc_cache:
        if element_in_prime(disc, prime):
            if prime in advice.S:
                return Decision(YES, REASON_IN_S)
            return Decision(NO, REASON_NOT_IN_S)
    for idx, (_, poly) in enumerate(advice.subfields):
        g = reduce_poly_mod_prime(list(poly), prime)
        if not splits_completely(g):
            return Decision(NO, REASON_NON_SPLIT, failed_subfield=idx)
    return Decision(YES, REASON_ALL_SPLIT)


def draw_coefficients(rng, bound, count):
    """count integers uniform on [-bound, bound], not all zero."""
    while True:
        coeffs = [rng.randrange(-bound, bound + 1) for _ in range(count)]
        if any(coeffs):
            return coeffs


def _combine(K, basis, coeffs):
    acc = [0] * K.degree
    for c, vec in zip(coeffs, basis):
        if c:
            for i, x in enumerate(vec.coords):
                acc[i] += c * x
    return K.element(acc)


def sample_switch(ideal, basis, cfg, rng):
    """One switching step: (r, (r)/I) for r random in the span of basis.

    The cofactor is computed as r * I^-1 (the inverse is cached on the
    ideal), which equals the exact ideal quotient and is always integral
    because r lies in I.
    """
    r = _combine(ideal.K, basis, draw_coefficients(rng, cfg.bound_B, ideal.K.degree))
    return r, cofactor_ideal(ideal, r)


def cofactor_ideal(ideal, r):
    return ideal.inverse().mul_element(r)


def prime_cofactor(ideal, r, norm_hint=None):
    """The prime ideal (r)/I when that cofactor is prime, else None.

    Non-prime-power cofactor norms are rejected from the norms alone
    (|N(r)| / N(I)), so the cofactor lattice is only built when it has a
    chance of being prime.
    """
    ni = norm_hint if norm_hint is not None else ideal.norm_int()
    n2, rem = divmod(abs(r.norm_int()), ni)
    assert rem == 0, "sampled element is not in the ideal"
    if n2 == 1 or prime_power(n2) is None:
        return None
    return as_prime_ideal(cofactor_ideal(ideal, r))


def decide_ideal(ideal, advice, cfg):
    """Decide a general integral ideal, switching to a prime if needed.

    Prime inputs take the direct path with zero switches. Otherwise the
    cofactor (r)/I is redrawn until prime — it lies in the inverse class,
    so its verdict is the input's verdict — and the prime path finishes.
    Raises MaxTrialsExceededError after cfg.max_trials fruitless draws.
    """
    if ideal.K != advice.field:
        raise FieldMismatchError("ideal does not belong to the advice field")
    if not ideal.is_integral():
        raise ValueError("decision requires an integral ideal")
    direct = as_prime_ideal(ideal)
    if direct is not None:
        base = decide_prime_ideal(direct, advice)
        return replace(base, witness_prime=direct, switches_used=0)
    basis = lll_reduce(ideal)
    ni = ideal.norm_int()
    rng = substream(cfg.seed, "decide")
    for trial in range(1, cfg.max_trials + 1):
        r = _combine(
            ideal.K, basis, draw_coefficients(rng, cfg.bound_B, ideal.K.degree)
        )
        witness = prime_cofactor(ideal, r, norm_hint=ni)
        if witness is not None:
            base = decide_prime_ideal(witness, advice)
            return replace(base, witness_prime=witness, switches_used=trial)
    raise MaxTrialsExceededError(cfg.max_trials, cfg.bound_B)
