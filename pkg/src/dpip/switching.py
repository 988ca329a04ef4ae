"""Statistics for the randomized switching step.

Measures how many draws the repeat-until-prime loop needs for given
coefficient bounds, estimates the density of prime cofactors over the
sampling grid (exhaustively for tiny grids, by Monte Carlo otherwise),
and sanity-checks prime-ideal counts against T/log T.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .decide import _combine, draw_coefficients, prime_cofactor, substream
from .lll import lll_reduce
from .nf import NumberField, kummer_dedekind
from .serialize import ideal_from_dict, ideal_to_dict

TRIAL_CAP = 10**5


@dataclass(frozen=True)
class SwitchStats:
    bound_B: int
    trials: int
    switch_counts: tuple
    mean: Fraction
    prime_fraction: Fraction
    seed: int
    capped_trials: int = 0

    @property
    def capped(self):
        return self.capped_trials > 0


def _count_until_prime(ideal, basis, ni, bound, rng, cap):
    draws = 0
    while draws < cap:
        coeffs = draw_coefficients(rng, bound, ideal.K.degree)
        r = _combine(ideal.K, basis, coeffs)
        draws += 1
        if prime_cofactor(ideal, r, norm_hint=ni) is not None:
            return draws, False
    return cap, True


def _run_trials(ideal, bound, seed, trial_range, cap):
    basis = lll_reduce(ideal)
    ni = ideal.norm_int()
    counts = []
    capped = 0
    for t in trial_range:
        rng = substream(seed, "stats", bound, t)
        c, hit_cap = _count_until_prime(ideal, basis, ni, bound, rng, cap)
        counts.append(c)
        capped += hit_cap
    return counts, capped


def _stats_worker(args):
    field_poly, ideal_data, bound, seed, lo, hi, cap = args
    K = NumberField(field_poly)
    ideal = ideal_from_dict(ideal_data, K)
    return _run_trials(ideal, bound, seed, range(lo, hi), cap)


def switch_stats(ideal, bounds, trials, seed, field=None, cap=TRIAL_CAP, jobs=1):
    """Repeat-until-prime switch counts for each bound.

    Each trial is an independent experiment with its own substream keyed
    by (seed, bound, trial index), so results do not depend on scheduling
    and identical seeds reproduce identical counts. A trial that exceeds
    `cap` draws records the cap and flags the run.
    """
    if field is not None and field != ideal.K:
        raise ValueError("ideal does not belong to the given field")
    if trials < 1:
        raise ValueError("at least one trial is required")
    out = []
    for bound in bounds:
        if bound < 1:
            raise ValueError("bounds must be positive")
        if jobs > 1:
            chunk = (trials + jobs - 1) // jobs
            args = [
                (
                    list(ideal.K.poly),
                    ideal_to_dict(ideal),
                    bound,
                    seed,
                    lo,
                    min(lo + chunk, trials),
                    cap,
                )
                for lo in range(0, trials, chunk)
            ]
            counts = []
            capped = 0
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for part_counts, part_capped in pool.map(_stats_worker, args):
                    counts.extend(part_counts)
                    capped += part_capped
        else:
            counts, capped = _run_trials(ideal, bound, seed, range(trials), cap)
        total = sum(counts)
        out.append(
            SwitchStats(
                bound_B=bound,
                trials=trials,
                switch_counts=tuple(counts),
                mean=Fraction(total, trials),
                prime_fraction=Fraction(trials - capped, total),
                seed=seed,
                capped_trials=capped,
            )
        )
    return out


@dataclass(frozen=True)
class DensityEstimate:
    value: Fraction
    stderr: float
    samples: int
    exhaustive: bool


def prime_switch_density(ideal, bound, mode="exhaustive", budget=10**6, seed=0):
    """Fraction of coefficient vectors in [-B, B]^d giving a prime cofactor.

    The zero vector counts in the denominator (2B+1)^d but can never hit,
    matching the sampling loop which redraws r = 0. Exhaustive mode walks
    the whole grid and is exact; sampled mode returns an unbiased estimate
    with its standard error.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    K = ideal.K
    d = K.degree
    grid = (2 * bound + 1) ** d
    basis = lll_reduce(ideal)
    ni = ideal.norm_int()

    def hit(coeffs):
        if not any(coeffs):
            return False
        r = _combine(K, basis, coeffs)
        return prime_cofactor(ideal, r, norm_hint=ni) is not None

    if mode == "exhaustive":
        if grid > budget:
            raise ValueError(f"grid of {grid} points exceeds the budget {budget}")
        count = sum(1 for coeffs in product(range(-bound, bound + 1), repeat=d) if hit(coeffs))
        return DensityEstimate(Fraction(count, grid), 0.0, grid, True)
    if mode == "sampled":
        rng = substream(seed, "density", bound)
        hits = 0
        for _ in range(budget):
            coeffs = [rng.randrange(-bound, bound + 1) for _ in range(d)]
            hits += hit(coeffs)
        phat = Fraction(hits, budget)
        se = math.sqrt(float(phat) * (1.0 - float(phat)) / budget)
        return DensityEstimate(phat, se, budget, False)
    raise ValueError(f"unknown mode {mode!r}")


def prime_ideal_count(K, limit):
    """Number of prime ideals of norm <= limit."""
    from sympy import primerange

    count = 0
    for p in primerange(2, limit + 1):
        for prime in kummer_dedekind(p, K):
            if prime.norm() <= limit:
                count += 1
    return count


def landau_ratio(K, limit):
    """pi_K(T) * log(T) / T, which tends to 1 for every number field."""
    if limit < 100:
        raise ValueError("limit must be at least 100")
    if K.degree > 4:
        raise ValueError("exhaustive prime counting is limited to degree <= 4")
    return prime_ideal_count(K, limit) * math.log(limit) / limit


def stats_csv(stats):
    """CSV rows: bound_B,trials,mean_switches,prime_fraction,seed."""
    lines = ["bound_B,trials,mean_switches,prime_fraction,seed"]
    for s in stats:
        lines.append(
            f"{s.bound_B},{s.trials},{float(s.mean):.6g},{float(s.prime_fraction):.6g},{s.seed}"
        )
    return "\n".join(lines) + "\n"
