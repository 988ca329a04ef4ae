"""LLL reduction of ideal lattices under the canonical embedding.

The inner product is <x, y> = sum over complex embeddings sigma of
sigma(x) * conj(sigma(y)), evaluated through a Gram matrix on power-basis
coordinates. Roots are computed once per field at fixed precision; for
totally real and CM fields the Gram matrix is exactly integral and the
rounding is certified, otherwise the form is scaled by 2^32 and rounded.
A perturbed Gram matrix only shifts the reduction weights: the basis
transformation is unimodular by construction, and lll_reduce verifies that
the output spans the input ideal before returning.

The reduction itself is the all-integer LLL (exact arithmetic on the
lambda/d Gram-Schmidt tables), so runs are deterministic.
"""

from fractions import Fraction

import mpmath

from .errors import ZeroIdealError
from .intlattice import bareiss_det

_PREC_BITS = 192
_SCALE_BITS = 32
DELTA = (99, 100)


def minkowski_gram(K):
    """Integer Gram matrix of the canonical-embedding form (cached on K)."""
    if K._gram is not None:
        return K._gram
    d = K.degree
    with mpmath.workprec(_PREC_BITS + 8 * d):
        roots = mpmath.polyroots(
            [mpmath.mpf(c) for c in reversed(K.poly)],
            maxsteps=200,
            extraprec=_PREC_BITS,
        )
        powers = []
        for r in roots:
            row = [mpmath.mpc(1)]
            for _ in range(d - 1):
                row.append(row[-1] * r)
            powers.append(row)
        gram = [[mpmath.mpf(0)] * d for _ in range(d)]
        for j in range(d):
            for k in range(j, d):
                acc = mpmath.mpf(0)
                for i in range(d):
                    acc += (powers[i][j] * mpmath.conj(powers[i][k])).real
                gram[j][k] = acc
                gram[k][j] = acc
        tol = mpmath.mpf(2) ** -40
        integral = all(
            abs(gram[j][k] - mpmath.nint(gram[j][k])) < tol
            for j in range(d)
            for k in range(j, d)
        )
        if integral:
            q = [[int(mpmath.nint(gram[j][k])) for k in range(d)] for j in range(d)]
        else:
            s = mpmath.mpf(2) ** _SCALE_BITS
            q = [
                [int(mpmath.nint(gram[j][k] * s)) for k in range(d)]
                for j in range(d)
            ]
            for j in range(d):
                for k in range(j + 1, d):
                    m = (q[j][k] + q[k][j]) // 2
                    q[j][k] = m
                    q[k][j] = m
    K._gram = tuple(tuple(row) for row in q)
    return K._gram


def _form_ip(gram, u, v):
    acc = 0
    for i, ui in enumerate(u):
        if ui:
            gi = gram[i]
            s = 0
            for j, vj in enumerate(v):
                if vj:
                    s += gi[j] * vj
            acc += ui * s
    return acc


def integral_lll(vectors, gram, delta=DELTA):
    """All-integer LLL on coordinate vectors under an integral SPD form.

    Returns a new list of vectors spanning the same lattice, size-reduced
    and satisfying the Lovasz condition at delta (a num/den pair).
    """
    n = len(vectors)
    b = [list(v) for v in vectors]
    dnum, dden = delta
    lam = [[0] * n for _ in range(n)]
    big_d = [1] * (n + 1)

    def init_gs():
        for i in range(n):
            for j in range(i + 1):
                u = _form_ip(gram, b[i], b[j])
                for t in range(j):
                    u = (big_d[t + 1] * u - lam[i][t] * lam[j][t]) // big_d[t]
                if j < i:
                    lam[i][j] = u
                else:
                    if u <= 0:
                        raise ArithmeticError(
                            "form is not positive definite on the basis"
                        )
                    big_d[i + 1] = u

    def redi(k, l):
        dl = big_d[l + 1]
        if 2 * abs(lam[k][l]) > dl:
            q = (2 * lam[k][l] + dl) // (2 * dl)
            bk, bl = b[k], b[l]
            for i in range(len(bk)):
                bk[i] -= q * bl[i]
            for j in range(l):
                lam[k][j] -= q * lam[l][j]
            lam[k][l] -= q * dl

    def swapi(k):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lam_ = lam[k][k - 1]
        new_d = (big_d[k - 1] * big_d[k + 1] + lam_ * lam_) // big_d[k]
        for i in range(k + 1, n):
            t = lam[i][k]
            lam[i][k] = (big_d[k + 1] * lam[i][k - 1] - lam_ * t) // big_d[k]
            lam[i][k - 1] = (new_d * t + lam_ * lam[i][k]) // big_d[k + 1]
        big_d[k] = new_d

    init_gs()
    k = 1
    while k < n:
        redi(k, k - 1)
        lam_ = lam[k][k - 1]
        if dden * (big_d[k + 1] * big_d[k - 1] + lam_ * lam_) < dnum * big_d[k] ** 2:
            swapi(k)
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                redi(k, l)
            k += 1
    return b


def is_lll_reduced(vectors, gram, delta=DELTA):
    """Exact check of size reduction and the Lovasz condition."""
    n = len(vectors)
    dnum, dden = delta
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    for i in range(n):
        # Gram-Schmidt over Q against earlier vectors
        ips = [Fraction(_form_ip(gram, vectors[i], vectors[j])) for j in range(i + 1)]
        for j in range(i):
            acc = ips[j]
            for t in range(j):
                acc -= mu[i][t] * mu[j][t] * bstar[t]
            mu[i][j] = acc / bstar[j]
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
        acc = ips[i]
        for t in range(i):
            acc -= mu[i][t] * mu[i][t] * bstar[t]
        bstar[i] = acc
        if bstar[i] <= 0:
            return False
    for k in range(1, n):
        if bstar[k] < (Fraction(dnum, dden) - mu[k][k - 1] ** 2) * bstar[k - 1]:
            return False
    return True


def lll_reduce(ideal, K=None, delta=DELTA):
    """LLL-reduced Z-basis of an integral ideal, as field elements.

    The output spans exactly the lattice of `ideal` (asserted by Hermite
    form equality) and is reduced at the given delta with respect to the
    canonical-embedding Gram matrix of the field.
    """
    field = ideal.K
    if K is not None and K != field:
        raise ValueError("ideal does not belong to the given field")
    if ideal.denom != 1:
        raise ValueError("LLL reduction expects an integral ideal")
    if ideal.det() == 0:
        raise ZeroIdealError("zero ideal")
    if ideal._lll is not None:
        return list(ideal._lll)
    gram = minkowski_gram(field)
    start = ideal.cols
    if ideal._gens is not None and len(ideal._gens) == 1:
        # a generator chain usually has far smaller entries than the HNF
        chain = []
        v = list(ideal._gens[0].coords)
        for _ in range(field.degree):
            chain.append(list(v))
            v = field.theta_shift(v)
        start = chain
    reduced = integral_lll(start, gram, delta)
    # lattice equality: every output vector lies in the ideal and the
    # determinants agree, which pins the same Hermite form
    if any(not ideal.contains_vector(v) for v in reduced):
        raise AssertionError("LLL output left the input ideal")
    if abs(bareiss_det(reduced)) != ideal.det():
        raise AssertionError("LLL output does not span the input ideal")
    out = [field.element(v) for v in reduced]
    ideal._lll = tuple(out)
    return list(out)
