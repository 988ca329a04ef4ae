"""Independent oracles used to cross-check the production code.

Everything here is deliberately written from scratch against the
mathematical definitions (naive lattice closure, rational-arithmetic LLL,
exhaustive searches) so the tests do not share code paths with the
implementations they are checking.
"""

from fractions import Fraction


def naive_lattice_basis(vectors):
    """Row-style integer lattice basis by plain gcd elimination.

    Returns a list of echelon basis rows (pivot = first nonzero index) from
    which determinant and membership can be derived. Intentionally naive.
    """
    vecs = [list(map(int, v)) for v in vectors if any(v)]
    dim = len(vectors[0])
    basis = {}

    def insert(v):
        for j in range(dim):
            if v[j] == 0:
                continue
            if j not in basis:
                if v[j] < 0:
                    v = [-x for x in v]
                basis[j] = v
                return
            w = basis[j]
            while v[j]:
                q = w[j] // v[j]
                w2 = [a - q * b for a, b in zip(w, v)]
                basis[j], v = v, w2
                w = basis[j]
                if v[j] and abs(v[j]) > abs(w[j]):
                    basis[j], v = v, basis[j]
                    w = basis[j]
            # v[j] == 0: keep reducing the remainder
        # fully reduced

    for v in vecs:
        insert(list(v))
    # one more pass so earlier rows see later pivots
    changed = True
    while changed:
        changed = False
        rows = sorted(basis.items())
        for j, v in rows:
            for j2, w in rows:
                if j2 <= j:
                    continue
                q = v[j2] // w[j2] if w[j2] else 0
                if q:
                    basis[j] = [a - q * b for a, b in zip(v, w)]
                    v = basis[j]
                    changed = True
    return [basis[j] for j in sorted(basis)]


def naive_det(rows):
    """Fraction Gaussian elimination determinant."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if a[r][k]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] * inv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[k])]
    return det


def lll_reference(basis, gram, delta=Fraction(99, 100)):
    """Textbook LLL over Fractions with inner product u^T gram v."""

    def ip(u, v):
        return Fraction(
            sum(ui * sum(g * vj for g, vj in zip(grow, v)) for ui, grow in zip(u, gram))
        )

    basis = [list(v) for v in basis]
    n = len(basis)

    def gs():
        mu = [[Fraction(0)] * n for _ in range(n)]
        norms = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                acc = ip(basis[i], basis[j])
                for t in range(j):
                    acc -= mu[i][t] * mu[j][t] * norms[t]
                mu[i][j] = acc / norms[j]
            acc = ip(basis[i], basis[i])
            for t in range(i):
                acc -= mu[i][t] ** 2 * norms[t]
            norms[i] = acc
        return mu, norms

    k = 1
    while k < n:
        mu, norms = gs()
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[j])]
                mu, norms = gs()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            basis[k], basis[k - 1] = basis[k - 1], basis[k]
            k = max(k - 1, 1)
    return basis


def count_roots_brute(poly_coeffs_eval, elements):
    """Number of roots of a polynomial among the given field elements."""
    return sum(1 for x in elements if not poly_coeffs_eval(x))


def represents(m, target, bound=None):
    """Exhaustive search for target = a^2 + m*b^2 (imaginary quadratic norm)."""
    from math import isqrt

    if target < 0:
        return False
    bmax = isqrt(target // m) if m else 0
    for b in range(bmax + 1):
        rest = target - m * b * b
        if rest < 0:
            continue
        a = isqrt(rest)
        if a * a == rest:
            return True
    return False


def principal_by_representation(K, ideal):
    """Principality oracle for Z[sqrt(-m)] by exhaustive norm representation.

    An integral ideal of norm n in Z[sqrt(-m)] is principal iff some
    element a + b*sqrt(-m) of norm exactly n generates it.
    """
    from math import isqrt

    m = K.poly[0]
    n = ideal.norm_int()
    bmax = isqrt(n // m) if m else 0
    for b in range(bmax + 1):
        rest = n - m * b * b
        if rest < 0:
            continue
        a = isqrt(rest)
        if a * a != rest:
            continue
        for sa in ({a, -a} if a else {0}):
            for sb in ({b, -b} if b else {0}):
                cand = K.element([sa, sb])
                if cand.is_zero():
                    continue
                from dpip.nf import Ideal

                if Ideal.principal(K, cand) == ideal:
                    return True
    return False
