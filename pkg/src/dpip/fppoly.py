"""Dense polynomial arithmetic over prime fields F_p.

Polynomials are lists/tuples of ints indexed by degree (little-endian) with
entries reduced into [0, p). The zero polynomial is the empty list. Only the
handful of operations the rest of the package needs live here; full
factorization is delegated to sympy's galoistools.
"""

from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor


def trim(a):
    """Strip leading (high-degree) zeros in place and return the list."""
    while a and a[-1] == 0:
        a.pop()
    return a


def from_ints(coeffs, p):
    return trim([int(c) % p for c in coeffs])


def deg(a):
    return len(a) - 1


def add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim([c % p for c in out])


def scale(a, s, p):
    s %= p
    return trim([(c * s) % p for c in a])


def monic(a, p):
    if not a:
        return []
    lead = a[-1]
    if lead == 1:
        return list(a)
    inv = pow(lead, -1, p)
    return scale(a, inv, p)


def divmod_(a, b, p):
    """Quotient and remainder of a by b (b nonzero)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return [], trim(a)
    inv = pow(b[-1], -1, p)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = (a[k + db] * inv) % p
        if c:
            q[k] = c
            for j in range(db + 1):
                a[k + j] = (a[k + j] - c * b[j]) % p
    return trim(q), trim(a[:db])


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def gcd(a, b, p):
    """Monic gcd."""
    a, b = list(a), list(b)
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def xgcd(a, b, p):
    """Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = list(a), list(b)
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, sub(u0, mul(q, u1, p), p)
        v0, v1 = v1, sub(v0, mul(q, v1, p), p)
    if not r0:
        return [], u0, v0
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(u0, inv, p), scale(v0, inv, p)


def pow_mod(a, e, m, p):
    """a**e mod m by square and multiply."""
    result = [1]
    base = mod(a, m, p)
    while e > 0:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


def deriv(a, p):
    return trim([(i * c) % p for i, c in enumerate(a)][1:])


def evaluate(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def resultant(a, b, p):
    """Res(a, b) over F_p by the Euclidean reduction with sign tracking."""
    a = from_ints(a, p)
    b = from_ints(b, p)
    if not a or not b:
        return 0
    res = 1
    if deg(a) < deg(b):
        if (deg(a) * deg(b)) % 2 == 1:
            res = p - 1
        a, b = b, a
    while True:
        da, db = deg(a), deg(b)
        if db == 0:
            return (res * pow(b[0], da, p)) % p
        r = mod(a, b, p)
        if not r:
            return 0
        if (da * db) % 2 == 1:
            res = (-res) % p
        res = (res * pow(b[-1], da - deg(r), p)) % p
        a, b = b, r


def frobenius_power(m, k, p):
    """x^(p^k) mod m, computed as k successive p-th powers."""
    h = mod([0, 1], m, p)
    for _ in range(k):
        h = pow_mod(h, p, m, p)
    return h


def is_irreducible(a, p):
    """Rabin irreducibility test for monic a of degree >= 1."""
    n = deg(a)
    if n < 1 or a[-1] != 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    for q in factorint(n):
        h = frobenius_power(a, n // q, p)
        if deg(gcd(sub(h, x, p), a, p)) != 0:
            return False
    return frobenius_power(a, n, p) == mod(x, a, p)


def factor(a, p):
    """Factor a over F_p into monic irreducibles with multiplicities.

    Returns [(coeffs, exponent)] sorted by (degree, coefficients).
    """
    dense_desc = [int(c) % p for c in reversed(a)]
    _, factors = gf_factor(dense_desc, p, ZZ)
    out = []
    for fac, e in factors:
        low = tuple(int(c) % p for c in reversed(fac))
        out.append((low, int(e)))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out
