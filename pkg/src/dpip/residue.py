"""Arithmetic in residue fields O_K/P = F_{p^f} and the splitting test.

Residue field elements are tuples of ints (coefficients of a polynomial in
the class of theta, reduced mod the prime's gen_poly and p). The key
operation is the complete-splitting predicate: a monic squarefree g of
degree n splits into n distinct linear factors over F_q exactly when
x^q = x (mod g), with the Frobenius power built from f successive p-th
powers so exponent sizes stay at log p.
"""

from . import fppoly
from .errors import SquarefreeViolationError


class ResidueField:
    """F_{p^f} presented as F_p[y]/(modulus)."""

    __slots__ = ("p", "f", "modulus", "q")

    def __init__(self, p, modulus, check=True):
        self.p = int(p)
        self.modulus = tuple(int(c) % self.p for c in modulus)
        if not self.modulus or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.f = len(self.modulus) - 1
        if self.f < 1:
            raise ValueError("modulus must have degree >= 1")
        self.q = self.p**self.f
        if check and not fppoly.is_irreducible(list(self.modulus), self.p):
            raise ValueError("modulus is reducible over F_p")

    # elements are int tuples of length < f+1 semantics: little-endian, trimmed
    def zero(self):
        return ()

    def one(self):
        return (1,)

    def from_int(self, n):
        n %= self.p
        return (n,) if n else ()

    def from_poly(self, coeffs):
        """Image of an integer polynomial in theta under theta -> y."""
        return tuple(fppoly.mod(fppoly.from_ints(coeffs, self.p), list(self.modulus), self.p))

    def add(self, a, b):
        return tuple(fppoly.add(list(a), list(b), self.p))

    def sub(self, a, b):
        return tuple(fppoly.sub(list(a), list(b), self.p))

    def mul(self, a, b):
        prod = fppoly.mul(list(a), list(b), self.p)
        return tuple(fppoly.mod(prod, list(self.modulus), self.p))

    def neg(self, a):
        return tuple(fppoly.sub([], list(a), self.p))

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero residue")
        g, _, v = fppoly.xgcd(list(self.modulus), list(a), self.p)
        if fppoly.deg(g) != 0:
            raise ZeroDivisionError("element is not invertible")
        return tuple(fppoly.mod(v, list(self.modulus), self.p))

    def scalar(self, a, n):
        return tuple(fppoly.scale(list(a), n, self.p))

    def __eq__(self, other):
        return (
            isinstance(other, ResidueField)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"ResidueField(p={self.p}, f={self.f})"

    def elements(self):
        """Iterate over all q field elements (test-sized fields only)."""
        from itertools import product

        for coeffs in product(range(self.p), repeat=self.f):
            yield tuple(fppoly.trim(list(coeffs)))


class ResiduePoly:
    """A polynomial over a ResidueField, little-endian, trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        cs = [tuple(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    def degree(self):
        return len(self.coeffs) - 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == (1,)

    def __eq__(self, other):
        return (
            isinstance(other, ResiduePoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"ResiduePoly(deg={self.degree()}, q={self.field.q})"

    def evaluate(self, x):
        F = self.field
        acc = F.zero()
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc


def _rp_mul(F, a, b):
    if not a or not b:
        return []
    out = [F.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    while out and not out[-1]:
        out.pop()
    return out


def _rp_mod(F, a, m):
    """Remainder of a modulo m (m with invertible leading coefficient)."""
    a = list(a)
    dm = len(m) - 1
    lead_inv = F.inv(m[-1])
    while len(a) - 1 >= dm and a:
        c = F.mul(a[-1], lead_inv)
        k = len(a) - 1 - dm
        for j in range(dm + 1):
            a[k + j] = F.sub(a[k + j], F.mul(c, m[j]))
        while a and not a[-1]:
            a.pop()
    return a


def _rp_gcd(F, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _rp_mod(F, a, b)
    return a


def _rp_pow_mod(F, base, e, m):
    result = [F.one()]
    base = _rp_mod(F, list(base), m)
    while e > 0:
        if e & 1:
            result = _rp_mod(F, _rp_mul(F, result, base), m)
        base = _rp_mod(F, _rp_mul(F, base, base), m)
        e >>= 1
    return result


def reduce_poly_mod_prime(coeffs, prime):
    """Reduce a monic polynomial over O_K modulo a prime ideal.

    Each coefficient c(theta) maps to c(y) mod (gen_poly, p); the result is
    monic of the same degree over the residue field.
    """
    F = residue_field(prime)
    out = []
    for c in coeffs:
        if not c.is_integral():
            raise ValueError("coefficients must be integral")
        out.append(F.from_poly(list(c.coords)))
    if not out or out[-1] != (1,):
        raise ValueError("polynomial must be monic")
    return ResiduePoly(F, out)


def residue_field(prime, check=False):
    """The residue field of a PrimeIdeal (gen_poly already irreducible)."""
    return ResidueField(prime.p, prime.gen_poly, check=check)


def element_in_prime(elem, prime):
    """Membership of an integral element in a prime ideal, via its image."""
    if not elem.is_integral():
        raise ValueError("membership test needs an integral element")
    F = residue_field(prime)
    return not F.from_poly(list(elem.coords))


def splits_completely(g, F=None):
    """Does the monic squarefree g factor into deg(g) distinct linear parts?

    Decided by x^q = x (mod g). The squarefree precondition is enforced:
    a nontrivial gcd(g, g') means the caller's discriminant gate failed,
    which is reported rather than repaired.
    """
    if F is None:
        F = g.field
    elif F != g.field:
        raise ValueError("polynomial does not live over the given field")
    if not g.is_monic() or g.degree() < 1:
        raise ValueError("splitting test needs a monic polynomial of degree >= 1")
    coeffs = list(g.coeffs)
    deriv = [F.scalar(c, i) for i, c in enumerate(coeffs)][1:]
    while deriv and not deriv[-1]:
        deriv.pop()
    if len(_rp_gcd(F, coeffs, deriv)) != 1:
        raise SquarefreeViolationError(
            "polynomial shares a factor with its derivative"
        )
    x = [F.zero(), F.one()]
    h = _rp_mod(F, x, coeffs)
    for _ in range(F.f):
        h = _rp_pow_mod(F, h, F.p, coeffs)
    return h == _rp_mod(F, x, coeffs)
