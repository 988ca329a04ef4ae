"""Exact arithmetic in a monogenic number field K = Q[x]/(f).

Everything is computed in the order Z[theta] for a monic integral defining
polynomial f. Elements are coordinate vectors over the power basis
1, theta, ..., theta^(d-1) (ints, or Fractions for non-integral elements);
ideals are full-rank integer lattices in canonical column Hermite form, so
equal ideals have bit-identical representations. No floating point is used
anywhere in this module.
"""

from fractions import Fraction
from math import gcd, lcm

from sympy import isprime, nextprime, divisors
from sympy.ntheory import perfect_power

from . import fppoly
from .errors import (
    DefiningPolyError,
    FieldMismatchError,
    NonDivisibleError,
    NonInvertibleIdealError,
    ZeroIdealError,
)
from .intlattice import IntLattice

_RATIONAL_ROOT_LIMIT = 10**12
_SCREEN_PRIMES = 5


# ---------------------------------------------------------------------------
# Integer polynomial helpers (little-endian coefficient lists)

def _ip_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _ip_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _ip_trim(out)


def _ip_content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def _ip_prem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = b*q + r."""
    da, db = len(a) - 1, len(b) - 1
    d = b[-1]
    r = list(a)
    e = da - db + 1
    while len(r) - 1 >= db and r:
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [d * c for c in r]
        for j in range(db + 1):
            r[shift + j] -= lead * b[j]
        _ip_trim(r)
        e -= 1
    if e > 0:
        m = d**e
        r = [c * m for c in r]
    return r


def int_poly_resultant(a, b):
    """Resultant of two integer polynomials, by the subresultant PRS."""
    a = _ip_trim([int(c) for c in a])
    b = _ip_trim([int(c) for c in b])
    if not a or not b:
        return 0
    s = 1
    if len(a) < len(b):
        if ((len(a) - 1) * (len(b) - 1)) % 2 == 1:
            s = -1
        a, b = b, a
    ca, cb = abs(_ip_content(a)), abs(_ip_content(b))
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    t = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    g = h = 1
    while len(b) - 1 > 0:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da % 2 == 1) and (db % 2 == 1):
            s = -s
        r = _ip_prem(a, b)
        if not r:
            return 0
        a = b
        divisor = g * h**delta
        b = [c // divisor for c in r]
        g = a[-1]
        if delta == 0:
            pass  # h unchanged
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
    # b is a nonzero constant
    da = len(a) - 1
    if da == 0:
        return s * t
    res = b[0] ** da // h ** (da - 1)
    return s * t * res


def int_poly_discriminant(f):
    """Discriminant of an integer polynomial with the standard sign."""
    f = _ip_trim([int(c) for c in f])
    n = len(f) - 1
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    fp = _ip_trim([i * c for i, c in enumerate(f)][1:])
    res = int_poly_resultant(f, fp)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    d, rem = divmod(sign * res, f[-1])
    assert rem == 0
    return d


def prime_power(n):
    """(p, k) with n = p^k and p prime, or None."""
    if n < 2:
        return None
    if isprime(n):
        return n, 1
    pp = perfect_power(n)
    if pp:
        base, e = int(pp[0]), int(pp[1])
        if isprime(base):
            return base, e
    return None


# Large word-sized primes for Chinese-remainder resultants, grown on demand.
_CRT_PRIMES = []


def _crt_primes(total_bits):
    bits = 0
    for p in _CRT_PRIMES:
        bits += p.bit_length() - 1
        if bits >= total_bits:
            break
    start = _CRT_PRIMES[-1] if _CRT_PRIMES else (1 << 62)
    while bits < total_bits:
        start = int(nextprime(start))
        _CRT_PRIMES.append(start)
        bits += start.bit_length() - 1
    out = []
    bits = 0
    for p in _CRT_PRIMES:
        out.append(p)
        bits += p.bit_length() - 1
        if bits >= total_bits:
            return out
    return out


def _resultant_with_monic_crt(f, g):
    """Res(f, g) for monic f, via modular images and CRT reconstruction.

    The true value is bounded through Hadamard's inequality on the
    Sylvester matrix, so enough primes are used for the symmetric lift to
    be exact. Much faster than the subresultant PRS once intermediate
    coefficients would dominate.
    """
    import math

    m = len(f) - 1
    n = len(g) - 1
    if n < 0:
        return 0
    if n == 0:
        return g[0] ** m
    f2 = sum(c * c for c in f)
    g2 = sum(c * c for c in g)
    bound_bits = n * 0.5 * math.log2(f2) + m * 0.5 * math.log2(g2)
    primes = _crt_primes(int(bound_bits) + 8)
    value, modulus = 0, 1
    for p in primes:
        rp = fppoly.resultant(f, g, p)
        inc = ((rp - value) * pow(modulus, -1, p)) % p
        value += modulus * inc
        modulus *= p
    if value > modulus // 2:
        value -= modulus
    return value


# ---------------------------------------------------------------------------
# Number field

class NumberField:
    """A monogenic number field, fixed by its monic integral defining poly.

    The discriminant is the polynomial discriminant of the defining
    polynomial, i.e. the discriminant of the order Z[theta]; callers who
    care whether that order is maximal at a given prime can ask
    order_is_maximal_at.
    """

    __slots__ = (
        "poly",
        "degree",
        "disc",
        "irreducibility_certified",
        "_kd_cache",
        "_ring",
        "_gram",
    )

    def __init__(self, coeffs):
        poly = tuple(int(c) for c in coeffs)
        if len(poly) < 2:
            raise DefiningPolyError("degree must be at least 1")
        if poly[-1] != 1:
            raise DefiningPolyError("defining polynomial must be monic")
        for c, c_raw in zip(poly, coeffs):
            if c != c_raw:
                raise DefiningPolyError("coefficients must be integers")
        self.poly = poly
        self.degree = len(poly) - 1
        self.disc = int_poly_discriminant(poly)
        if self.disc == 0:
            raise DefiningPolyError("defining polynomial has a repeated factor")
        self._screen_reducible()
        self.irreducibility_certified = self._screen_degrees()
        self._kd_cache = {}
        self._ring = None
        self._gram = None

    # -- construction helpers ------------------------------------------------

    def _screen_reducible(self):
        """Reject inputs with an obvious rational root (degree > 1 only)."""
        d = self.degree
        if d == 1:
            return
        f0 = self.poly[0]
        if f0 == 0:
            raise DefiningPolyError("x divides the defining polynomial")
        candidates = {1, -1}
        if abs(f0) <= _RATIONAL_ROOT_LIMIT:
            for q in divisors(abs(f0)):
                candidates.add(q)
                candidates.add(-q)
        for r in candidates:
            acc = 0
            for c in reversed(self.poly):
                acc = acc * r + c
            if acc == 0:
                raise DefiningPolyError(f"rational root {r}: polynomial is reducible")

    def _screen_degrees(self):
        """Factor mod a few primes; True when the patterns certify irreducibility."""
        d = self.degree
        if d == 1:
            return True
        possible = set(range(d + 1))
        p, used = 2, 0
        while used < _SCREEN_PRIMES:
            if self.disc % p != 0:
                degs = []
                for fac, e in fppoly.factor(list(self.poly), p):
                    degs.extend([len(fac) - 1] * e)
                sums = {0}
                for dg in degs:
                    sums |= {s + dg for s in sums}
                possible &= sums
                used += 1
                if possible == {0, d}:
                    return True
            p = int(nextprime(p))
        return possible == {0, d}

    # -- basic API -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"NumberField({list(self.poly)})"

    def element(self, coords):
        return FieldElement(self, coords)

    def zero(self):
        return self.element([0] * self.degree)

    def one(self):
        return self.element([1] + [0] * (self.degree - 1))

    def gen(self):
        c = [0] * self.degree
        if self.degree == 1:
            c[0] = -self.poly[0]
        else:
            c[1] = 1
        return self.element(c)

    def rational(self, q):
        return self.element([q] + [0] * (self.degree - 1))

    # -- coordinate-level arithmetic ------------------------------------------

    def theta_shift(self, v):
        """Coordinates of theta * v (v a length-d coordinate list)."""
        d = self.degree
        top = v[d - 1]
        out = [0] * d
        for i in range(1, d):
            out[i] = v[i - 1]
        if top:
            f = self.poly
            for i in range(d):
                if f[i]:
                    out[i] -= top * f[i]
        return out

    def mul_coords(self, a, b):
        """Coordinates of the product of two elements."""
        d = self.degree
        if d == 1:
            return [a[0] * b[0]]
        out = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        f = self.poly
        for i in range(2 * d - 2, d - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                base = i - d
                for j in range(d):
                    if f[j]:
                        out[base + j] -= c * f[j]
        return out[:d]

    def mul_matrix_columns(self, coords):
        """Columns of the multiplication-by-x matrix: x*theta^j for j < d."""
        cols = [list(coords)]
        for _ in range(self.degree - 1):
            cols.append(self.theta_shift(cols[-1]))
        return cols


class FieldElement:
    """An element of a NumberField in power-basis coordinates.

    Coordinates are ints where possible and Fractions otherwise; arithmetic
    keeps representatives fully reduced modulo the defining polynomial.
    """

    __slots__ = ("K", "coords")

    def __init__(self, K, coords):
        coords = list(coords)
        if len(coords) != K.degree:
            raise FieldMismatchError(
                f"expected {K.degree} coordinates, got {len(coords)}"
            )
        norm = []
        for c in coords:
            if isinstance(c, Fraction):
                norm.append(int(c) if c.denominator == 1 else c)
            elif isinstance(c, int):
                norm.append(c)
            else:
                raise TypeError(f"bad coordinate type {type(c).__name__}")
        self.K = K
        self.coords = tuple(norm)

    # -- predicates -----------------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.K != self.K:
                raise FieldMismatchError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.K.rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.K, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.K, [a - b for a, b in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(self.K, [-c for c in self.coords])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coords, o.coords
        # scalar fast paths keep resultant/determinant work over O_K cheap
        if self.is_rational():
            s = a[0]
            if s == 0:
                return self.K.zero()
            return FieldElement(self.K, [s * c for c in b])
        if o.is_rational():
            s = b[0]
            if s == 0:
                return self.K.zero()
            return FieldElement(self.K, [s * c for c in a])
        return FieldElement(self.K, self.K.mul_coords(a, b))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.K.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse, via a fraction-free linear solve."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return self.K.rational(Fraction(1, 1) / self.coords[0])
        den = 1
        for c in self.coords:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coords]
        x, _ = _solve_mul_system(self.K, ints)
        return FieldElement(self.K, [den * c for c in x])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    # -- norm ------------------------------------------------------------------

    def norm(self):
        """Field norm N(self) as a Fraction (integer-valued on Z[theta])."""
        if self.is_zero():
            return Fraction(0)
        den = 1
        for c in self.coords:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        g = [int(c * den) for c in self.coords]
        while g and g[-1] == 0:
            g.pop()
        if self.K.degree <= 6:
            r = int_poly_resultant(list(self.K.poly), g)
        else:
            r = _resultant_with_monic_crt(list(self.K.poly), g)
        return Fraction(r, den**self.K.degree)

    def norm_int(self):
        n = self.norm()
        if n.denominator != 1:
            raise ValueError("norm is not an integer")
        return n.numerator

    # -- misc -------------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return (
            isinstance(other, FieldElement)
            and self.K == other.K
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.K.poly, self.coords))

    def __repr__(self):
        return f"FieldElement({poly_str(self.coords)})"


def _solve_mul_system(K, coords):
    """Solve (mult-by-coords matrix) x = e_0 by Bareiss elimination.

    Returns (x, det) with x the Fraction solution (the inverse element's
    coordinates) and det the signed determinant, i.e. the norm.
    """
    d = K.degree
    cols = K.mul_matrix_columns(list(coords))
    a = [[cols[j][i] for j in range(d)] + [1 if i == 0 else 0] for i in range(d)]
    prev = 1
    for k in range(d - 1):
        if a[k][k] == 0:
            for r in range(k + 1, d):
                if a[r][k]:
                    # negate the incoming row so the determinant is preserved
                    a[k], a[r] = [-v for v in a[r]], a[k]
                    break
            else:
                raise ZeroDivisionError("singular multiplication matrix")
        akk = a[k][k]
        for i in range(k + 1, d):
            aik = a[i][k]
            row = a[i]
            top = a[k]
            for j in range(k + 1, d + 1):
                row[j] = (akk * row[j] - aik * top[j]) // prev
            row[k] = 0
        prev = akk
    det = a[d - 1][d - 1]
    if det == 0:
        raise ZeroDivisionError("singular multiplication matrix")
    x = [Fraction(0)] * d
    for i in range(d - 1, -1, -1):
        s = Fraction(a[i][d])
        for j in range(i + 1, d):
            if a[i][j]:
                s -= a[i][j] * x[j]
        x[i] = s / a[i][i]
    return x, det


def norm_quotient(alpha):
    """(beta, n) with alpha * beta == n == N(alpha), beta in Z[theta].

    beta is the first column of the adjugate of the multiplication matrix,
    so it always has integer coordinates.
    """
    K = alpha.K
    if not alpha.is_integral():
        raise ValueError("norm_quotient needs an integral element")
    x, det = _solve_mul_system(K, list(alpha.coords))
    beta = []
    for c in x:
        v = c * det
        assert v.denominator == 1
        beta.append(v.numerator)
    return FieldElement(K, beta), det


def poly_str(coords, var="θ"):
    """Human-readable polynomial in var from little-endian coordinates."""
    terms = []
    for i, c in enumerate(coords):
        if c == 0:
            continue
        if i == 0:
            terms.append(f"{c}")
        else:
            v = var if i == 1 else f"{var}^{i}"
            if c == 1:
                terms.append(v)
            elif c == -1:
                terms.append(f"-{v}")
            else:
                terms.append(f"{c}{v}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# ---------------------------------------------------------------------------
# Ideals

class Ideal:
    """A fractional ideal of Z[theta] as a canonical HNF lattice.

    `cols[j]` is the j-th basis vector (pivot at index j, positive, entries
    below other pivots reduced), `denom` a positive integer with content
    coprime to the lattice. Integral ideals have denom == 1. Instances are
    immutable; derived data (norm, inverse, reduced bases) is cached.
    """

    __slots__ = ("K", "cols", "denom", "_gens", "_inv", "_lll")

    def __init__(self, K, cols, denom=1, gens=None):
        self.K = K
        self.cols = tuple(tuple(int(x) for x in c) for c in cols)
        self.denom = int(denom)
        self._gens = gens
        self._inv = None
        self._lll = None
        if self.denom < 1:
            raise ValueError("denominator must be positive")

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def ring(K):
        """The unit ideal O_K (cached per field)."""
        if K._ring is None:
            d = K.degree
            cols = tuple(
                tuple(1 if i == j else 0 for i in range(d)) for j in range(d)
            )
            K._ring = Ideal(K, cols, 1, gens=(K.one(),))
        return K._ring

    @staticmethod
    def from_generators(K, gens):
        """HNF lattice of the O_K-module generated by integral elements."""
        elems = []
        for g in gens:
            if isinstance(g, (int, Fraction)):
                g = K.rational(g)
            if g.K != K:
                raise FieldMismatchError("generator from a different field")
            if not g.is_integral():
                raise ValueError("generators must be integral")
            if not g.is_zero():
                elems.append(g)
        if not elems:
            raise ZeroIdealError("all generators are zero")
        modulus = 0
        for g in elems:
            modulus = gcd(modulus, abs(g.norm_int()))
        lat = IntLattice(K.degree, modulus=modulus or None)
        for g in elems:
            v = list(g.coords)
            for _ in range(K.degree):
                lat.add(v)
                v = K.theta_shift(v)
        if not lat.is_full_rank():
            raise ZeroIdealError("generators span a degenerate lattice")
        return Ideal(K, lat.basis_columns(), 1, gens=tuple(elems))

    @staticmethod
    def principal(K, g):
        return Ideal.from_generators(K, [g])

    @staticmethod
    def from_hnf_matrix(K, rows, denom=1):
        """Rebuild from a row-major HNF matrix, validating every invariant."""
        d = K.degree
        rows = [list(map(int, r)) for r in rows]
        if len(rows) != d or any(len(r) != d for r in rows):
            raise ValueError("HNF matrix has wrong shape")
        cols = [[rows[i][j] for i in range(d)] for j in range(d)]
        for j in range(d):
            if cols[j][j] <= 0:
                raise ValueError("HNF diagonal entries must be positive")
            for i in range(j):
                if cols[j][i] != 0:
                    raise ValueError("HNF matrix is not lower triangular")
            for i in range(j + 1, d):
                if not 0 <= cols[j][i] < cols[i][i]:
                    raise ValueError("HNF entries are not reduced")
        ideal = Ideal(K, cols, denom)
        lat = ideal._lattice()
        for c in cols:
            if K.theta_shift(list(c)) not in lat:
                raise ValueError("lattice is not closed under multiplication by theta")
        return ideal

    # -- representation ------------------------------------------------------------

    def hnf_matrix(self):
        d = self.K.degree
        return tuple(
            tuple(self.cols[j][i] for j in range(d)) for i in range(d)
        )

    def basis_elements(self):
        return [self.K.element(list(c)) for c in self.cols]

    def _lattice(self):
        lat = IntLattice(self.K.degree)
        for c in self.cols:
            lat.add(list(c))
        return lat

    def det(self):
        out = 1
        for j in range(self.K.degree):
            out *= self.cols[j][j]
        return out

    def norm(self):
        return Fraction(self.det(), self.denom**self.K.degree)

    def norm_int(self):
        n = self.norm()
        if n.denominator != 1:
            raise ValueError("fractional ideal")
        return n.numerator

    def is_integral(self):
        return self.denom == 1

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.K == other.K
            and self.denom == other.denom
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.K.poly, self.cols, self.denom))

    def __repr__(self):
        return f"Ideal(norm={self.norm()}, denom={self.denom})"

    # -- membership ------------------------------------------------------------------

    def reduce_vector(self, vec):
        """Reduce an integer vector against the basis columns."""
        d = self.K.degree
        v = [int(x) for x in vec]
        cols = self.cols
        for j in range(d):
            x = v[j]
            if x == 0:
                continue
            q = x // cols[j][j]
            if q:
                cj = cols[j]
                for i in range(j, d):
                    v[i] -= q * cj[i]
        return v

    def contains_vector(self, vec):
        return all(x == 0 for x in self.reduce_vector(vec))

    def contains_element(self, elem):
        if elem.K != self.K:
            raise FieldMismatchError("element from a different field")
        scaled = [c * self.denom for c in elem.coords]
        ints = []
        for c in scaled:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    return False
                c = c.numerator
            ints.append(c)
        return self.contains_vector(ints)

    def contains_ideal(self, other):
        """True when other is a subset of self (as lattices)."""
        if other.K != self.K:
            raise FieldMismatchError("ideal from a different field")
        a, b = self.denom, other.denom
        mine = IntLattice(self.K.degree)
        for c in self.cols:
            mine.add([b * x for x in c])
        return all([a * x for x in c] in mine for c in other.cols)

    # -- arithmetic ---------------------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if other.K != self.K:
            raise FieldMismatchError("ideals of different fields")
        K = self.K
        # single-generator operands multiply in O(d^3) instead of O(d^4)
        if self._gens is not None and len(self._gens) == 1:
            return other._times_generator(self._gens[0], self.denom)
        if other._gens is not None and len(other._gens) == 1:
            return self._times_generator(other._gens[0], other.denom)
        modulus = self.det() * other.det()
        lat = IntLattice(K.degree, modulus=modulus)
        for u in self.cols:
            mcols = K.mul_matrix_columns(list(u))
            for v in other.cols:
                w = [0] * K.degree
                for j, vj in enumerate(v):
                    if vj:
                        col = mcols[j]
                        for i in range(K.degree):
                            w[i] += vj * col[i]
                lat.add(w)
        if not lat.is_full_rank():
            raise ZeroIdealError("degenerate product lattice")
        gens = None
        if self._gens and other._gens and len(self._gens) * len(other._gens) == 1:
            gens = (self._gens[0] * other._gens[0],)
        return _normalized(K, lat.basis_columns(), self.denom * other.denom, gens)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = Ideal.ring(self.K)
        base = self
        while e > 0:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def inverse(self):
        """The fractional inverse, with I * I^-1 = O_K verified by norms."""
        if self._inv is not None:
            return self._inv
        K = self.K
        n = self.det()
        if n == 0:
            raise ZeroIdealError("zero ideal has no inverse")
        inv = self._principal_inverse()
        if inv is None:
            lat = _saturate_kernel(K, self.cols, n)
            if lat.det() * n != n**K.degree:
                raise NonInvertibleIdealError(
                    "lattice is not invertible over this order"
                )
            inv = _normalized(K, lat.basis_columns(), n)
        if self.denom != 1:
            inv = _normalized(
                K, [[self.denom * x for x in c] for c in inv.cols], inv.denom
            )
        if (self.norm() * inv.norm()) != 1:
            raise NonInvertibleIdealError("inverse norm check failed")
        self._inv = inv
        inv._inv = self
        return inv

    def _principal_inverse(self):
        """Inverse of the integral part via a known single generator."""
        if not self._gens or len(self._gens) != 1:
            return None
        alpha = self._gens[0]
        beta, det = norm_quotient(alpha)
        n = abs(det)
        # beta divides n (n/beta = ±alpha), so n*Z^d sits inside (beta)
        lat = IntLattice(self.K.degree, modulus=n)
        v = list(beta.coords)
        for _ in range(self.K.degree):
            lat.add(v)
            v = self.K.theta_shift(v)
        return _normalized(self.K, lat.basis_columns(), n, gens=(beta,))

    def divide(self, other):
        """Exact quotient self / other; other must divide self.

        For integral inputs with other | self the result Q is the integral
        ideal with Q * other = self, recovered as the module colon
        (self : other) and cross-checked by norms.
        """
        if other.K != self.K:
            raise FieldMismatchError("ideals of different fields")
        K = self.K
        a, b = other.denom, self.denom
        xcols = [[a * v for v in c] for c in self.cols]  # a*B where self = B/b
        ycols = [[b * v for v in c] for c in other.cols]  # b*A where other = A/a
        ylat = IntLattice(K.degree)
        for c in ycols:
            ylat.add(list(c))
        for c in xcols:
            if c not in ylat:
                raise NonDivisibleError("divisor does not contain the dividend")
        xdet = self.det() * a**K.degree
        ydet = other.det() * b**K.degree
        q = self._divide_by_principal(other, xcols)
        if q is None:
            lat = _colon_lattice(K, xcols, xdet, ycols)
            q = _normalized(K, lat.basis_columns(), 1)
        if q.norm() * ydet != xdet:
            raise NonDivisibleError("division is not exact in this order")
        return q

    def _divide_by_principal(self, other, xcols):
        """(X : (gamma)) = gamma^-1 * X, when other has a known generator."""
        if not other._gens or len(other._gens) != 1:
            return None
        gamma = other._gens[0] * (self.denom)  # other scaled by b
        beta, det = norm_quotient(gamma)
        n = abs(det)
        K = self.K
        mcols = K.mul_matrix_columns(list(beta.coords))
        xdet = self.det() * other.denom**K.degree
        quotient_det, rem = divmod(xdet, n)
        if rem:
            return None
        lat = IntLattice(K.degree, modulus=quotient_det)
        for c in xcols:
            w = [0] * K.degree
            for j, vj in enumerate(c):
                if vj:
                    col = mcols[j]
                    for i in range(K.degree):
                        w[i] += vj * col[i]
            v, ok = _exact_div_vector(w, n)
            if not ok:
                return None
            lat.add(v)
        if not lat.is_full_rank():
            return None
        return _normalized(K, lat.basis_columns(), 1)

    def _times_generator(self, alpha, extra_denom):
        """self * (alpha)/extra_denom for an integral generator alpha."""
        K = self.K
        mcols = K.mul_matrix_columns(list(alpha.coords))
        # det of the alpha-scaled lattice bounds the entries during insertion
        lat = IntLattice(K.degree, modulus=abs(alpha.norm_int()) * self.det())
        for c in self.cols:
            w = [0] * K.degree
            for j, vj in enumerate(c):
                if vj:
                    col = mcols[j]
                    for i in range(K.degree):
                        w[i] += vj * col[i]
            lat.add(w)
        if not lat.is_full_rank():
            raise ZeroIdealError("degenerate product lattice")
        gens = None
        if self._gens and len(self._gens) == 1:
            gens = (self._gens[0] * alpha,)
        return _normalized(
            K, lat.basis_columns(), self.denom * extra_denom, gens=gens
        )

    def mul_element(self, elem):
        """The ideal elem * self (elem integral, result assumed integral)."""
        K = self.K
        if not elem.is_integral():
            raise ValueError("element must be integral")
        mcols = K.mul_matrix_columns(list(elem.coords))
        modulus, rem = divmod(
            abs(elem.norm_int()) * self.det(), self.denom**K.degree
        )
        if rem:
            raise NonDivisibleError("product is not integral")
        lat = IntLattice(K.degree, modulus=modulus)
        gens = None
        if self._gens:
            gens = tuple(elem * g for g in self._gens)
        for c in self.cols:
            w = [0] * K.degree
            for j, vj in enumerate(c):
                if vj:
                    col = mcols[j]
                    for i in range(K.degree):
                        w[i] += vj * col[i]
            if self.denom != 1:
                w, ok = _exact_div_vector(w, self.denom)
                if not ok:
                    raise NonDivisibleError("product is not integral")
            lat.add(w)
        if not lat.is_full_rank():
            raise ZeroIdealError("zero multiplier")
        return _normalized(K, lat.basis_columns(), 1, gens=gens)


def _exact_div_vector(v, n):
    out = []
    for x in v:
        q, r = divmod(x, n)
        if r:
            return None, False
        out.append(q)
    return out, True


def _normalized(K, cols, denom, gens=None):
    """Reduce a (cols, denom) pair by the common content."""
    g = denom
    for c in cols:
        for x in c:
            g = gcd(g, x)
            if g == 1:
                break
        if g == 1:
            break
    if g > 1:
        cols = [[x // g for x in c] for c in cols]
        denom //= g
        gens = None
    return Ideal(K, cols, denom, gens=gens)


def _saturate_kernel(K, cols, n):
    """Lattice {y : y * b in n*O_K for every basis column b}, i.e. n*I^-1.

    The congruences M_b y = 0 (mod n) are collected as functionals; the
    solution lattice is n times the dual of the lattice they span together
    with n*Z^d.
    """
    d = K.degree
    r = IntLattice(d, modulus=n)
    for c in cols:
        mcols = K.mul_matrix_columns(list(c))
        for i in range(d):
            r.add([mcols[j][i] for j in range(d)])
    return _scaled_dual(r, n)


def _triangular_adjugate(cols, det):
    """Adjugate det * M^-1 of the lower-triangular basis matrix M.

    M[i][j] = cols[j][i]; solved column by column by forward substitution,
    with the adjugate's integrality asserted.
    """
    d = len(cols)
    adj = [[0] * d for _ in range(d)]
    for k in range(d):
        x = [Fraction(0)] * d
        x[k] = Fraction(det, cols[k][k])
        for i in range(k + 1, d):
            s = Fraction(0)
            for j in range(k, i):
                if cols[j][i]:
                    s += cols[j][i] * x[j]
            x[i] = -s / cols[i][i]
        for i in range(d):
            assert x[i].denominator == 1, "adjugate must be integral"
            adj[i][k] = x[i].numerator
    return adj


def _colon_lattice(K, xcols, xdet, ycols):
    """Module colon {y : y * Y <= X} for integral lattices X, Y with X <= Y."""
    d = K.degree
    adj = _triangular_adjugate(xcols, xdet)
    functionals = []
    moduli = []
    for c in ycols:
        mcols = K.mul_matrix_columns(list(c))
        # rows of adj(H_X) * M_c, each a congruence mod xdet
        for i in range(d):
            row = [
                sum(adj[i][k] * mcols[j][k] for k in range(d)) for j in range(d)
            ]
            g = xdet
            for x in row:
                g = gcd(g, x)
            functionals.append([x // g for x in row])
            moduli.append(xdet // g)
    m = 1
    for x in moduli:
        m = lcm(m, x)
    r = IntLattice(d, modulus=m)
    for row, mi in zip(functionals, moduli):
        scale = m // mi
        r.add([scale * x for x in row])
    return _scaled_dual(r, m)


def _scaled_dual(r, n):
    """n * (dual of r) for a full-rank lattice r containing n*Z^d."""
    d = r.dim
    cols = r.basis_columns()
    # Solve U * x = n*e_k for each k, U = transpose of the basis matrix
    # (upper triangular): U[i][j] = cols[i][j].
    out = IntLattice(d, modulus=n)
    for k in range(d):
        x = [Fraction(0)] * d
        x[k] = Fraction(n, cols[k][k])
        for i in range(k - 1, -1, -1):
            s = Fraction(0)
            for j in range(i + 1, d):
                if cols[i][j]:
                    s += cols[i][j] * x[j]
            x[i] = -s / cols[i][i]
        v = []
        for c in x:
            assert c.denominator == 1, "dual lattice is not integral"
            v.append(c.numerator)
        out.add(v)
    assert out.is_full_rank()
    return out


# ---------------------------------------------------------------------------
# Prime ideals and factorization of rational primes

class PrimeIdeal:
    """A prime of Z[theta] in two-element form (p, g(theta)).

    gen_poly is the monic irreducible factor of the defining polynomial
    mod p that cuts out this prime, with coefficients canonically in [0, p).
    """

    __slots__ = ("K", "p", "gen_poly", "res_degree", "ram_index", "_ideal")

    def __init__(self, K, p, gen_poly, res_degree, ram_index):
        self.K = K
        self.p = int(p)
        self.gen_poly = tuple(int(c) % self.p for c in gen_poly[:-1]) + (1,)
        self.res_degree = int(res_degree)
        self.ram_index = int(ram_index)
        self._ideal = None
        if len(self.gen_poly) - 1 != self.res_degree:
            raise ValueError("gen_poly degree must equal the residue degree")

    def norm(self):
        return self.p**self.res_degree

    def to_ideal(self):
        """HNF lattice of (p, g(theta))."""
        if self._ideal is not None:
            return self._ideal
        K = self.K
        d = K.degree
        if self.res_degree == d:
            cols = tuple(
                tuple(self.p if i == j else 0 for i in range(d)) for j in range(d)
            )
            ideal = Ideal(K, cols, 1, gens=(K.rational(self.p),))
        else:
            lat = IntLattice(d, modulus=self.p)
            v = list(self.gen_poly) + [0] * (d - self.res_degree - 1)
            for _ in range(d):
                lat.add(v)
                v = K.theta_shift(v)
            ideal = Ideal(
                K,
                lat.basis_columns(),
                1,
                gens=(K.rational(self.p), K.element(list(self.gen_poly) + [0] * (d - self.res_degree - 1))),
            )
        self._ideal = ideal
        return ideal

    def __eq__(self, other):
        return (
            isinstance(other, PrimeIdeal)
            and self.K == other.K
            and self.p == other.p
            and self.gen_poly == other.gen_poly
        )

    def __hash__(self):
        return hash((self.K.poly, self.p, self.gen_poly))

    def __repr__(self):
        return f"PrimeIdeal(p={self.p}, g={poly_str(self.gen_poly, 'x')}, f={self.res_degree}, e={self.ram_index})"

    def label(self, var="θ"):
        return f"({self.p}, {poly_str(self.gen_poly, var)})"


def kummer_dedekind(p, K):
    """Factor p*O_K by factoring the defining polynomial mod p.

    Returns the list of PrimeIdeal factors (ram_index carries the exponent),
    sorted by (residue degree, gen_poly). The product with multiplicities
    recomposes (p); the exponent-weighted degrees sum to d.
    """
    p = int(p)
    if p in K._kd_cache:
        return K._kd_cache[p]
    if p < 2 or not isprime(p):
        raise ValueError(f"{p} is not prime")
    factors = fppoly.factor(list(K.poly), p)
    out = []
    total = 0
    for coeffs, e in factors:
        deg = len(coeffs) - 1
        total += e * deg
        out.append(PrimeIdeal(K, p, coeffs, deg, e))
    assert total == K.degree, "Kummer-Dedekind degree bookkeeping failed"
    K._kd_cache[p] = out
    return out


def as_prime_ideal(ideal):
    """The PrimeIdeal equal to this integral ideal, or None.

    Norm 1 and non-prime-power norms are rejected immediately; a prime norm
    pins the unique degree-one prime above p (recovered from the quotient
    map without factoring mod p); a proper prime power is compared against
    the Kummer-Dedekind factors of matching residue degree.
    """
    if ideal.denom != 1:
        raise ValueError("prime test requires an integral ideal")
    K = ideal.K
    n = ideal.det()
    if n == 1:
        return None
    pk = prime_power(n)
    if pk is None:
        return None
    p, k = pk
    if k == 1:
        prime = _degree_one_prime(ideal, p)
        if prime is not None:
            return prime
    for cand in kummer_dedekind(p, K):
        if cand.res_degree == k and cand.to_ideal() == ideal:
            return cand
    return None


def _degree_one_prime(ideal, p):
    """Extract (p, theta - a) from a norm-p lattice via its quotient map."""
    K = ideal.K
    d = K.degree
    e0 = [0] * d
    e0[0] = 1
    r0 = ideal.reduce_vector(e0)
    if d == 1:
        a = 0
    else:
        e1 = [0] * d
        e1[1] = 1
        r1 = ideal.reduce_vector(e1)
        m = next(j for j in range(d) if ideal.cols[j][j] == p)
        c0, c1 = r0[m] % p, r1[m] % p
        if c0 == 0:
            return None
        a = (c1 * pow(c0, -1, p)) % p
    if fppoly.evaluate(list(K.poly), a, p) != 0:
        return None
    if d > 1:
        vec = [-a] + [0] * (d - 1)
        vec[1] = 1
        if not ideal.contains_vector(vec):
            return None
    # the ramification index is the multiplicity of (x - a) in f mod p
    e = 0
    rem = fppoly.from_ints(list(K.poly), p)
    while rem:
        q, r = fppoly.divmod_(rem, [(-a) % p, 1], p)
        if r:
            break
        e += 1
        rem = q
    return PrimeIdeal(K, p, ((-a) % p, 1), 1, e)


def order_is_maximal_at(p, K):
    """Dedekind's criterion: is Z[theta] maximal at p?"""
    p = int(p)
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    factors = fppoly.factor(list(K.poly), p)
    gbar = [1]
    hbar = [1]
    for coeffs, e in factors:
        gbar = fppoly.mul(gbar, list(coeffs), p)
        if e > 1:
            for _ in range(e - 1):
                hbar = fppoly.mul(hbar, list(coeffs), p)
    repeated = fppoly.gcd(gbar, hbar, p)
    if fppoly.deg(repeated) == 0:
        return True
    glift = [int(c) for c in gbar]
    hlift = [int(c) for c in hbar]
    prod = _ip_mul(glift, hlift)
    diff = list(prod) + [0] * max(0, len(K.poly) - len(prod))
    for i, c in enumerate(K.poly):
        diff[i] -= c
    fbig = [c // p for c in diff]
    assert all(c * p == d for c, d in zip(fbig, diff)), "Dedekind lift failed"
    fbar = fppoly.from_ints(fbig, p)
    g = fppoly.gcd(fbar, repeated, p)
    return fppoly.deg(g) == 0


# ---------------------------------------------------------------------------
# Polynomials over O_K: discriminant via Sylvester + Berkowitz

def poly_discriminant(coeffs):
    """Discriminant of a monic polynomial with FieldElement coefficients.

    Computed as the Sylvester resultant of g and g' with a division-free
    (Berkowitz) determinant, valid over the ring O_K, with the usual sign
    (-1)^(n(n-1)/2).
    """
    coeffs = list(coeffs)
    if len(coeffs) < 2:
        raise ValueError("discriminant needs degree >= 1")
    K = coeffs[-1].K
    if coeffs[-1] != K.one():
        raise ValueError("polynomial must be monic")
    n = len(coeffs) - 1
    if n == 1:
        return K.one()
    deriv = [coeffs[i] * i for i in range(1, n + 1)]
    res = _sylvester_resultant(coeffs, deriv, K)
    if (n * (n - 1) // 2) % 2:
        return -res
    return res


def _sylvester_resultant(a, b, K):
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero, one = K.zero(), K.one()
    rows = []
    ahigh = list(reversed(a))
    bhigh = list(reversed(b))
    for i in range(n):
        rows.append([zero] * i + ahigh + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + bhigh + [zero] * (m - 1 - i))
    assert all(len(r) == size for r in rows)
    return berkowitz_det(rows, zero, one)


def berkowitz_det(matrix, zero, one):
    """Division-free determinant over a commutative ring."""
    n = len(matrix)
    if n == 0:
        return one
    poly = [one, -matrix[0][0]]
    for i in range(1, n):
        a = matrix[i][i]
        row = matrix[i][:i]
        col = [matrix[k][i] for k in range(i)]
        block = [matrix[k][:i] for k in range(i)]
        items = []
        v = col
        items.append(_ring_dot(row, v, zero))
        for _ in range(i - 1):
            v = _ring_matvec(block, v, zero)
            items.append(_ring_dot(row, v, zero))
        toep = [one, -a] + [-x for x in items]
        m = len(poly)
        new = []
        for k in range(m + 1):
            acc = zero
            lo = max(0, k - len(toep) + 1)
            for j in range(lo, min(k, m - 1) + 1):
                acc = acc + toep[k - j] * poly[j]
            new.append(acc)
        poly = new
    c = poly[-1]
    return c if n % 2 == 0 else -c


def _ring_dot(a, b, zero):
    acc = zero
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


def _ring_matvec(m, v, zero):
    return [_ring_dot(row, v, zero) for row in m]
