"""Integer lattices in Z^d maintained in column-style Hermite form.

A basis vector with pivot at index j has zeros before j and a positive
entry at j; the canonical form additionally reduces every entry below a
pivot modulo that row's own pivot. Canonical Hermite form is unique per
lattice, which is what makes ideal representations comparable bit for bit.

When a positive modulus m is supplied the lattice is seeded with m*e_j for
every j (callers must guarantee m*Z^d lies inside the target lattice, e.g.
m a multiple of the ideal norm); entries can then be reduced mod m
throughout, which keeps coefficient growth bounded during insertion.
"""


def xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def bareiss_det(vectors):
    """Exact determinant of a square integer matrix (given as rows)."""
    a = [list(map(int, row)) for row in vectors]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row, top = a[i], a[k]
            for j in range(k + 1, n):
                row[j] = (akk * row[j] - aik * top[j]) // prev
            row[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


class IntLattice:
    __slots__ = ("dim", "modulus", "rows", "rank", "_canonical")

    def __init__(self, dim, modulus=None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        if modulus is not None and modulus <= 0:
            raise ValueError("modulus must be positive")
        self.dim = dim
        self.modulus = modulus
        self.rows = [None] * dim
        self.rank = 0
        self._canonical = False
        if modulus is not None:
            for j in range(dim):
                v = [0] * dim
                v[j] = modulus
                self.rows[j] = v
            self.rank = dim

    def add(self, vec):
        """Insert a vector, keeping the echelon (pivot-per-row) structure."""
        d = self.dim
        if len(vec) != d:
            raise ValueError("dimension mismatch")
        m = self.modulus
        v = [int(x) % m for x in vec] if m else [int(x) for x in vec]
        rows = self.rows
        self._canonical = False
        for j in range(d):
            x = v[j]
            if x == 0:
                continue
            r = rows[j]
            if r is None:
                if x < 0:
                    v = [-t for t in v]
                rows[j] = v
                self.rank += 1
                return
            a = r[j]
            if x % a == 0:
                q = x // a
                for i in range(j, d):
                    v[i] -= q * r[i]
            else:
                g, s, t = xgcd(a, x)
                qa, qx = a // g, x // g
                for i in range(j, d):
                    ri, vi = r[i], v[i]
                    r[i] = s * ri + t * vi
                    v[i] = qa * vi - qx * ri
            if m:
                for i in range(j + 1, d):
                    r[i] %= m
                    v[i] %= m
        # v reduced to zero: already in the lattice

    def extend(self, vectors):
        for v in vectors:
            self.add(v)

    def reduce(self, vec):
        """Remainder of vec after reduction against the current pivots.

        The result is zero exactly when vec lies in the lattice; otherwise
        the nonzero entries sit at rows whose pivot does not divide them
        (or rows with no pivot).
        """
        d = self.dim
        v = [int(x) for x in vec]
        for j in range(d):
            x = v[j]
            if x == 0:
                continue
            r = self.rows[j]
            if r is None:
                continue
            q = x // r[j]
            if q:
                for i in range(j, d):
                    v[i] -= q * r[i]
        return v

    def __contains__(self, vec):
        v = self.reduce(vec)
        return all(x == 0 for x in v)

    def is_full_rank(self):
        return self.rank == self.dim

    def det(self):
        """Product of the pivots; requires full rank."""
        if not self.is_full_rank():
            raise ValueError("lattice is not full rank")
        out = 1
        for j in range(self.dim):
            out *= self.rows[j][j]
        return out

    def canonicalize(self):
        """Reduce sub-pivot entries so the basis is the unique HNF."""
        if self._canonical:
            return
        if not self.is_full_rank():
            raise ValueError("canonical form requires full rank")
        d = self.dim
        rows = self.rows
        for j in range(d):
            v = rows[j]
            for i in range(j + 1, d):
                q = v[i] // rows[i][i]
                if q:
                    ri = rows[i]
                    for k in range(i, d):
                        v[k] -= q * ri[k]
        self._canonical = True

    def basis_columns(self):
        """Canonical basis vectors (column j has its pivot at index j)."""
        self.canonicalize()
        return tuple(tuple(r) for r in self.rows)

    def hnf_matrix(self):
        """Canonical HNF as a row-major matrix: M[i][j] = basis_j[i]."""
        cols = self.basis_columns()
        d = self.dim
        return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
