"""Exact dense linear algebra over Q and Q(i), plus integer HNF machinery.

Everything here works on tuples (vectors) and tuples of tuples (matrices,
row-major).  Field routines are generic: entries only need +,-,*,/ and
comparison with 0, which both Fraction and GaussRational provide.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DimensionMismatchError
from .gaussrat import GaussRational


def vec(xs) -> tuple:
    return tuple(xs)


def mat(rows) -> tuple:
    rows = tuple(tuple(r) for r in rows)
    if rows:
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DimensionMismatchError("ragged matrix")
    return rows


def transpose(m):
    return tuple(zip(*m)) if m else ()


def dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths {len(u)} and {len(v)} differ")
    return sum((a * b for a, b in zip(u, v)), start=Fraction(0))


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(ra, cb) for cb in bt) for ra in a)


def apply_matrix(m, v):
    """Column-vector action: (m @ v) for a row-tuple v."""
    if m and len(m[0]) != len(v):
        raise DimensionMismatchError("matrix/vector size mismatch")
    return tuple(dot(row, v) for row in m)


def scale_vec(c, v):
    return tuple(c * x for x in v)


def add_vec(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub_vec(u, v):
    return tuple(a - b for a, b in zip(u, v))


def identity_int(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def conj_vec(v):
    return tuple(x.conjugate() if isinstance(x, GaussRational) else x for x in v)


def is_zero_vec(v) -> bool:
    return all(x == 0 for x in v)


# ---------------------------------------------------------------------------
# Field elimination (Fraction or GaussRational entries)


def _field(x):
    return Fraction(x) if isinstance(x, int) else x


def _det_bareiss(m):
    """Fraction-free determinant for integer matrices."""
    n = len(m)
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        for r in range(c + 1, n):
            for k in range(c + 1, n):
                a[r][k] = (a[r][k] * a[c][c] - a[r][c] * a[c][k]) // prev
            a[r][c] = 0
        prev = a[c][c]
    return sign * a[n - 1][n - 1]


def det(m):
    n = len(m)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in m):
        raise DimensionMismatchError("determinant of non-square matrix")
    if all(isinstance(x, int) for r in m for x in r):
        return Fraction(_det_bareiss(m))
    a = [[_field(x) for x in r] for r in m]
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d = d * a[c][c]
        for r in range(c + 1, n):
            if a[r][c] != 0:
                f = a[r][c] / a[c][c]
                for k in range(c, n):
                    a[r][k] = a[r][k] - f * a[c][k]
    return d


def _rref(m):
    """Reduced row echelon form; returns (rows as lists, pivot columns)."""
    a = [[_field(x) for x in r] for r in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(m) -> int:
    if not m:
        return 0
    return len(_rref(m)[1])


def inverse(m):
    n = len(m)
    aug = [list(r) + [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i, r in enumerate(m)]
    red, piv = _rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(row[n:]) for row in red)


def kernel_basis(m):
    """Rows spanning {v : m @ v = 0} over the entry field, RREF-canonical."""
    if not m:
        return ()
    ncols = len(m[0])
    red, pivots = _rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for r, pcol in enumerate(pivots):
            v[pcol] = -red[r][fcol]
        basis.append(tuple(v))
    return tuple(basis)


# ---------------------------------------------------------------------------
# Integer lattice machinery


def clear_denominators(v):
    """Scale a rational vector to a primitive integer vector (sign preserved)."""
    fr = [Fraction(x) if isinstance(x, int) else x for x in v]
    if any(isinstance(x, GaussRational) for x in fr):
        raise TypeError("clear_denominators expects a rational vector")
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def hnf(rows):
    """Canonical row Hermite normal form (nonzero rows only).

    Pivots positive, entries above a pivot reduced into [0, pivot).
    """
    a = [list(r) for r in rows if not is_zero_vec(r)]
    if not a:
        return ()
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        # Euclid within column c over rows r..end.
        while True:
            live = [i for i in range(r, len(a)) if a[i][c] != 0]
            if not live:
                break
            i0 = min(live, key=lambda i: abs(a[i][c]))
            a[r], a[i0] = a[i0], a[r]
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c] != 0:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c] != 0:
                        done = False
            if done:
                break
        if any(a[i][c] != 0 for i in range(r, len(a))):
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q != 0:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
    a = [row for row in a if not is_zero_vec(row)]
    return tuple(tuple(row) for row in a)


def hnf_pivots(h):
    return tuple(next(c for c, x in enumerate(row) if x != 0) for row in h)


def int_kernel(m):
    """HNF basis of {x in Z^n : m @ x = 0} for an integer matrix m (p x n).

    Integer kernels are automatically saturated.
    """
    if not m:
        return ()
    p = len(m)
    n = len(m[0])
    # Rows: [column j of m | e_j]; unimodular row ops keep the bookkeeping exact.
    work = [[m[i][j] for i in range(p)] + [1 if k == j else 0 for k in range(n)] for j in range(n)]
    a = [list(r) for r in work]
    r = 0
    for c in range(p):
        while True:
            live = [i for i in range(r, len(a)) if a[i][c] != 0]
            if not live:
                break
            i0 = min(live, key=lambda i: abs(a[i][c]))
            a[r], a[i0] = a[i0], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c] != 0:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c] != 0:
                        done = False
            if done:
                break
        if r < len(a) and a[r][c] != 0:
            r += 1
    kernel = [tuple(row[p:]) for row in a[r:] if all(x == 0 for x in row[:p])]
    return hnf(kernel)
