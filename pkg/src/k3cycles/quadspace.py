"""Quadratic spaces over Q, integral lattices, pairings and exact signatures.

The standard lattices are fixed once and for all so that every downstream
enumeration is reproducible bit for bit:

* U is the hyperbolic plane [[0,1],[1,0]].
* E8 is the even positive-definite rank-8 Gram below (the chain basis of the
  D8-plus-glue presentation; see README for the explicit basis vectors).
* K3 is the orthogonal direct sum U + U + U + E8(-1) + E8(-1), in that block
  order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import (
    DegenerateGramError,
    DimensionMismatchError,
    InputError,
    NotHermitianError,
    NotIntegralError,
    NotIsometryError,
    NotSymmetricError,
)
from .gaussrat import GaussRational, as_fraction
from .linalg import conj_vec, det, mat

# Chain basis of E8 in the D8+glue model: rows are
#   (1/2,...,1/2), e1+e2, e2-e1, e3-e2, e4-e3, e5-e4, e6-e5, e7-e6
# pairwise dotted in Euclidean R^8.  Even, unimodular, diagonal 2.
E8_GRAM = (
    (2, 1, 0, 0, 0, 0, 0, 0),
    (1, 2, 0, -1, 0, 0, 0, 0),
    (0, 0, 2, -1, 0, 0, 0, 0),
    (0, -1, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, 0, 0, -1, 2),
)

U_GRAM = ((0, 1), (1, 0))


@dataclass(frozen=True)
class QuadraticSpace:
    """Nondegenerate symmetric bilinear form over Q, given by its Gram matrix."""

    gram: tuple

    def __post_init__(self):
        g = mat(tuple(tuple(as_fraction(x) for x in row) for row in self.gram))
        n = len(g)
        if n == 0 or any(len(r) != n for r in g):
            raise DimensionMismatchError("gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i + 1, n):
                if g[i][j] != g[j][i]:
                    raise NotSymmetricError(f"gram[{i}][{j}] != gram[{j}][{i}]")
        if det(g) == 0:
            raise DegenerateGramError("gram matrix is degenerate")
        object.__setattr__(self, "gram", g)

    @property
    def n(self) -> int:
        return len(self.gram)

    @cached_property
    def inertia(self):
        return signature(self.gram)


@dataclass(frozen=True)
class IntegralLattice:
    """Quadratic space whose Gram matrix has integer entries."""

    space: QuadraticSpace

    def __post_init__(self):
        for row in self.space.gram:
            for x in row:
                if x.denominator != 1:
                    raise NotIntegralError("lattice gram entries must be integers")

    @property
    def n(self) -> int:
        return self.space.n

    @cached_property
    def gram_int(self):
        return tuple(tuple(int(x) for x in row) for row in self.space.gram)


@dataclass(frozen=True)
class Isometry:
    """Integer matrix g with g^T * gram * g = gram (hence |det g| = 1)."""

    space: QuadraticSpace
    matrix: tuple

    def __post_init__(self):
        m = mat(self.matrix)
        if len(m) != self.space.n or any(len(r) != self.space.n for r in m):
            raise DimensionMismatchError("isometry matrix size does not match space")
        if any(not isinstance(x, int) for row in m for x in row):
            raise NotIntegralError("isometry matrix must have integer entries")
        if not is_isometry(self.space, m):
            raise NotIsometryError("matrix does not preserve the gram matrix")
        d = det(m)
        assert abs(d) == 1, "isometry of a nondegenerate form must be unimodular"
        object.__setattr__(self, "matrix", m)

    @cached_property
    def determinant(self) -> int:
        return int(det(self.matrix))


def _block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    ofs = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[ofs + i][ofs + j] = x
        ofs += len(b)
    return tuple(tuple(r) for r in out)


def _negate(g):
    return tuple(tuple(-x for x in row) for row in g)


def make_standard_lattice(kind: str, signs=None):
    """Build one of the documented standard forms.

    kind in {"U", "E8", "E8_neg", "K3"} returns an IntegralLattice; "diag"
    (with a nonempty list of +-1 signs) returns a QuadraticSpace.
    """
    if kind == "U":
        return IntegralLattice(QuadraticSpace(U_GRAM))
    if kind == "E8":
        return IntegralLattice(QuadraticSpace(E8_GRAM))
    if kind == "E8_neg":
        return IntegralLattice(QuadraticSpace(_negate(E8_GRAM)))
    if kind == "K3":
        e8n = _negate(E8_GRAM)
        return IntegralLattice(QuadraticSpace(_block_diag(U_GRAM, U_GRAM, U_GRAM, e8n, e8n)))
    if kind == "diag":
        if not signs:
            raise InputError("diag lattice requires a nonempty list of signs")
        if any(s not in (1, -1) for s in signs):
            raise InputError("diag signs must be +1 or -1")
        return QuadraticSpace(tuple(tuple(s if i == j else 0 for j in range(len(signs))) for i, s in enumerate(signs)))
    raise InputError(f"unknown lattice kind {kind!r}")


def _space_of(ambient) -> QuadraticSpace:
    return ambient.space if isinstance(ambient, IntegralLattice) else ambient


def bilinear(ambient, x, y):
    """C-bilinear extension <x,y> = x^T * gram * y, no conjugation."""
    space = _space_of(ambient)
    if len(x) != space.n or len(y) != space.n:
        raise DimensionMismatchError("vector length does not match space rank")
    total = Fraction(0)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = space.gram[i]
        acc = Fraction(0)
        for j, yj in enumerate(y):
            if yj != 0:
                acc = acc + row[j] * yj
        total = total + xi * acc
    return total


def hermitian_pair(ambient, x, y):
    """Sesquilinear pairing <x, conj(y)>; real on the diagonal."""
    return bilinear(ambient, x, conj_vec(y))


def gram_of(ambient, rows):
    """Matrix of pairwise bilinear values of the given vectors."""
    return tuple(tuple(bilinear(ambient, r, s) for s in rows) for r in rows)


def hermitian_gram_of(ambient, rows):
    return tuple(tuple(hermitian_pair(ambient, r, s) for s in rows) for r in rows)


def signature(m):
    """Exact Sylvester inertia (pos, neg, null) of a symmetric rational matrix.

    Congruence diagonalization: nonzero diagonal pivots first, zero-diagonal
    off-diagonal entries handled by the 2x2 hyperbolic split contributing
    (1,1).
    """
    n = len(m)
    a = [[as_fraction(x) for x in row] for row in m]
    if any(len(r) != n for r in a):
        raise DimensionMismatchError("signature of non-square matrix")
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise NotSymmetricError("matrix is not symmetric")
    active = list(range(n))
    pos = neg = 0
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is not None:
            d = a[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            active.remove(piv)
            fs = {r: a[r][piv] / d for r in active if a[r][piv] != 0}
            for r, f in fs.items():
                for c in active:
                    a[r][c] = a[r][c] - f * a[piv][c]
            continue
        pair = next(((i, j) for ii, i in enumerate(active) for j in active[ii + 1:] if a[i][j] != 0), None)
        if pair is None:
            break  # remaining block is zero: contributes to null
        i, j = pair
        b = a[i][j]
        pos += 1
        neg += 1
        active.remove(i)
        active.remove(j)
        ps = {r: -a[r][j] / b for r in active}
        qs = {r: -a[r][i] / b for r in active}
        rows_i = {c: a[i][c] for c in active}
        rows_j = {c: a[j][c] for c in active}
        col_i = {r: a[r][i] for r in active}
        col_j = {r: a[r][j] for r in active}
        for r in active:
            for c in active:
                a[r][c] = (
                    a[r][c]
                    + ps[r] * rows_i[c]
                    + qs[r] * rows_j[c]
                    + ps[c] * col_i[r]
                    + qs[c] * col_j[r]
                    + (ps[r] * qs[c] + qs[r] * ps[c]) * b
                )
    null = n - pos - neg
    return (pos, neg, null)


def hermitian_signature(h):
    """Exact inertia of a Hermitian Gauss-rational matrix via congruence."""
    n = len(h)
    a = [[GaussRational.of(x) for x in row] for row in h]
    if any(len(r) != n for r in a):
        raise DimensionMismatchError("signature of non-square matrix")
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i].conjugate():
                raise NotHermitianError("matrix is not Hermitian")
    active = list(range(n))
    pos = neg = 0
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is not None:
            d = a[piv][piv].re  # diagonal of a Hermitian matrix is real
            if d > 0:
                pos += 1
            else:
                neg += 1
            active.remove(piv)
            fs = {r: a[r][piv] / d for r in active if a[r][piv] != 0}
            for r, f in fs.items():
                for c in active:
                    a[r][c] = a[r][c] - f * a[piv][c]
            continue
        pair = next(((i, j) for ii, i in enumerate(active) for j in active[ii + 1:] if a[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        b = a[i][j]
        bc = b.conjugate()
        pos += 1
        neg += 1
        active.remove(i)
        active.remove(j)
        ps = {r: (-a[r][j]) / b for r in active}
        qs = {r: (-a[r][i]) / bc for r in active}
        rows_i = {c: a[i][c] for c in active}
        rows_j = {c: a[j][c] for c in active}
        col_i = {r: a[r][i] for r in active}
        col_j = {r: a[r][j] for r in active}
        for r in active:
            for c in active:
                a[r][c] = (
                    a[r][c]
                    + ps[r] * rows_i[c]
                    + qs[r] * rows_j[c]
                    + ps[c].conjugate() * col_i[r]
                    + qs[c].conjugate() * col_j[r]
                    + ps[r] * qs[c].conjugate() * b
                    + qs[r] * ps[c].conjugate() * bc
                )
    null = n - pos - neg
    return (pos, neg, null)


@dataclass(frozen=True)
class LatticeInvariants:
    even: bool
    determinant: int
    unimodular: bool


def lattice_invariants(lattice: IntegralLattice) -> LatticeInvariants:
    g = lattice.gram_int
    even = all(g[i][i] % 2 == 0 for i in range(len(g)))
    d = det(g)
    assert d.denominator == 1
    d = int(d)
    return LatticeInvariants(even=even, determinant=d, unimodular=abs(d) == 1)


def is_isometry(ambient, g) -> bool:
    """True iff g^T * gram * g == gram."""
    space = _space_of(ambient)
    m = mat(g)
    n = space.n
    if len(m) != n or any(len(r) != n for r in m):
        raise DimensionMismatchError("matrix size does not match space rank")
    integral = all(x.denominator == 1 for row in space.gram for x in row) and all(
        isinstance(x, int) for row in m for x in row
    )
    if integral:
        gram = [[int(x) for x in row] for row in space.gram]
        gm = [[sum(gram[k][l] * m[l][j] for l in range(n)) for j in range(n)] for k in range(n)]
        for i in range(n):
            col_i = [m[k][i] for k in range(n)]
            for j in range(n):
                if sum(col_i[k] * gm[k][j] for k in range(n)) != gram[i][j]:
                    return False
        return True
    gt = tuple(zip(*m))
    lhs = tuple(
        tuple(sum(gt[i][k] * sum(space.gram[k][l] * m[l][j] for l in range(n)) for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return lhs == space.gram
