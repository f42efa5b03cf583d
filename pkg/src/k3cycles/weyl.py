"""Picard-Lefschetz reflections, orientation, bounded root sets at a period
point, and chamber partitions with the positivity property check."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import (
    AmbientMismatchError,
    DimensionMismatchError,
    FrameError,
    InputError,
    NonPositiveKappaError,
    NotARootError,
    WallError,
)
from .gaussrat import GaussRational, as_fraction
from .linalg import det, inverse, is_zero_vec
from .quadspace import (
    IntegralLattice,
    Isometry,
    QuadraticSpace,
    bilinear,
    hermitian_pair,
    make_standard_lattice,
)
from .rootenum import RootList, bounded_root_search


@dataclass(frozen=True)
class PeriodPoint:
    """Projective representative x with <x,x> = 0 and <x, conj x> > 0."""

    space: QuadraticSpace
    x: tuple

    def __post_init__(self):
        rows = tuple(GaussRational.of(v) for v in self.x)
        if len(rows) != self.space.n:
            raise DimensionMismatchError("period point length does not match space")
        if all(v == 0 for v in rows):
            raise InputError("period point must be nonzero")
        if bilinear(self.space, rows, rows) != 0:
            raise InputError("period point must be isotropic: <x,x> = 0")
        h = hermitian_pair(self.space, rows, rows)
        h = GaussRational.of(h)
        if not (h.is_real and h.re > 0):
            raise InputError("period point must satisfy <x, conj x> > 0")
        object.__setattr__(self, "x", rows)

    def real_part(self):
        return tuple(v.re for v in self.x)

    def imag_part(self):
        return tuple(v.im for v in self.x)


@dataclass(frozen=True)
class ChamberPartition:
    """Chamber representative kappa with the induced sign partition of a root set."""

    kappa: tuple
    roots: RootList
    plus: tuple
    minus: tuple


@dataclass(frozen=True)
class PartitionCheck:
    ok: bool
    violation: tuple | None = None  # (coefficients over plus, offending root)


def _require_root(ambient, delta):
    delta = tuple(delta)
    if any(not isinstance(x, int) for x in delta):
        raise NotARootError("roots must be integer vectors")
    if bilinear(ambient, delta, delta) != -2:
        raise NotARootError("vector has norm != -2")
    return delta


def reflect(ambient, delta, x):
    """Picard-Lefschetz reflection x + <x, delta> delta; an involution fixing
    delta-perp pointwise and sending delta to -delta."""
    delta = _require_root(ambient, delta)
    pairing = bilinear(ambient, x, delta)
    return tuple(xi + pairing * d for xi, d in zip(x, delta))


def reflection_matrix(ambient, delta) -> Isometry:
    """Matrix of the reflection in delta, as a validated lattice isometry."""
    delta = _require_root(ambient, delta)
    space = ambient.space if isinstance(ambient, IntegralLattice) else ambient
    n = space.n
    gd = [sum(space.gram[i][j] * delta[j] for j in range(n)) for i in range(n)]
    if any(x.denominator != 1 for x in gd):
        raise NotARootError("reflection is not integral over this ambient form")
    gd = [int(x) for x in gd]
    m = tuple(tuple((1 if i == j else 0) + delta[i] * gd[j] for j in range(n)) for i in range(n))
    return Isometry(space=space, matrix=m)


def _k3_frame(space: QuadraticSpace):
    k3 = make_standard_lattice("K3").space
    if space.gram == k3.gram:
        n = space.n
        frame = []
        for b in range(3):
            v = [Fraction(0)] * n
            v[2 * b] = Fraction(1)
            v[2 * b + 1] = Fraction(1)
            frame.append(tuple(v))
        return tuple(frame)
    diag = all(space.gram[i][j] == 0 for i in range(space.n) for j in range(space.n) if i != j)
    if (
        diag
        and space.n >= 3
        and all(space.gram[i][i] > 0 for i in range(3))
        and space.inertia == (3, space.n - 3, 0)
    ):
        n = space.n
        frame = []
        for b in range(3):
            v = [Fraction(0)] * n
            v[b] = Fraction(1)
            frame.append(tuple(v))
        return tuple(frame)
    return None


def is_in_O_plus(ambient, g) -> bool:
    """Orientation test on the three positive directions.

    The reference frame is (e1+f1, e2+f2, e3+f3) for the K3 Gram and the
    first three basis vectors for diagonal ambients.  The image frame is
    projected back onto the reference span with respect to the form (always
    invertible since the complement of a positive three-space is negative
    definite) and the sign of the 3x3 determinant decides membership.
    """
    space = ambient.space if isinstance(ambient, IntegralLattice) else ambient
    iso = g if isinstance(g, Isometry) else Isometry(space=space, matrix=tuple(tuple(row) for row in g))
    frame = _k3_frame(space)
    if frame is None:
        raise FrameError("ambient space has no designated positive frame")
    fgram = tuple(tuple(bilinear(space, a, b) for b in frame) for a in frame)
    finv = inverse(fgram)
    cols = []
    for p in frame:
        q = tuple(sum(iso.matrix[i][j] * p[j] for j in range(space.n)) for i in range(space.n))
        r = tuple(bilinear(space, q, f) for f in frame)
        cols.append(tuple(sum(finv[i][k] * r[k] for k in range(3)) for i in range(3)))
    d = det(tuple(zip(*cols)))
    return d > 0


def delta_p_bounded(lattice: IntegralLattice, p: PeriodPoint, coord_bound: int) -> RootList:
    """Bounded part of Delta_p = {roots orthogonal to the period point}."""
    if p.space.gram != lattice.space.gram:
        raise AmbientMismatchError("period point does not live in the lattice")
    constraints = [c for c in (p.real_part(), p.imag_part()) if not is_zero_vec(c)]
    return bounded_root_search(lattice, constraints, coord_bound)


def partition_by_chamber(lattice: IntegralLattice, roots, kappa) -> ChamberPartition:
    """Split a root list by the sign of the pairing with kappa.

    kappa must be a positive-norm vector off every wall: a zero pairing is a
    WallError, never a tie-break.
    """
    kappa = tuple(as_fraction(x) for x in kappa)
    if bilinear(lattice, kappa, kappa) <= 0:
        raise NonPositiveKappaError("chamber representative must have positive norm")
    rootlist = roots if isinstance(roots, RootList) else RootList(roots=tuple(sorted(tuple(r) for r in roots)), complete=False)
    plus = []
    minus = []
    for delta in rootlist.roots:
        _require_root(lattice, delta)
        s = bilinear(lattice, kappa, delta)
        if s == 0:
            raise WallError(f"kappa lies on the wall of root {list(delta)}")
        (plus if s > 0 else minus).append(tuple(delta))
    return ChamberPartition(kappa=kappa, roots=rootlist, plus=tuple(plus), minus=tuple(minus))


def check_partition_property(lattice: IntegralLattice, plus, depth: int = 4) -> PartitionCheck:
    """Finite check of the chamber property: every N-combination of plus-roots
    that is again a root must itself lie in plus.

    Combinations are scanned with total coefficient sum up to `depth`; the
    first violation (coefficient vector over plus, offending root) is
    reported.
    """
    plus = [tuple(r) for r in plus]
    plus_set = set(plus)
    for r in plus:
        _require_root(lattice, r)
        if tuple(-x for x in r) in plus_set:
            raise InputError("plus must contain at most one of each +-pair")
    n = lattice.n
    for total in range(2, depth + 1):
        for combo in combinations_with_replacement(range(len(plus)), total):
            vec = [0] * n
            for idx in combo:
                for j in range(n):
                    vec[j] += plus[idx][j]
            vec = tuple(vec)
            if bilinear(lattice, vec, vec) == -2 and vec not in plus_set:
                coeffs = [0] * len(plus)
                for idx in combo:
                    coeffs[idx] += 1
                return PartitionCheck(ok=False, violation=(tuple(coeffs), vec))
    return PartitionCheck(ok=True)
