"""Independent brute-force oracles for the enumeration tests.

Everything here is deliberately separate from the library: the coordinate
bounds come from a locally computed inverse Gram, the scan is a plain product
box evaluated with numpy, and block-diagonal forms are handled by the
orthogonal-sum argument (a norm -2 vector of a definite direct sum has
exactly one nonzero block component).
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt

import numpy as np


def _inverse_fraction(m):
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def _floor_sqrt(q: Fraction) -> int:
    if q < 0:
        return -1
    x = isqrt(q.numerator // q.denominator)
    while Fraction((x + 1) * (x + 1)) <= q:
        x += 1
    while x > 0 and Fraction(x * x) > q:
        x -= 1
    return x


def naive_box_norm_vectors(gram, target):
    """All integer x with x^T gram x == target by exhaustive box scan.

    gram must be positive definite with integer entries.  The box bound per
    coordinate is x_i^2 <= target * (gram^-1)_ii.
    """
    return list(_naive_box_cached(tuple(tuple(int(x) for x in row) for row in gram), int(target)))


@lru_cache(maxsize=32)
def _naive_box_cached(gram, target):
    n = len(gram)
    gi = _inverse_fraction(gram)
    bounds = [_floor_sqrt(Fraction(target) * gi[i][i]) for i in range(n)]
    dims = [2 * b + 1 for b in bounds]
    total = 1
    for d in dims:
        total *= d
    G = np.array([[int(x) for x in row] for row in gram], dtype=np.int64)
    offs = np.array(bounds, dtype=np.int64)
    out = []
    chunk = 1_000_000
    radix = np.ones(n, dtype=np.int64)
    for i in range(n - 2, -1, -1):
        radix[i] = radix[i + 1] * dims[i + 1]
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        coords = (idx[:, None] // radix[None, :]) % np.array(dims, dtype=np.int64)[None, :]
        X = coords - offs[None, :]
        norms = np.einsum("ij,jk,ik->i", X, G, X)
        for row in X[norms == target]:
            out.append(tuple(int(v) for v in row))
    out.sort()
    return tuple(out)


def blocks_of(gram):
    """Connected components of the off-diagonal adjacency."""
    n = len(gram)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and gram[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def block_sum_roots(gram, target=-2):
    """Norm `target` vectors of a definite block-diagonal form.

    Each block must be negative definite (target < 0 case): any norm -2
    vector is supported on exactly one block, so the full answer is the union
    of per-block naive scans embedded back into the ambient coordinates.
    """
    n = len(gram)
    comps = blocks_of(gram)
    out = []
    for comp in comps:
        sub = [[gram[i][j] for j in comp] for i in comp]
        assert all(sub[i][i] < 0 for i in range(len(comp))), "oracle expects negative definite blocks"
        neg = [[-x for x in row] for row in sub]
        for v in naive_box_norm_vectors(neg, -target):
            amb = [0] * n
            for val, pos in zip(v, comp):
                amb[pos] = val
            out.append(tuple(amb))
    out.sort()
    return out
