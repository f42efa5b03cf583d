import random
from fractions import Fraction as Q

import pytest

import k3cycles as k
from k3cycles.errors import InputError, NotPositiveDefiniteError, NotPositiveError
from k3cycles.linalg import hnf, int_kernel
from k3cycles.rootenum import _pair_int

from conftest import gauss_rows, uvec, vprime_rows
from oracles import block_sum_roots, naive_box_norm_vectors


def test_enumerate_rank_one():
    assert k.enumerate_norm_vectors(((2,),), 2) == ((-1,), (1,))


def test_enumerate_a2_against_naive():
    a2 = ((2, -1), (-1, 2))
    got = k.enumerate_norm_vectors(a2, 2)
    assert len(got) == 6
    assert list(got) == naive_box_norm_vectors(a2, 2)


def test_enumerate_e8_count(e8):
    got = k.enumerate_norm_vectors(e8.gram_int, 2)
    assert len(got) == 240
    # closed under negation
    got_set = set(got)
    assert all(tuple(-x for x in v) in got_set for v in got)


def test_enumerate_requires_positive_definite():
    with pytest.raises(NotPositiveDefiniteError):
        k.enumerate_norm_vectors(((0, 1), (1, 0)), 2)
    with pytest.raises(InputError):
        k.enumerate_norm_vectors(((2,),), 0)


def test_enumerate_float_prescreen_agrees(e8):
    exact = k.enumerate_norm_vectors(e8.gram_int, 2)
    screened = k.enumerate_norm_vectors(e8.gram_int, 2, float_prescreen=True)
    assert exact == screened


def test_enumerate_small_grams_against_naive():
    rng = random.Random(7)
    for _ in range(10):
        n = rng.randint(1, 4)
        while True:
            b = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
            g = [[sum(b[i][l] * b[j][l] for l in range(n)) + (2 if i == j else 0) for j in range(n)] for i in range(n)]
            if k.signature(g) == (n, 0, 0):
                break
        target = rng.choice([2, 4, 6])
        got = list(k.enumerate_norm_vectors(tuple(tuple(r) for r in g), target))
        assert got == naive_box_norm_vectors(g, target)


def test_complement_of_u3_diagonal(k3):
    sub = k.orthogonal_complement_lattice(k3, [uvec(i) for i in range(3)])
    assert sub.rank == 19
    # restricted gram is diag(-2,-2,-2) + E8(-1) + E8(-1) up to basis order
    diag_counts = sorted(sub.restricted_gram[i][i] for i in range(19))
    assert all(d == -2 for d in diag_counts)
    roots = block_sum_roots(sub.restricted_gram)
    assert len(roots) == 486


def test_complement_in_u(hyperbolic):
    e1 = (Q(1), Q(0))
    sub = k.orthogonal_complement_lattice(hyperbolic, [e1])
    assert sub.rank == 1
    assert sub.basis == ((1, 0),)
    assert sub.restricted_gram == ((0,),)


def test_complement_no_constraints(k3):
    sub = k.orthogonal_complement_lattice(k3, [])
    assert sub.rank == 22
    assert sub.basis == tuple(tuple(1 if i == j else 0 for j in range(22)) for i in range(22))


def test_complement_saturation_random(k3):
    rng = random.Random(23)
    for _ in range(8):
        m = rng.randint(1, 4)
        constraints = [tuple(Q(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(22)) for _ in range(m)]
        sub = k.orthogonal_complement_lattice(k3, constraints)
        # double-complement certification: the kernel of the kernel's rational
        # complement reproduces the basis span, so the index is 1
        comp = int_kernel(sub.basis)
        again = int_kernel(comp) if comp else hnf(tuple(tuple(1 if i == j else 0 for j in range(22)) for i in range(22)))
        assert hnf(sub.basis) == again


def test_roots_orthogonal_counts(k3, u3_diagonal):
    rl = k.roots_orthogonal_to_threespace(k3, u3_diagonal)
    assert rl.complete
    assert len(rl) == 486
    assert rl.roots == tuple(block_sum_roots_in_ambient(k3, u3_diagonal))
    # negation closure and norm recheck
    got = set(rl.roots)
    for v in rl.roots:
        assert tuple(-x for x in v) in got
        assert _pair_int(k3.gram_int, v, v) == -2


def block_sum_roots_in_ambient(k3, threespace):
    """Oracle: roots of the block restricted form mapped to ambient coordinates."""
    sub = k.orthogonal_complement_lattice(
        k3, [tuple(x.re for x in row) for row in threespace.basis]
    )
    out = []
    for t in block_sum_roots(sub.restricted_gram):
        out.append(sub.to_ambient(t))
    out.sort()
    return out


def test_roots_orthogonal_to_vprime_empty(k3, vprime):
    rl = k.roots_orthogonal_to_threespace(k3, vprime)
    assert rl.complete
    assert len(rl) == 0


def test_roots_orthogonal_requires_positive(k3):
    neg = [uvec(0), uvec(1)]
    third = [Q(0)] * 22
    third[6] = Q(1)  # an E8(-1) direction: not positive
    with pytest.raises(NotPositiveError):
        k.roots_orthogonal_to_threespace(k3, k.ThreeSpace(ambient=k3.space, basis=gauss_rows(neg + [tuple(third)])))


def test_bounded_search_contains_known_root(k3):
    rl = k.bounded_root_search(k3, [uvec(0), uvec(1)], 1)
    assert not rl.complete and rl.bound_used == 1
    e3f3 = tuple(1 if i == 4 else (-1 if i == 5 else 0) for i in range(22))
    assert e3f3 in rl.roots
    assert tuple(-x for x in e3f3) in rl.roots
    for v in rl.roots:
        assert all(abs(c) <= 1 for c in v)
        assert _pair_int(k3.gram_int, v, v) == -2


def test_bounded_search_matches_exhaustive_scan(hyperbolic):
    # rank small enough for a literal box scan
    import itertools

    got = k.bounded_root_search(hyperbolic, [], 2)
    expect = sorted(
        v
        for v in itertools.product(range(-2, 3), repeat=2)
        if _pair_int(hyperbolic.gram_int, v, v) == -2
    )
    assert list(got.roots) == expect


def test_bounded_search_matches_scan_in_u3():
    import itertools

    u3 = k.IntegralLattice(
        space=k.QuadraticSpace(
            tuple(
                tuple((1 if (i // 2 == j // 2 and i != j) else 0) for j in range(6))
                for i in range(6)
            )
        )
    )
    got = k.bounded_root_search(u3, [], 1)
    expect = sorted(
        v
        for v in itertools.product(range(-1, 2), repeat=6)
        if _pair_int(u3.gram_int, v, v) == -2
    )
    assert list(got.roots) == expect


def test_bounded_search_trivial_cases(k3):
    rng = random.Random(5)
    full = [tuple(Q(rng.randint(1, 60), rng.randint(1, 7)) for _ in range(22)) for _ in range(22)]
    assert len(k.bounded_root_search(k3, full, 3)) == 0
    assert len(k.bounded_root_search(k3, [uvec(0)], 0)) == 0


def test_bounded_search_vprime_empty(k3):
    assert len(k.bounded_root_search(k3, vprime_rows(), 2)) == 0


def test_negative_definite_box_matches_naive(e8_neg):
    import itertools

    got = k.bounded_root_search(e8_neg, [], 1)
    expect = sorted(
        v
        for v in itertools.product(range(-1, 2), repeat=8)
        if _pair_int(e8_neg.gram_int, v, v) == -2
    )
    assert list(got.roots) == expect


def test_bounded_search_random_small_lattices():
    # randomized cross-check against the literal box scan on indefinite
    # lattices small enough to scan exhaustively
    import itertools

    rng = random.Random(97)
    done = 0
    while done < 12:
        n = rng.randint(2, 5)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = rng.randint(-3, 3)
                if i == j and rng.random() < 0.3:
                    v = 0
                m[i][j] = m[j][i] = v
        from k3cycles.linalg import det

        if det(m) == 0:
            continue
        sig = k.signature(m)
        if sig[0] == 0 or sig[1] == 0:
            continue  # want genuinely indefinite instances
        lattice = k.IntegralLattice(space=k.QuadraticSpace(tuple(tuple(r) for r in m)))
        ncons = rng.randint(0, 2)
        constraints = [tuple(Q(rng.randint(-2, 2)) for _ in range(n)) for _ in range(ncons)]
        bound = rng.randint(1, 2)
        got = k.bounded_root_search(lattice, constraints, bound)
        gi = lattice.gram_int

        def satisfied(v):
            for c in constraints:
                if sum(v[i] * sum(gi[i][j] * c[j] for j in range(n)) for i in range(n)) != 0:
                    return False
            return True

        expect = sorted(
            v
            for v in itertools.product(range(-bound, bound + 1), repeat=n)
            if _pair_int(gi, v, v) == -2 and satisfied(v)
        )
        assert list(got.roots) == expect, (m, constraints, bound)
        done += 1
