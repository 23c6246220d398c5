from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobstab.lattice import norm_sq, pairing, parabolic_of, permute, primitive

vectors = st.integers(1, 5).flatmap(lambda n: st.lists(st.integers(-6, 6), min_size=n, max_size=n))


@pytest.mark.parametrize(
    "lam, chi, expected",
    [((1, 1), (1, 0), 1), ((2, 1), (2, 1), 5), ((1, -1), (1, 1), 0)],
)
def test_pairing(lam, chi, expected):
    assert pairing(lam, chi) == expected


def test_pairing_length_mismatch():
    with pytest.raises(ValueError):
        pairing((1, 2), (1, 2, 3))


@pytest.mark.parametrize("lam, expected", [((1, 1), 2), ((2, 1), 5), ((0, 0, 0), 0)])
def test_norm_sq(lam, expected):
    assert norm_sq(lam) == expected


def test_primitive():
    assert primitive((Fraction(1, 2), Fraction(1, 2))) == (1, 1)
    assert primitive((Fraction(-2, 3), Fraction(4, 3))) == (-1, 2)
    assert primitive((0, -4, 6)) == (0, -2, 3)
    with pytest.raises(ValueError):
        primitive((0, 0))


def test_parabolic_examples():
    P = parabolic_of((1, 1, 0))
    assert P.zero_pattern == {(3, 1), (3, 2)}
    assert P.block_sizes == (2, 1)
    P = parabolic_of((0, 0))
    assert P.zero_pattern == frozenset() and P.block_sizes == (2,)
    P = parabolic_of((1, 2))
    assert P.zero_pattern == {(1, 2)} and P.block_sizes == (1, 1)


def test_parabolic_contains_limit_criterion():
    # lim t->0 of t^(lam_i - lam_j) g_ij exists iff g_ij = 0 whenever lam_i < lam_j
    lam = (2, 0, 1)
    P = parabolic_of(lam)
    for i, j in itertools.product(range(3), repeat=2):
        g = [[1 if (r, c) == (i, j) or r == c else 0 for c in range(3)] for r in range(3)]
        assert P.contains(g) == (lam[i] >= lam[j] or i == j)


@given(vectors)
def test_norm_permutation_invariant(v):
    for perm in itertools.islice(itertools.permutations(range(len(v))), 24):
        assert norm_sq(permute(v, perm)) == norm_sq(v)


@given(vectors, st.integers(1, 7))
def test_parabolic_scale_invariant(v, c):
    assert parabolic_of([c * x for x in v]) == parabolic_of(v)


@given(vectors)
def test_parabolic_relabels_under_permutation(v):
    for perm in itertools.islice(itertools.permutations(range(len(v))), 24):
        one_based = [k + 1 for k in perm]
        assert parabolic_of(permute(v, perm)) == parabolic_of(v).relabel(one_based)


@given(vectors)
def test_primitive_idempotent(v):
    if any(v):
        w = primitive(v)
        assert primitive(w) == w
        k = next(x for x in v if x) // next(x for x in w if x)
        assert k > 0 and all(a == k * b for a, b in zip(v, w))
