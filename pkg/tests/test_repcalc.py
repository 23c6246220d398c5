from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction

import pytest

from frobstab import repcalc as rc
from frobstab.polys import Poly, det_poly
from frobstab.truncsym import bounded_compositions


def monomials(spec):
    return [[sorted(f.terms.items()) for f in row] for row in spec.entries]


def test_degree_examples():
    assert rc.rep_degree(rc.standard_rep(3)) == rc.DegreeProfile(1, 0, True)
    assert rc.rep_degree(rc.det_rep(3)).d == 3
    prof = rc.rep_degree(rc.det_power_rep(2, -1))
    assert (prof.d, prof.a, prof.is_polynomial) == (0, 1, False)


def test_degree_clears_to_common_denominator():
    # entries 1/det and T_11: a = 1, so the polynomial entry counts deg 1 + n
    one, zero, t11 = Poly.constant(1, 4, 0), Poly.constant(0, 4, 0), Poly.var(0, 4, 0)
    spec = rc.RepSpec(2, 0, [[one, zero], [zero, t11]], [[1, 0], [0, 0]])
    assert rc.rep_degree(spec).d == 3


def test_tensor_examples():
    s = rc.tensor(rc.standard_rep(2), rc.standard_rep(2))
    assert s.m == 4 and rc.rep_degree(s).d == 2
    std = rc.standard_rep(3, 5)
    assert rc.tensor(rc.trivial_rep(3, 5), std) == std
    assert rc.tensor(std, rc.trivial_rep(3, 5)) == std
    t = rc.tensor(rc.det_rep(2), rc.det_power_rep(2, -1))
    assert t == rc.trivial_rep(2)
    assert rc.rep_degree(t).d == 0


def test_tensor_is_kronecker():
    rng = random.Random(4)
    a, b = rc.standard_rep(2), rc.dual_rep(2)
    g = rc.random_invertible(2, 0, rng)
    A, B = rc.evaluate(a, g), rc.evaluate(b, g)
    K = rc.evaluate(rc.tensor(a, b), g)
    for (i, k), (j, l) in itertools.product(itertools.product(range(2), range(2)), repeat=2):
        assert K[2 * i + k][2 * j + l] == A[i][j] * B[k][l]


def test_wedge_examples():
    w = rc.wedge_lift(rc.standard_rep(2), 2)
    assert w == rc.det_rep(2)
    assert rc.rep_degree(w).d == 2
    w3 = rc.wedge_lift(rc.standard_rep(3, 3), 3)
    assert w3 == rc.det_rep(3, 3) and rc.rep_degree(w3).d == 3
    for spec in (rc.dual_rep(2), rc.sym_rep(2, 2, 3), rc.standard_rep(3)):
        assert rc.wedge_lift(spec, 1) == spec


def test_wedge_of_dual_is_inverse_det():
    w = rc.wedge_lift(rc.dual_rep(2, 5), 2)
    assert w == rc.det_power_rep(2, -1, 5)


def test_tl_rep_examples():
    s = rc.tl_rep(2, 2, 2)
    assert s.m == 1 and s.p == 2
    assert s.entries[0][0] == det_poly(2, 2)  # T11 T22 + T12 T21 over F_2
    assert sorted(s.entries[0][0].terms) == [(0, 1, 1, 0), (1, 0, 0, 1)]
    assert rc.rep_degree(s).d == 2
    s = rc.tl_rep(2, 3, 2)
    assert s.m == 3 and rc.rep_degree(s).d == 2
    sym = rc.sym_rep(2, 2, 3)
    # same module, bases in opposite orders
    order = [2, 1, 0]
    assert [[s.entries[i][j] for j in range(3)] for i in range(3)] == [
        [sym.entries[order[i]][order[j]] for j in range(3)] for i in range(3)
    ]
    for p in (2, 3, 5):
        for l in range(1, p):
            t = rc.tl_rep(1, p, l)
            assert t.entries[0][0] == Poly.var(0, 1, p) ** l


def test_tl_rep_domain():
    with pytest.raises(ValueError):
        rc.tl_rep(2, 2, 3)
    with pytest.raises(ValueError):
        rc.tl_rep(2, 4, 1)


@pytest.mark.parametrize("n, p, l", [(2, 2, 1), (2, 2, 2), (2, 3, 3), (2, 3, 4), (3, 2, 2), (3, 3, 3), (3, 3, 4), (2, 5, 6)])
def test_tl_rep_matches_tensor_route(n, p, l):
    rng = random.Random(n * 100 + p * 10 + l)
    spec = rc.tl_rep(n, p, l)
    index = bounded_compositions(n, l, p)
    for _ in range(3):
        g = rc.random_invertible(n, p, rng)
        M = rc.evaluate(spec, g)
        for r, c in itertools.product(range(len(index)), repeat=2):
            assert M[r][c] == rc.tensor_route_coefficient(n, p, l, g, index[r], index[c])


@pytest.mark.parametrize("n, p, l", [(2, 3, 2), (3, 2, 2), (3, 3, 4), (3, 5, 3)])
def test_tl_rep_permutation_matrices_permute_basis(n, p, l):
    spec = rc.tl_rep(n, p, l)
    index = bounded_compositions(n, l, p)
    pos = {k: i for i, k in enumerate(index)}
    for perm in itertools.permutations(range(n)):
        # g e_j = e_perm[j]
        g = [[1 if i == perm[j] else 0 for j in range(n)] for i in range(n)]
        M = rc.evaluate(spec, g)
        for c, k in enumerate(index):
            image = [0] * n
            for j, kj in enumerate(k):
                image[perm[j]] = kj
            target = pos[tuple(image)]
            assert [M[r][c] for r in range(len(index))] == [1 if r == target else 0 for r in range(len(index))]


@pytest.mark.parametrize(
    "build",
    [
        lambda: rc.standard_rep(2),
        lambda: rc.dual_rep(3, 5),
        lambda: rc.det_power_rep(2, -2, 3),
        lambda: rc.tensor(rc.standard_rep(2), rc.dual_rep(2)),
        lambda: rc.wedge_lift(rc.tensor(rc.standard_rep(2, 3), rc.standard_rep(2, 3)), 2),
        lambda: rc.tl_rep(2, 3, 3),
        lambda: rc.tl_rep(3, 2, 2),
        lambda: rc.sym_rep(3, 2),
    ],
)
def test_multiplicative(build):
    assert rc.is_multiplicative(build(), pairs=20, seed=1)


def test_non_representation_detected():
    # g -> g^T is an anti-homomorphism
    n = 2
    spec = rc.RepSpec(n, 0, [[Poly.var(j * n + i, 4, 0) for j in range(n)] for i in range(n)], [[0, 0], [0, 0]])
    assert not rc.is_multiplicative(spec, pairs=5)


def test_torus_weights():
    assert rc.torus_weights(rc.tensor(rc.standard_rep(2), rc.dual_rep(2))) == [(0, 0), (1, -1), (-1, 1), (0, 0)]
    assert rc.torus_weights(rc.det_power_rep(3, -1)) == [(-1, -1, -1)]
    for p, n, l in [(2, 3, 2), (3, 2, 3), (5, 2, 4)]:
        assert rc.torus_weights(rc.tl_rep(n, p, l)) == rc.weights_of_functor("truncated", n, l, p)
    assert rc.torus_weights(rc.sym_rep(3, 2)) == rc.weights_of_functor("sym", 3, 2)
    assert rc.torus_weights(rc.wedge_lift(rc.standard_rep(3), 2)) == rc.weights_of_functor("wedge", 3, 2)


def test_weights_of_functor_examples():
    assert rc.weights_of_functor("wedge", 2, 1) == [(1, 0), (0, 1)]
    assert rc.weights_of_functor("sym", 2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert rc.weights_of_functor("truncated", 2, 2, 2) == [(1, 1)]
    assert len(rc.weights_of_functor("tensor_power", 3, 2)) == 9


def test_json_round_trip():
    for spec in (rc.dual_rep(2, 3), rc.tl_rep(2, 3, 2), rc.det_power_rep(2, -1)):
        data = json.loads(json.dumps(spec.to_json()))
        assert rc.RepSpec.from_json(data) == spec
    bad = rc.standard_rep(2).to_json()
    bad["m"] = 3
    with pytest.raises(ValueError, match="m"):
        rc.RepSpec.from_json(bad)


def test_evaluate_rejects_singular():
    with pytest.raises(ValueError):
        rc.evaluate(rc.standard_rep(2), [[1, 2], [2, 4]])


def test_evaluate_scalar():
    M = rc.evaluate_scalar(rc.tensor(rc.standard_rep(2), rc.dual_rep(2)), Fraction(3))
    assert M == rc.identity_matrix(4, Fraction(1))
