from __future__ import annotations

import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobstab import truncsym as ts
from frobstab.checks import grid_cells


def test_l_p():
    assert ts.l_p(4, 3) == 1
    assert ts.l_p(2, 3) == 0
    assert ts.l_p(6, 2) == 3


def test_bounded_compositions_examples():
    assert ts.bounded_compositions(2, 2, 2) == [(1, 1)]
    assert ts.bounded_compositions(2, 2, 3) == [(0, 2), (1, 1), (2, 0)]
    assert ts.bounded_compositions(2, 3, 2) == []


@pytest.mark.parametrize("p, n, l, expected", [(2, 2, 2, 1), (3, 2, 4, 1), (3, 2, 2, 3), (5, 3, 0, 1), (2, 4, 0, 1)])
def test_tl_dim_examples(p, n, l, expected):
    d = ts.tl_dim(p, n, l)
    assert d.enum == d.closed_corrected == d.value == expected


def test_printed_formula_typo():
    d = ts.tl_dim(3, 2, 4)
    assert (d.enum, d.closed_corrected, d.closed_printed) == (1, 1, -3)
    assert not d.printed_matches and d.corrected_matches
    d = ts.tl_dim(2, 2, 2)
    assert d.closed_printed == 1


def test_tl_basis_examples():
    b = ts.tl_basis(2, 2, 2)
    assert b.index == [(1, 1)]
    assert b.elements == [{(1, 2): 1, (2, 1): 1}]
    b = ts.tl_basis(2, 2, 3)
    assert b.index == [(0, 2), (1, 1), (2, 0)]
    assert b.elements == [{(2, 2): 2}, {(1, 2): 1, (2, 1): 1}, {(1, 1): 2}]
    assert ts.tl_basis(1, 1, 2).elements == [{(1,): 1}]


def test_invariants_examples():
    assert ts.invariants_dim(2, 2, 2) == 3
    assert ts.invariants_dim(2, 2, 3) == 3
    for p in (2, 3, 5):
        for l in range(6):
            assert ts.invariants_dim(1, l, p) == 1


def test_budget():
    with pytest.raises(ts.BudgetExceeded) as err:
        ts.tl_basis(3, 9, 5, budget=4096)
    assert err.value.budget == 4096 and "budget" in str(err.value)
    with pytest.raises(ts.BudgetExceeded):
        ts.invariants_dim(4, 7, 5, budget=4096)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("FROBSTAB_TENSOR_BUDGET", "10")
    with pytest.raises(ts.BudgetExceeded):
        ts.tl_basis(2, 4, 3)
    monkeypatch.setenv("FROBSTAB_TENSOR_BUDGET", "100")
    assert len(ts.tl_basis(2, 4, 3)) == 1


def test_rejects_bad_p():
    with pytest.raises(ValueError):
        ts.tl_dim(4, 2, 2)


GRID = list(grid_cells())


@pytest.mark.parametrize("p, n, l", GRID)
def test_grid_invariants(p, n, l):
    d = ts.tl_dim(p, n, l)
    assert d.enum == d.closed_corrected == len(ts.bounded_compositions(n, l, p))
    assert (d.enum == comb(n + l - 1, l)) == (l < p)
    # complement symmetry k_i -> p-1-k_i
    assert d.enum == ts.tl_dim(p, n, n * (p - 1) - l).enum
    if 1 <= l and n**l <= 4096:
        assert ts.tl_basis(n, l, p).rank() == d.enum


@given(st.sampled_from((2, 3, 5, 7)), st.integers(1, 5), st.integers(0, 40))
def test_vanishing_range(p, n, l):
    assert (ts.tl_dim(p, n, l).enum == 0) == (l > n * (p - 1))


@given(st.sampled_from((2, 3, 5, 7)), st.integers(1, 6), st.integers(0, 30))
def test_closed_form_corrected_everywhere(p, n, l):
    d = ts.tl_dim(p, n, l)
    assert d.closed_corrected == d.enum


@pytest.mark.parametrize("p, n, l", [(2, 2, 2), (3, 2, 3), (3, 3, 4), (5, 2, 6), (2, 4, 3), (3, 4, 5)])
def test_basis_vectors_are_symmetric(p, n, l):
    rows, _ = ts.transposition_rows(n, l)
    cols = {t: c for c, t in enumerate(itertools.product(range(1, n + 1), repeat=l))}
    for vec in ts.tl_basis(n, l, p).elements:
        dense = {cols[t]: v for t, v in vec.items()}
        for row in rows:
            assert sum(c * dense.get(j, 0) for j, c in row.items()) % p == 0


def test_zero_multiplicity_vanishes():
    # v(2, 0) = 2 e1 (x) e1 is zero mod 2, which is why (2, 0) is not in the index set
    assert (2, 0) not in ts.tl_basis(2, 2, 2).index
    assert ts.bounded_compositions(2, 2, 2) == [k for k in ts.compositions(2, 2) if max(k) < 2]
