"""Truncated symmetric powers T^l(V) over F_p.

Basis vectors live in V^{(x)l}, indexed by tuples (i_1, ..., i_l) of basis
labels 1..n. A composition k of l is the exponent vector of such a tuple.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Dict, List, Tuple

from .linalg import nullity_mod_p, rank_mod_p

Composition = Tuple[int, ...]
SparseTensor = Dict[Tuple[int, ...], int]

DEFAULT_TENSOR_BUDGET = 4096


class BudgetExceeded(ValueError):
    """Raised when a tensor power would exceed the configured dimension budget."""

    def __init__(self, size: int, budget: int):
        super().__init__(f"tensor budget exceeded: n^l = {size} > {budget} (set FROBSTAB_TENSOR_BUDGET)")
        self.size = size
        self.budget = budget


def tensor_budget() -> int:
    return int(os.environ.get("FROBSTAB_TENSOR_BUDGET", DEFAULT_TENSOR_BUDGET))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p**0.5) + 1))


def l_p(l: int, p: int) -> int:
    """The integer l(p) with 0 <= l - l(p)*p < p."""
    if l < 0 or p < 2:
        raise ValueError("need l >= 0 and p >= 2")
    return l // p


def compositions(n: int, l: int, bound: int | None = None) -> List[Composition]:
    """All (k_1..k_n) with sum l and 0 <= k_i <= bound, in ascending lex order."""
    if n < 1:
        raise ValueError("n must be positive")
    top = l if bound is None else min(bound, l)
    if n == 1:
        return [(l,)] if l <= top else []
    out: List[Composition] = []
    for first in range(0, top + 1):
        for rest in compositions(n - 1, l - first, bound):
            out.append((first,) + rest)
    return out


def bounded_compositions(n: int, l: int, p: int) -> List[Composition]:
    """Compositions of l into n parts, each at most p-1 (the index set of the v(k) basis)."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    return compositions(n, l, p - 1)


def closed_form_printed(p: int, n: int, l: int) -> int:
    # sum_q (-1)^q C(n,q) C(n+l-q-1, l-pq), exactly as the formula is commonly printed
    return sum((-1) ** q * comb(n, q) * comb(n + l - q - 1, l - p * q) for q in range(l_p(l, p) + 1))


def closed_form_corrected(p: int, n: int, l: int) -> int:
    # inclusion-exclusion over parts >= p: sum_q (-1)^q C(n,q) C(n+l-pq-1, n-1)
    return sum((-1) ** q * comb(n, q) * comb(n + l - p * q - 1, n - 1) for q in range(l_p(l, p) + 1))


@dataclass(frozen=True)
class TlDim:
    p: int
    n: int
    l: int
    enum: int
    closed_printed: int
    closed_corrected: int

    @property
    def printed_matches(self) -> bool:
        return self.closed_printed == self.enum

    @property
    def corrected_matches(self) -> bool:
        return self.closed_corrected == self.enum

    @property
    def value(self) -> int:
        return self.enum


def tl_dim(p: int, n: int, l: int) -> TlDim:
    """dim T^l(F_p^n) by enumeration, alongside both closed-form evaluations."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if n < 1 or l < 0:
        raise ValueError("need n >= 1 and l >= 0")
    return TlDim(
        p=p,
        n=n,
        l=l,
        enum=len(bounded_compositions(n, l, p)),
        closed_printed=closed_form_printed(p, n, l),
        closed_corrected=closed_form_corrected(p, n, l),
    )


def composition_of(index: Tuple[int, ...], n: int) -> Composition:
    counts = [0] * n
    for i in index:
        counts[i - 1] += 1
    return tuple(counts)


def _tensor_indices(n: int, l: int, budget: int | None) -> List[Tuple[int, ...]]:
    budget = tensor_budget() if budget is None else budget
    size = n**l
    if size > budget:
        raise BudgetExceeded(size, budget)
    return list(itertools.product(range(1, n + 1), repeat=l))


@dataclass(frozen=True)
class TruncatedBasis:
    p: int
    n: int
    l: int
    index: List[Composition]
    elements: List[SparseTensor]

    def __len__(self) -> int:
        return len(self.elements)

    def rank(self) -> int:
        """Rank over F_p of the matrix whose rows are the basis vectors."""
        col = {t: c for c, t in enumerate(itertools.product(range(1, self.n + 1), repeat=self.l))}
        return rank_mod_p(({col[t]: v for t, v in vec.items()} for vec in self.elements), self.p)


def tl_basis(n: int, l: int, p: int, budget: int | None = None) -> TruncatedBasis:
    """The vectors v(k) mod p for bounded compositions k, as sparse tensors.

    v(k) sums e_1^{k_1} (x) ... (x) e_n^{k_n} over all of S_l, so every distinct
    arrangement appears prod(k_i!) times.
    """
    if l < 1:
        raise ValueError("l must be at least 1")
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    buckets: Dict[Composition, List[Tuple[int, ...]]] = {}
    for t in _tensor_indices(n, l, budget):
        buckets.setdefault(composition_of(t, n), []).append(t)
    index = bounded_compositions(n, l, p)
    elements = []
    for k in index:
        mult = prod(factorial(x) for x in k) % p
        elements.append({t: mult for t in buckets[k]})
    return TruncatedBasis(p=p, n=n, l=l, index=index, elements=elements)


def transposition_rows(n: int, l: int, budget: int | None = None):
    """Sparse rows of the stacked operators (s_i - id), s_i = (i, i+1), on V^{(x)l}."""
    indices = _tensor_indices(n, l, budget)
    col = {t: c for c, t in enumerate(indices)}
    rows = []
    for i in range(l - 1):
        for t in indices:
            if t[i] == t[i + 1]:
                continue
            s = t[:i] + (t[i + 1], t[i]) + t[i + 2:]
            # row of (s_i - id) at t: +1 at s_i(t), -1 at t
            rows.append({col[s]: 1, col[t]: -1})
    return rows, len(indices)


def invariants_dim(n: int, l: int, p: int, budget: int | None = None) -> int:
    """dim over F_p of the S_l-fixed subspace of V^{(x)l}, by a kernel computation."""
    if n < 1 or l < 0:
        raise ValueError("need n >= 1 and l >= 0")
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if l <= 1:
        return n**l
    rows, ncols = transposition_rows(n, l, budget)
    return nullity_mod_p(rows, ncols, p)


def sym_dim(n: int, l: int) -> int:
    return comb(n + l - 1, l)
