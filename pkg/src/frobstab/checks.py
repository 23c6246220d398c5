"""Seeded generators and grid sweeps shared by the CLI selftest and the test suite."""

from __future__ import annotations

import random
from typing import Dict, Iterator, List, Optional

from .kempf import instability, min_norm_oracle, min_norm_wolfe
from .states import State
from .truncsym import BudgetExceeded, invariants_dim, sym_dim, tl_basis, tl_dim

GRID_PRIMES = (2, 3, 5)
GRID_RANKS = (1, 2, 3, 4)


def random_states(count: int, seed: int, max_n: int = 4, max_size: int = 8, box: int = 5) -> List[State]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        size = rng.randint(1, max_size)
        weights = tuple(tuple(rng.randint(-box, box) for _ in range(n)) for _ in range(size))
        out.append(State(n, weights))
    return out


def oracle_agrees(state: State) -> bool:
    """Wolfe and the subset oracle agree on the point, verdict, mu^2 and parabolic."""
    if min_norm_wolfe(state) != min_norm_oracle(state):
        return False
    a, b = instability(state, "wolfe"), instability(state, "oracle")
    return (a.semistable, a.mu_sq, a.lam, a.parabolic) == (b.semistable, b.mu_sq, b.lam, b.parabolic)


def grid_cells(primes=GRID_PRIMES, ranks=GRID_RANKS) -> Iterator[tuple]:
    for p in primes:
        for n in ranks:
            for l in range(0, n * (p - 1) + 1):
                yield p, n, l


def dimension_row(p: int, n: int, l: int, budget: int = 4096, with_invariants: bool = True) -> Dict[str, Optional[int]]:
    """One row of the dimension table; rank/invariants are None when n^l exceeds the budget."""
    dims = tl_dim(p, n, l)
    row: Dict[str, Optional[int]] = {
        "p": p,
        "n": n,
        "l": l,
        "enum": dims.enum,
        "closed_printed": dims.closed_printed,
        "closed_corrected": dims.closed_corrected,
        "sym_dim": sym_dim(n, l),
        "basis_rank": None,
        "invariants_dim": None,
    }
    if n**l <= budget:
        try:
            row["basis_rank"] = tl_basis(n, l, p, budget).rank() if l >= 1 else 1
            if with_invariants:
                row["invariants_dim"] = invariants_dim(n, l, p, budget)
        except BudgetExceeded:
            pass
    return row


def constructed_specs(count: int, seed: int, max_n: int = 3):
    """A seeded family of (label, RepSpec) built from the basic constructors.

    Tensor and wedge operands are kept small so every member evaluates quickly.
    """
    from . import repcalc as rc

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice([k for k in range(1, max_n + 1) for _ in range(k)])
        p = rng.choice((0, 2, 3, 5))
        base = [
            ("standard", rc.standard_rep(n, p)),
            ("dual", rc.dual_rep(n, p)),
            ("det^-1", rc.det_power_rep(n, -1, p)),
            ("det^2", rc.det_power_rep(n, 2, p)),
            ("sym2", rc.sym_rep(n, 2, p)),
        ]
        if p:
            l = rng.randint(1, min(4, n * (p - 1)))
            base.append((f"T^{l}", rc.tl_rep(n, p, l)))
        shape = rng.choice(("atom", "tensor", "wedge"))
        (la, a), (lb, b) = rng.choice(base), rng.choice(base)
        if shape == "tensor" and a.m * b.m <= 12:
            out.append((f"{la}(x){lb} n={n} p={p}", rc.tensor(a, b)))
        elif shape == "wedge" and a.m >= 2:
            r = rng.randint(1, min(a.m, 3))
            out.append((f"wedge{r}({la}) n={n} p={p}", rc.wedge_lift(a, r)))
        else:
            out.append((f"{la} n={n} p={p}", a))
    return out
