"""Weights and cocharacters of the diagonal torus of GL_n.

Both are plain integer tuples. The inner product on cocharacters is the
standard Euclidean form, which is invariant under permutations (the Weyl
group of GL_n). Norms are always kept squared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import FrozenSet, Sequence, Tuple

Weight = Tuple[int, ...]
Cocharacter = Tuple[int, ...]


def pairing(lam: Sequence[int], chi: Sequence[int]) -> int:
    """The exponent i with lam(t) acting by t^i on the chi weight space."""
    if len(lam) != len(chi):
        raise ValueError(f"length mismatch: {len(lam)} vs {len(chi)}")
    return sum(a * b for a, b in zip(lam, chi))


def norm_sq(lam: Sequence[int]) -> int:
    return sum(a * a for a in lam)


def primitive(direction: Sequence) -> Cocharacter:
    """The primitive integer vector on the positive ray through a rational vector."""
    fracs = [Fraction(x) for x in direction]
    if all(f == 0 for f in fracs):
        raise ValueError("the zero vector spans no ray")
    den = lcm(*(f.denominator for f in fracs))
    ints = [int(f * den) for f in fracs]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class ParabolicDesc:
    """P(lam) = {g : lim t->0 lam(t) g lam(t)^-1 exists}, described by its zero entries.

    Indices are 1-based, matching matrix entry notation.
    """

    zero_pattern: FrozenSet[Tuple[int, int]]
    block_sizes: Tuple[int, ...]

    def contains(self, g: Sequence[Sequence]) -> bool:
        return all(g[i - 1][j - 1] == 0 for i, j in self.zero_pattern)

    def relabel(self, perm: Sequence[int]) -> "ParabolicDesc":
        """Image under the index map i -> perm[i-1] (perm given 1-based)."""
        return ParabolicDesc(
            frozenset((perm[i - 1], perm[j - 1]) for i, j in self.zero_pattern),
            self.block_sizes,
        )

    def to_json(self) -> dict:
        return {"zero_pattern": sorted(list(x) for x in self.zero_pattern), "block_sizes": list(self.block_sizes)}


def parabolic_of(lam: Sequence[int]) -> ParabolicDesc:
    # entry (i, j) of lam(t) g lam(t)^-1 scales by t^(lam_i - lam_j)
    n = len(lam)
    pattern = frozenset((i + 1, j + 1) for i in range(n) for j in range(n) if lam[i] < lam[j])
    values = sorted(set(lam), reverse=True)
    blocks = tuple(sum(1 for x in lam if x == v) for v in values)
    return ParabolicDesc(pattern, blocks)


def permute(vec: Sequence, perm: Sequence[int]) -> tuple:
    """Move entry i to position perm[i] (0-based perm)."""
    out = [None] * len(vec)
    for i, x in enumerate(vec):
        out[perm[i]] = x
    return tuple(out)
