"""Split vector bundles O(a_1) + ... + O(a_n) on the projective line.

Everything is decided by integer arithmetic on the twists: slopes, the
Harder-Narasimhan profile, Frobenius pullback (twists scale by p) and the
functors tensor, Sym, wedge and T^l, whose twists are the pairings of the
functor's basis weights with (a_1, ..., a_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .lattice import pairing
from .repcalc import weights_of_functor
from .truncsym import is_prime


@dataclass(frozen=True)
class SplitBundle:
    p: int
    degrees: Tuple[int, ...]

    def __post_init__(self):
        if not self.degrees:
            raise ValueError("a split bundle needs at least one summand")
        object.__setattr__(self, "degrees", tuple(sorted((int(a) for a in self.degrees), reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    @classmethod
    def from_json(cls, data: dict) -> "SplitBundle":
        if "degrees" not in data:
            raise ValueError("SplitBundle JSON is missing field 'degrees'")
        if "p" not in data:
            raise ValueError("SplitBundle JSON is missing field 'p'")
        return cls(int(data["p"]), tuple(int(a) for a in data["degrees"]))

    def to_json(self) -> dict:
        return {"p": self.p, "degrees": list(self.degrees)}


def slope(E: SplitBundle) -> Fraction:
    return Fraction(E.degree, E.rank)


def is_semistable(E: SplitBundle) -> bool:
    # a maximal-degree line summand destabilises unless all twists agree
    return len(set(E.degrees)) == 1


def hn_profile(E: SplitBundle) -> List[Tuple[Fraction, int]]:
    """(slope, rank) of the HN quotients: distinct twists, decreasing, with multiplicities."""
    out: List[Tuple[Fraction, int]] = []
    for a in E.degrees:
        if out and out[-1][0] == a:
            out[-1] = (out[-1][0], out[-1][1] + 1)
        else:
            out.append((Fraction(a), 1))
    return out


def frobenius_pullback(E: SplitBundle, times: int = 1) -> SplitBundle:
    if not is_prime(E.p):
        raise ValueError("Frobenius pullback needs a prime characteristic")
    if times < 0:
        raise ValueError("times must be nonnegative")
    q = E.p**times
    return SplitBundle(E.p, tuple(q * a for a in E.degrees))


def apply_functor(E: SplitBundle, kind: str, param) -> SplitBundle:
    """tensor_with(F), sym(l), wedge(r) or truncated(l) of a split bundle."""
    if kind == "tensor_with":
        F = param
        if not isinstance(F, SplitBundle):
            raise ValueError("tensor_with needs a SplitBundle")
        if F.p != E.p:
            raise ValueError("characteristic mismatch")
        return SplitBundle(E.p, tuple(a + b for a in E.degrees for b in F.degrees))
    if kind == "truncated" and not 1 <= param <= E.rank * (E.p - 1):
        raise ValueError(f"truncated({param}) needs 1 <= l <= rank(p-1) = {E.rank * (E.p - 1)}")
    weights = weights_of_functor(kind, E.rank, int(param), p=E.p if kind == "truncated" else None)
    if not weights:
        raise ValueError(f"{kind}({param}) of a rank-{E.rank} bundle is zero")
    return SplitBundle(E.p, tuple(pairing(k, E.degrees) for k in weights))
