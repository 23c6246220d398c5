"""States of points and the Hilbert-Mumford numerical function for the torus."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .lattice import Weight, norm_sq, pairing


@dataclass(frozen=True)
class State:
    """The torus weights at which a point has nonzero coordinates.

    ``p`` records the coordinate field: 0 for the rationals, a prime for F_p.
    """

    n: int
    weights: Tuple[Weight, ...]
    p: int = 0

    def __post_init__(self):
        ws = tuple(sorted({tuple(int(x) for x in w) for w in self.weights}))
        if not ws:
            raise ValueError("a state needs at least one weight")
        if any(len(w) != self.n for w in ws):
            raise ValueError(f"all weights must have length n={self.n}")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def from_json(cls, data: dict) -> "State":
        try:
            n = int(data["n"])
            weights = [tuple(int(x) for x in w) for w in data["weights"]]
        except KeyError as exc:
            raise ValueError(f"state JSON is missing field {exc.args[0]!r}") from None
        except (TypeError, ValueError):
            raise ValueError("state JSON field 'weights' must be a list of integer lists") from None
        return cls(n, tuple(weights), int(data.get("p", 0)))

    def to_json(self) -> dict:
        return {"n": self.n, "weights": [list(w) for w in self.weights]}

    def permuted(self, perm: Sequence[int]) -> "State":
        from .lattice import permute

        return State(self.n, tuple(permute(w, perm) for w in self.weights), self.p)


@dataclass(frozen=True)
class MuValue:
    m: int
    norm_sq: int
    mu_sq_signed: Fraction


def _is_nonzero(x, p: int) -> bool:
    if p:
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ValueError(f"coordinate {x} is not defined mod {p}")
            return x.numerator % p != 0
        return bool(x % p) if isinstance(x, int) else bool(x)
    return x != 0


def state_of_point(basis_weights: Sequence[Weight], coords: Sequence, p: int = 0) -> State:
    """Support of ``coords`` in a weight basis. ``p`` = 0 means rational coordinates."""
    if len(basis_weights) != len(coords):
        raise ValueError(f"length mismatch: {len(basis_weights)} weights vs {len(coords)} coordinates")
    support = [tuple(w) for w, c in zip(basis_weights, coords) if _is_nonzero(c, p)]
    if not support:
        raise ValueError("the zero vector has no state")
    return State(len(support[0]), tuple(support), p)


def mu_of(lam: Sequence[int], state: State) -> MuValue:
    """m(lam, v) = min pairing over the state, with the signed square of m/|lam|."""
    ns = norm_sq(lam)
    if ns == 0:
        raise ValueError("mu is undefined for the zero cocharacter")
    m = min(pairing(lam, chi) for chi in state.weights)
    sign = (m > 0) - (m < 0)
    return MuValue(m=m, norm_sq=ns, mu_sq_signed=Fraction(sign * m * m, ns))


def is_torus_semistable(state: State) -> bool:
    """True iff the origin lies in the convex hull of the state."""
    from .kempf import min_norm_wolfe

    return not any(min_norm_wolfe(state))
