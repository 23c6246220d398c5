"""Sparse multivariate polynomials with coefficients in F_p (or Z when p = 0)."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

Monomial = Tuple[int, ...]


class Poly:
    """Polynomial as {exponent tuple: coefficient}; zero coefficients never stored."""

    __slots__ = ("nvars", "p", "terms")

    def __init__(self, nvars: int, p: int = 0, terms: Dict[Monomial, int] | None = None):
        self.nvars = nvars
        self.p = p
        self.terms: Dict[Monomial, int] = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != nvars:
                    raise ValueError("monomial length does not match the number of variables")
                c = c % p if p else c
                if c:
                    self.terms[tuple(mono)] = c

    @classmethod
    def constant(cls, c: int, nvars: int, p: int = 0) -> "Poly":
        return cls(nvars, p, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int, p: int = 0) -> "Poly":
        mono = [0] * nvars
        mono[i] = 1
        return cls(nvars, p, {tuple(mono): 1})

    @classmethod
    def from_terms(cls, terms: Iterable[Sequence], nvars: int, p: int = 0) -> "Poly":
        """Build from [(coeff, exponents), ...], summing repeated monomials."""
        acc: Dict[Monomial, int] = {}
        for coeff, mono in terms:
            mono = tuple(int(e) for e in mono)
            acc[mono] = acc.get(mono, 0) + int(coeff)
        return cls(nvars, p, acc)

    def to_terms(self) -> List[list]:
        return [[c, list(m)] for m, c in sorted(self.terms.items())]

    def _check(self, other: "Poly") -> None:
        if self.nvars != other.nvars or self.p != other.p:
            raise ValueError("incompatible polynomial rings")

    def _norm(self, c: int) -> int:
        return c % self.p if self.p else c

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def copy(self) -> "Poly":
        out = Poly(self.nvars, self.p)
        out.terms = dict(self.terms)
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == Poly.constant(other, self.nvars, self.p)
        return isinstance(other, Poly) and (self.nvars, self.p, self.terms) == (other.nvars, other.p, other.terms)

    def __hash__(self) -> int:
        return hash((self.nvars, self.p, tuple(sorted(self.terms.items()))))

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = self.copy()
        for m, c in other.terms.items():
            v = out._norm(out.terms.get(m, 0) + c)
            if v:
                out.terms[m] = v
            else:
                out.terms.pop(m, None)
        return out

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, self.p, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c: int) -> "Poly":
        return Poly(self.nvars, self.p, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        acc: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                acc[m] = acc.get(m, 0) + c1 * c2
        return Poly(self.nvars, self.p, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(1, self.nvars, self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, values: Sequence):
        """Evaluate at a point whose entries lie in any ring accepting int coefficients."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        zero = values[0] * 0 if values else 0
        acc = zero
        for m, c in self.terms.items():
            term = zero + c
            for v, e in zip(values, m):
                if e:
                    term = term * v**e
            acc = acc + term
        return acc

    def substitute_zero(self, indices: Iterable[int]) -> "Poly":
        """Drop every term involving one of the given variables."""
        idx = list(indices)
        return Poly(self.nvars, self.p, {m: c for m, c in self.terms.items() if all(m[i] == 0 for i in idx)})

    def leading(self) -> Tuple[Monomial, int]:
        m = max(self.terms)
        return m, self.terms[m]

    def divmod(self, divisor: "Poly") -> Tuple["Poly", "Poly"]:
        """Division with remainder in lex order by a single divisor.

        For one divisor the remainder vanishes iff the divisor divides self.
        Over Z (p = 0) the divisor's leading coefficient must be a unit.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm, lc = divisor.leading()
        if self.p:
            inv_lc = pow(lc, -1, self.p)
        elif lc in (1, -1):
            inv_lc = lc
        else:
            raise ValueError("integer division needs a unit leading coefficient")
        rest = self.copy()
        quotient = Poly(self.nvars, self.p)
        remainder = Poly(self.nvars, self.p)
        while rest.terms:
            m, c = rest.leading()
            if all(a >= b for a, b in zip(m, lm)):
                q_mono = tuple(a - b for a, b in zip(m, lm))
                q_term = Poly(self.nvars, self.p, {q_mono: c * inv_lc})
                quotient = quotient + q_term
                rest = rest - q_term * divisor
            else:
                remainder.terms[m] = c
                del rest.terms[m]
        return quotient, remainder

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def determinant(M: Sequence[Sequence[Poly]]) -> Poly:
    """Leibniz expansion; fine for the small sizes used here."""
    r = len(M)
    nvars, p = M[0][0].nvars, M[0][0].p
    acc = Poly(nvars, p)
    for perm in itertools.permutations(range(r)):
        term = Poly.constant(perm_sign(perm), nvars, p)
        for i, j in enumerate(perm):
            term = term * M[i][j]
            if term.is_zero():
                break
        acc = acc + term
    return acc


def generic_matrix(n: int, p: int = 0) -> List[List[Poly]]:
    """The matrix (T_ij) with T_ij the variable of index i*n + j."""
    return [[Poly.var(i * n + j, n * n, p) for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def det_poly(n: int, p: int = 0) -> Poly:
    return determinant(generic_matrix(n, p))
