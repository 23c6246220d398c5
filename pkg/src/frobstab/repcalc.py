"""Rational representations of GL_n as matrices of det-fractions of polynomials.

A RepSpec entry (i, j) stands for f_ij / det(T)^a_ij with f_ij a polynomial
over F_p (or Z when p = 0) in the n^2 variables T_ij, indexed row-major.
Bases are always ordered lexicographically so matrices are reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import Dict, List, Sequence, Tuple

from . import linalg
from .fields import FFElem, FiniteField
from .lattice import Weight
from .polys import Poly, det_poly, determinant
from .truncsym import bounded_compositions, compositions, is_prime


@dataclass(frozen=True)
class DegreeProfile:
    d: int
    a: int
    is_polynomial: bool


def _reduce_entry(f: Poly, a: int, n: int) -> Tuple[Poly, int]:
    """Cancel powers of det from f / det^a so that det does not divide f when a > 0."""
    if f.is_zero():
        return f, 0
    D = det_poly(n, f.p)
    while a > 0:
        q, r = f.divmod(D)
        if not r.is_zero():
            break
        f, a = q, a - 1
    return f, a


@dataclass(frozen=True, eq=False)
class RepSpec:
    n: int
    p: int
    entries: Tuple[Tuple[Poly, ...], ...]
    denom: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        m = len(self.entries)
        if m == 0 or any(len(row) != m for row in self.entries):
            raise ValueError("entries must form a nonempty square matrix")
        if len(self.denom) != m or any(len(row) != m for row in self.denom):
            raise ValueError("denom must have the same shape as entries")
        if self.p and not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        entries, denom = [], []
        for frow, arow in zip(self.entries, self.denom):
            er, dr = [], []
            for f, a in zip(frow, arow):
                if f.nvars != self.n * self.n or f.p != self.p:
                    raise ValueError("entry polynomials must live in F_p[T_ij], i,j <= n")
                if a < 0:
                    raise ValueError("denominator exponents must be nonnegative")
                f, a = _reduce_entry(f, int(a), self.n)
                er.append(f)
                dr.append(a)
            entries.append(tuple(er))
            denom.append(tuple(dr))
        object.__setattr__(self, "entries", tuple(entries))
        object.__setattr__(self, "denom", tuple(denom))

    @property
    def m(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, RepSpec) and (self.n, self.p, self.entries, self.denom) == (
            other.n,
            other.p,
            other.entries,
            other.denom,
        )

    def __hash__(self) -> int:
        return hash((self.n, self.p, self.entries, self.denom))

    @classmethod
    def from_json(cls, data: dict) -> "RepSpec":
        for key in ("n", "p", "entries"):
            if key not in data:
                raise ValueError(f"RepSpec JSON is missing field {key!r}")
        n, p = int(data["n"]), int(data["p"])
        raw = data["entries"]
        m = len(raw)
        if "m" in data and int(data["m"]) != m:
            raise ValueError(f"RepSpec field 'm'={data['m']} does not match {m} entry rows")
        denom = data.get("denom", [[0] * m for _ in range(m)])
        try:
            entries = tuple(tuple(Poly.from_terms(cell, n * n, p) for cell in row) for row in raw)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"RepSpec field 'entries' is malformed: {exc}") from None
        return cls(n, p, entries, tuple(tuple(int(a) for a in row) for row in denom))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "p": self.p,
            "entries": [[f.to_terms() for f in row] for row in self.entries],
            "denom": [list(row) for row in self.denom],
        }


def _spec(n: int, p: int, entries, denom=None) -> RepSpec:
    m = len(entries)
    if denom is None:
        denom = [[0] * m for _ in range(m)]
    return RepSpec(n, p, tuple(tuple(r) for r in entries), tuple(tuple(r) for r in denom))


def _zero(n: int, p: int) -> Poly:
    return Poly(n * n, p)


def _one(n: int, p: int) -> Poly:
    return Poly.constant(1, n * n, p)


# --- standard constructions -------------------------------------------------


def trivial_rep(n: int, p: int = 0) -> RepSpec:
    return _spec(n, p, [[_one(n, p)]])


def standard_rep(n: int, p: int = 0) -> RepSpec:
    return _spec(n, p, [[Poly.var(i * n + j, n * n, p) for j in range(n)] for i in range(n)])


def det_power_rep(n: int, k: int, p: int = 0) -> RepSpec:
    """The one-dimensional representation det^k (k may be negative)."""
    if k >= 0:
        return _spec(n, p, [[det_poly(n, p) ** k]])
    return _spec(n, p, [[_one(n, p)]], [[-k]])


def det_rep(n: int, p: int = 0) -> RepSpec:
    return det_power_rep(n, 1, p)


def dual_rep(n: int, p: int = 0) -> RepSpec:
    """g -> (g^-1)^T; entry (i, j) is the (i, j) cofactor over det."""
    T = [[Poly.var(i * n + j, n * n, p) for j in range(n)] for i in range(n)]
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [[T[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            cof = determinant(minor) if minor else _one(n, p)
            row.append(cof if (i + j) % 2 == 0 else -cof)
        entries.append(row)
    return _spec(n, p, entries, [[1] * n for _ in range(n)])


def _sym_matrix(n: int, p: int, index: List[Tuple[int, ...]]) -> List[List[Poly]]:
    """Entry (k', k) = coefficient of x^k' in prod_j (sum_i T_ij x_i)^(k_j)."""
    nv = n * n
    pos = {k: r for r, k in enumerate(index)}
    cols = []
    for k in index:
        # polynomial in x with coefficients in F_p[T]: {x-exponent: Poly}
        acc: Dict[Tuple[int, ...], Poly] = {(0,) * n: _one(n, p)}
        for j, kj in enumerate(k):
            for _ in range(kj):
                nxt: Dict[Tuple[int, ...], Poly] = {}
                for xe, c in acc.items():
                    for i in range(n):
                        e = list(xe)
                        e[i] += 1
                        e = tuple(e)
                        term = c * Poly.var(i * n + j, nv, p)
                        nxt[e] = nxt[e] + term if e in nxt else term
                acc = nxt
        col = [_zero(n, p)] * len(index)
        for xe, c in acc.items():
            if xe in pos:
                col[pos[xe]] = c
        cols.append(col)
    return [[cols[c][r] for c in range(len(index))] for r in range(len(index))]


def sym_rep(n: int, l: int, p: int = 0) -> RepSpec:
    """Sym^l(V) in the monomial basis, ordered as weights_of_functor('sym')."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    return _spec(n, p, _sym_matrix(n, p, sorted(compositions(n, l), reverse=True)))


def tl_rep(n: int, p: int, l: int) -> RepSpec:
    """GL_n acting on T^l(V) in the basis v(k), k bounded, ascending lex order.

    The symmetrisation map sends x^k in Sym^l to v(k) equivariantly and kills
    exactly the monomials with some exponent >= p, so the action on the v(k)
    is the Sym^l action restricted to bounded exponents and read mod p.
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if not 1 <= l <= n * (p - 1):
        raise ValueError(f"l must lie in [1, n(p-1)] = [1, {n * (p - 1)}]")
    return _spec(n, p, _sym_matrix(n, p, bounded_compositions(n, l, p)))


# --- operations -------------------------------------------------------------


def rep_degree(spec: RepSpec) -> DegreeProfile:
    """d = max over nonzero entries of deg f_ij + n (a - a_ij), with a = max a_ij."""
    a = max(max(row) for row in spec.denom)
    d = max(
        f.degree() + spec.n * (a - aij)
        for frow, arow in zip(spec.entries, spec.denom)
        for f, aij in zip(frow, arow)
        if not f.is_zero()
    )
    return DegreeProfile(d=d, a=a, is_polynomial=(a == 0))


def _check_compatible(s1: RepSpec, s2: RepSpec) -> None:
    if s1.n != s2.n:
        raise ValueError(f"rank mismatch: GL_{s1.n} vs GL_{s2.n}")
    if s1.p != s2.p:
        raise ValueError(f"characteristic mismatch: {s1.p} vs {s2.p}")


def tensor(s1: RepSpec, s2: RepSpec) -> RepSpec:
    """Kronecker product; basis (i1, i2) ordered lexicographically."""
    _check_compatible(s1, s2)
    m1, m2 = s1.m, s2.m
    entries, denom = [], []
    for i1, i2 in itertools.product(range(m1), range(m2)):
        er, dr = [], []
        for j1, j2 in itertools.product(range(m1), range(m2)):
            er.append(s1.entries[i1][j1] * s2.entries[i2][j2])
            dr.append(s1.denom[i1][j1] + s2.denom[i2][j2])
        entries.append(er)
        denom.append(dr)
    return _spec(s1.n, s1.p, entries, denom)


def wedge_lift(spec: RepSpec, r: int) -> RepSpec:
    """The induced action on wedge^r, with entries the r x r minors (r-subsets in lex order)."""
    if not 1 <= r <= spec.m:
        raise ValueError(f"r must lie in [1, {spec.m}]")
    n, p = spec.n, spec.p
    D = det_poly(n, p)
    subsets = list(itertools.combinations(range(spec.m), r))
    perms = [(perm, _sign(perm)) for perm in itertools.permutations(range(r))]
    entries, denom = [], []
    for I in subsets:
        er, dr = [], []
        for J in subsets:
            terms = []
            for perm, sign in perms:
                fs = [spec.entries[I[s]][J[perm[s]]] for s in range(r)]
                if any(f.is_zero() for f in fs):
                    continue
                num = Poly.constant(sign, n * n, p)
                for f in fs:
                    num = num * f
                terms.append((num, sum(spec.denom[I[s]][J[perm[s]]] for s in range(r))))
            A = max((a for _, a in terms), default=0)
            acc = _zero(n, p)
            for num, a in terms:
                acc = acc + num * D ** (A - a)
            er.append(acc)
            dr.append(A)
        entries.append(er)
        denom.append(dr)
    return _spec(n, p, entries, denom)


def _sign(perm: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


# --- evaluation -------------------------------------------------------------


def _coerce_matrix(g: Sequence[Sequence], p: int):
    if p:
        field = None
        for row in g:
            for x in row:
                if isinstance(x, FFElem):
                    field = x.field
        F = field or FiniteField(p)
        if F.p != p:
            raise ValueError("matrix field characteristic does not match the representation")
        return [[F(x) for x in row] for row in g]
    return [[Fraction(x) for x in row] for row in g]


def evaluate(spec: RepSpec, g: Sequence[Sequence]) -> list:
    """rho(g) for an invertible n x n matrix g (rationals, or F_p / F_{p^e} elements when p > 0)."""
    if len(g) != spec.n or any(len(row) != spec.n for row in g):
        raise ValueError(f"expected a {spec.n}x{spec.n} matrix")
    G = _coerce_matrix(g, spec.p)
    dg = linalg.det(G)
    if dg == 0:
        raise ValueError("matrix is not invertible")
    flat = [x for row in G for x in row]
    return [[f.evaluate(flat) / dg**a for f, a in zip(frow, arow)] for frow, arow in zip(spec.entries, spec.denom)]


def evaluate_scalar(spec: RepSpec, c) -> list:
    """rho(c * id); lets a user inspect whether scalars map to scalars."""
    return evaluate(spec, [[c if i == j else 0 for j in range(spec.n)] for i in range(spec.n)])


def identity_matrix(m: int, one) -> list:
    zero = one * 0
    return [[one if i == j else zero for j in range(m)] for i in range(m)]


def random_invertible(n: int, p: int, rng: random.Random, box: int = 3, e: int = 1, max_tries: int = 1000) -> list:
    """Uniform entries in [-box, box] (p = 0) or in F_{p^e}, rejected until invertible."""
    F = FiniteField(p, e) if p else None
    for _ in range(max_tries):
        if F is None:
            g = [[Fraction(rng.randint(-box, box)) for _ in range(n)] for _ in range(n)]
        else:
            g = [[F.random(rng) for _ in range(n)] for _ in range(n)]
        if linalg.det(g) != 0:
            return g
    raise RuntimeError(f"no invertible {n}x{n} matrix found in {max_tries} tries")


def is_multiplicative(spec: RepSpec, pairs: int = 20, seed: int = 0) -> bool:
    """Spot-check rho(id) = id and rho(gh) = rho(g) rho(h) on seeded random pairs."""
    rng = random.Random(seed)
    one = FiniteField(spec.p).one if spec.p else Fraction(1)
    ident = [[one if i == j else one * 0 for j in range(spec.n)] for i in range(spec.n)]
    if evaluate(spec, ident) != identity_matrix(spec.m, one):
        return False
    for _ in range(pairs):
        g = random_invertible(spec.n, spec.p, rng)
        h = random_invertible(spec.n, spec.p, rng)
        lhs = evaluate(spec, linalg.matmul(g, h))
        rhs = linalg.matmul(evaluate(spec, g), evaluate(spec, h))
        if lhs != rhs:
            return False
    return True


def torus_weights(spec: RepSpec) -> List[Weight]:
    """Weights of the basis vectors, read off rho(diag(t)).

    Raises ValueError if the basis is not a weight basis for the diagonal torus.
    """
    n = spec.n
    off = [i * n + j for i in range(n) for j in range(n) if i != j]
    weights = []
    for i, (frow, arow) in enumerate(zip(spec.entries, spec.denom)):
        for j, (f, a) in enumerate(zip(frow, arow)):
            ft = f.substitute_zero(off)
            if i != j:
                if not ft.is_zero():
                    raise ValueError(f"entry ({i + 1},{j + 1}) is nonzero on the torus: not a weight basis")
                continue
            if len(ft.terms) != 1 or list(ft.terms.values())[0] != 1:
                raise ValueError(f"diagonal entry {i + 1} is not a monomial on the torus: not a weight basis")
            (mono,) = ft.terms
            weights.append(tuple(mono[s * n + s] - a for s in range(n)))
    return weights


# --- weights of standard functors ---------------------------------------------


def weights_of_functor(kind: str, n: int, param: int, p: int | None = None) -> List[Weight]:
    """Basis-aligned weights of tensor_power(l), sym(l), wedge(r), truncated(l) of F^n."""
    if n < 1:
        raise ValueError("n must be positive")
    if param < 0:
        raise ValueError("functor parameter must be nonnegative")
    if kind == "tensor_power":
        return [tuple(t.count(i) for i in range(n)) for t in itertools.product(range(n), repeat=param)]
    if kind == "sym":
        return sorted(compositions(n, param), reverse=True)
    if kind == "wedge":
        if param > n:
            raise ValueError(f"wedge({param}) of rank {n} is zero")
        return [tuple(1 if i in S else 0 for i in range(n)) for S in itertools.combinations(range(n), param)]
    if kind == "truncated":
        if p is None or not is_prime(p):
            raise ValueError("truncated powers need a prime p")
        if not 1 <= param <= n * (p - 1):
            raise ValueError(f"truncated({param}) needs 1 <= l <= n(p-1) = {n * (p - 1)}")
        return bounded_compositions(n, param, p)
    raise ValueError(f"unknown functor kind {kind!r}")


def tensor_route_coefficient(n: int, p: int, l: int, g: Sequence[Sequence], k_out, k_in):
    """Coefficient of v(k_out) in g . v(k_in), computed inside V^{(x)l}.

    Independent of the Sym-quotient construction: expands g^{(x)l} on the
    arrangements of k_in and reads the lexicographically least arrangement of k_out.
    """
    F = FiniteField(p)
    G = [[F(x) for x in row] for row in g]
    rep = tuple(i for i, c in enumerate(k_out) for _ in range(c))
    acc = F.zero
    for arr in set(itertools.permutations([i for i, c in enumerate(k_in) for _ in range(c)])):
        term = F.one
        for out_i, in_i in zip(rep, arr):
            term = term * G[out_i][in_i]
        acc = acc + term
    # v(k) = prod k_i! * (orbit sum), so rescale from orbit sums to v's
    return acc * prod(factorial(c) for c in k_in) / F(prod(factorial(c) for c in k_out))
