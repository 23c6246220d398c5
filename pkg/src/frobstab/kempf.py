"""Instability one-parameter subgroups for torus actions.

For a state S the function lam -> m(lam, S)/|lam| is maximised on the ray
through the minimum-norm point w of conv(S); the maximum is |w|. Everything
here runs in exact rational arithmetic, so the semistable/unstable boundary
(w = 0 or not) is decided exactly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .lattice import Cocharacter, ParabolicDesc, norm_sq, pairing, parabolic_of, primitive
from .states import State, mu_of, state_of_point

Point = Tuple[Fraction, ...]

ORACLE_MAX_POINTS = 12
ORACLE_MAX_RANK = 6


def _dot(x: Sequence, y: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def _combine(coeffs: Sequence[Fraction], pts: Sequence[Point]) -> Point:
    n = len(pts[0])
    return tuple(sum((c * q[i] for c, q in zip(coeffs, pts)), Fraction(0)) for i in range(n))


def _affine_minimizer(corral: Sequence[Point]) -> List[Fraction]:
    """Barycentric coordinates of the min-norm point of aff(corral).

    Solves the bordered system [G 1; 1^T 0] [alpha; mu] = [0; 1], G the Gram matrix.
    """
    k = len(corral)
    A = [[_dot(corral[i], corral[j]) for j in range(k)] + [Fraction(1)] for i in range(k)]
    A.append([Fraction(1)] * k + [Fraction(0)])
    b = [Fraction(0)] * k + [Fraction(1)]
    sol = linalg.solve(A, b)
    if sol is None:
        raise ArithmeticError("corral lost affine independence")
    return sol[:k]


def min_norm_wolfe(state: State) -> Point:
    """Minimum-norm point of conv(state) by Wolfe's method, exactly."""
    pts: List[Point] = [tuple(Fraction(x) for x in w) for w in state.weights]
    x = min(pts, key=lambda q: (_dot(q, q), q))
    corral = [x]
    lam = [Fraction(1)]
    while True:
        xx = _dot(x, x)
        q = min(pts, key=lambda s: (_dot(x, s), s))
        if _dot(x, q) >= xx:
            return x
        # x is the min-norm point of aff(corral), so q lies off that affine hull
        corral.append(q)
        lam.append(Fraction(0))
        while True:
            alpha = _affine_minimizer(corral)
            if all(a >= 0 for a in alpha):
                keep = [i for i, a in enumerate(alpha) if a > 0]
                corral = [corral[i] for i in keep]
                lam = [alpha[i] for i in keep]
                x = _combine(lam, corral)
                break
            theta = min(lam[i] / (lam[i] - a) for i, a in enumerate(alpha) if a < 0)
            lam = [(1 - theta) * l_ + theta * a for l_, a in zip(lam, alpha)]
            keep = [i for i, l_ in enumerate(lam) if l_ > 0]
            corral = [corral[i] for i in keep]
            lam = [lam[i] for i in keep]
            x = _combine(lam, corral)


def min_norm_oracle(state: State, max_points: int = ORACLE_MAX_POINTS) -> Point:
    """Minimum-norm point by brute force over affinely independent subsets.

    For each subset F of size <= n+1, project the origin onto aff(F) via the
    normal equations of the difference vectors; keep projections with
    nonnegative barycentric coordinates and return the shortest.
    """
    pts: List[Point] = [tuple(Fraction(x) for x in w) for w in state.weights]
    n = state.n
    if len(pts) > max_points or n > ORACLE_MAX_RANK:
        raise ValueError(f"oracle cap exceeded: |S|={len(pts)} (max {max_points}), n={n} (max {ORACLE_MAX_RANK})")
    best: Optional[Point] = None
    best_norm: Optional[Fraction] = None
    for size in range(1, min(n + 1, len(pts)) + 1):
        for F in itertools.combinations(pts, size):
            f0 = F[0]
            diffs = [tuple(a - b for a, b in zip(f, f0)) for f in F[1:]]
            if diffs:
                M = [[_dot(u, v) for v in diffs] for u in diffs]
                rhs = [-_dot(u, f0) for u in diffs]
                t = linalg.solve(M, rhs)
                if t is None:
                    continue
                bary = [1 - sum(t)] + list(t)
                if any(c < 0 for c in bary):
                    continue
                y = tuple(f0[i] + sum((tj * u[i] for tj, u in zip(t, diffs)), Fraction(0)) for i in range(n))
            else:
                y = f0
            ny = _dot(y, y)
            if best_norm is None or ny < best_norm:
                best, best_norm = y, ny
    assert best is not None
    return best


@dataclass(frozen=True)
class InstabilityReport:
    semistable: bool
    min_norm_point: Point
    mu_sq: Fraction
    lam: Optional[Cocharacter] = None
    m: Optional[int] = None
    parabolic: Optional[ParabolicDesc] = None

    def to_json(self) -> dict:
        return {
            "semistable": self.semistable,
            "min_norm_point": [str(x) for x in self.min_norm_point],
            "mu_sq": str(self.mu_sq),
            "lambda": list(self.lam) if self.lam is not None else None,
            "m": self.m,
            "parabolic": self.parabolic.to_json() if self.parabolic is not None else None,
        }


def instability(state: State, method: str = "wolfe") -> InstabilityReport:
    """Semistability verdict, Kempf cocharacter, mu^2 and instability parabolic for the torus."""
    if method == "wolfe":
        w = min_norm_wolfe(state)
    elif method == "oracle":
        w = min_norm_oracle(state)
    else:
        raise ValueError(f"unknown method {method!r}")
    if not any(w):
        return InstabilityReport(semistable=True, min_norm_point=w, mu_sq=Fraction(0))
    lam = primitive(w)
    mu_sq = _dot(w, w)
    m = min(pairing(lam, chi) for chi in state.weights)
    if Fraction(m * m) != mu_sq * norm_sq(lam) or m <= 0:
        raise ArithmeticError("optimality certificate failed: m^2 != mu_sq * |lambda|^2")
    return InstabilityReport(
        semistable=False,
        min_norm_point=w,
        mu_sq=mu_sq,
        lam=lam,
        m=m,
        parabolic=parabolic_of(lam),
    )


def certificate_holds(report: InstabilityReport, state: State) -> bool:
    """Check <w, chi> >= |w|^2 on the state and, if unstable, m^2 = mu_sq |lambda|^2."""
    w = report.min_norm_point
    ww = _dot(w, w)
    if any(_dot(w, chi) < ww for chi in state.weights):
        return False
    if report.semistable:
        return ww == 0
    mu = mu_of(report.lam, state)
    return mu.m > 0 and Fraction(report.m**2) == report.mu_sq * norm_sq(report.lam) and mu.mu_sq_signed == report.mu_sq


# --- conjugate search for full GL_n --------------------------------------------


@dataclass(frozen=True)
class ConjugateSearchResult:
    report: InstabilityReport
    witness: list
    samples: int

    def to_json(self) -> dict:
        return {
            "report": self.report.to_json(),
            "witness": [[_elem_json(x) for x in row] for row in self.witness],
            "samples": self.samples,
        }


def _elem_json(x):
    return str(x) if isinstance(x, Fraction) else x.code


def _witness_key(g) -> tuple:
    return tuple(x if isinstance(x, Fraction) else x.code for row in g for x in row)


def conjugate_instability_search(
    rep,
    coords: Sequence,
    samples: int,
    seed: int = 0,
    extension_degree: int = 1,
    extra: Sequence[Sequence[Sequence]] = (),
    box: int = 3,
    max_tries: int = 1000,
) -> ConjugateSearchResult:
    """Best torus-instability of rho(g) v over sampled g (identity always first).

    A positive mu_sq certifies that v is unstable for GL_n; a semistable
    result certifies nothing. ``extra`` adds caller-chosen matrices.
    """
    from .fields import FiniteField
    from .repcalc import evaluate, random_invertible, torus_weights

    if samples < 1:
        raise ValueError("samples must be at least 1")
    if len(coords) != rep.m:
        raise ValueError(f"point has {len(coords)} coordinates, representation has dimension {rep.m}")
    weights = torus_weights(rep)
    if rep.p:
        F = FiniteField(rep.p, extension_degree)
        v = [F(x) for x in coords]
        one = F.one
    else:
        v = [Fraction(x) for x in coords]
        one = Fraction(1)
    if not any(x != 0 for x in v):
        raise ValueError("the zero vector has no state")
    ident = [[one if i == j else one * 0 for j in range(rep.n)] for i in range(rep.n)]
    rng = random.Random(seed)
    candidates = [ident]
    for g in extra:
        candidates.append([[one * 0 + x for x in row] for row in g])
    for _ in range(samples - 1):
        candidates.append(random_invertible(rep.n, rep.p, rng, box=box, e=extension_degree, max_tries=max_tries))
    best = None
    for g in candidates:
        gv = linalg.matvec(evaluate(rep, g), v)
        report = instability(state_of_point(weights, gv, rep.p))
        key = (-report.mu_sq, _witness_key(g))
        if best is None or key < best[0]:
            best = (key, report, g)
    return ConjugateSearchResult(report=best[1], witness=best[2], samples=len(candidates))
