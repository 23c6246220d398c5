"""Minimal Frobenius-iteration counts N for the semistability bounds.

Every bound has the shape "N >= max over terms of E * log_p(B)", i.e. the
least N with p^N >= B^E for all terms. Comparisons are exact big-integer
ones; when B^E is too large to materialise, N is pinned down by rigorous
interval arithmetic on E * log(B) / log(p) instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import math
from math import comb
from typing import Iterator, Optional, Tuple

from .truncsym import is_prime, tl_dim

# largest B^E (in bits) that is materialised for an exact certificate
DEFAULT_BIT_BUDGET = 1 << 20


@dataclass(frozen=True)
class BoundResult:
    theorem: str
    n_min: int
    witness: dict
    base: int
    exponent: int
    exact: bool = True
    certificate: Optional[Tuple[int, int]] = None
    bracket: Optional[Tuple[str, str]] = field(default=None)

    def certificate_valid(self, p: int) -> bool:
        if not self.exact:
            return True
        lo_ok = p**self.n_min >= self.base**self.exponent
        tight = self.n_min == 0 or p ** (self.n_min - 1) < self.base**self.exponent
        return lo_ok and tight

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem,
            "n_min": self.n_min,
            "witness": self.witness,
            "base": self.base,
            "exponent": self.exponent,
            "exact": self.exact,
        }
        if self.certificate is not None:
            out["certificate"] = [_render_int(x) for x in self.certificate]
        if self.bracket is not None:
            out["bracket"] = list(self.bracket)
        return out


def _decimal_digits(x: int) -> int:
    k = max(1, int((x.bit_length() - 1) * math.log10(2)))
    while 10 ** (k - 1) > x:
        k -= 1
    while 10**k <= x:
        k += 1
    return k


def _render_int(x: int) -> str:
    if x.bit_length() <= 200:
        return str(x)
    return f"<{_decimal_digits(x)}-digit integer>"


def _power_of(p: int, b: int) -> Optional[int]:
    """k with b = p^k, or None."""
    k = 0
    while b % p == 0:
        b //= p
        k += 1
    return k if b == 1 else None


def _min_power_exact(p: int, target: int) -> int:
    """Least N with p^N >= target (target >= 1)."""
    # float estimate from the bit length, then exact correction (off by at most a few)
    N = max(0, int((target.bit_length() - 1) * math.log(2) / math.log(p)) - 2)
    pN = p**N
    while pN < target:
        pN *= p
        N += 1
    return N


def _min_power_bracketed(p: int, base: int, exponent: int) -> Tuple[int, Tuple[str, str]]:
    """ceil(exponent * log_p(base)) via interval arithmetic, base not a power of p."""
    import mpmath
    from mpmath import iv, mpf

    digits = 30
    while True:
        iv.dps = digits + len(str(exponent))
        val = exponent * iv.log(iv.mpf(base)) / iv.log(iv.mpf(p))
        # endpoints must be read at the interval precision, not the global one
        with mpmath.workprec(iv.prec + 8):
            lo, hi = mpf(val.a), mpf(val.b)
            clo, chi = int(mpmath.ceil(lo)), int(mpmath.ceil(hi))
            # the true value is irrational, so a bracket strictly inside (N-1, N] settles it
            if clo == chi and lo > clo - 1:
                shown = len(str(clo)) + 12
                return clo, (mpmath.nstr(lo, shown), mpmath.nstr(hi, shown))
        digits *= 2
        if digits > 100000:
            raise ArithmeticError("interval refinement did not converge")


@dataclass(frozen=True)
class _Term:
    n_min: int
    base: int
    exponent: int
    witness: dict
    exact: bool
    bracket: Optional[Tuple[str, str]]
    target: Optional[int] = None


def _solve_term(p: int, base: int, exponent: int, witness: dict, bit_budget: int) -> _Term:
    if base <= 1 or exponent == 0:
        return _Term(0, base, exponent, witness, True, None, base**exponent)
    k = _power_of(p, base)
    if k is not None:
        n = k * exponent
        if exponent * base.bit_length() <= bit_budget:
            return _Term(n, base, exponent, witness, True, None, base**exponent)
        return _Term(n, base, exponent, witness, False, (str(n), str(n)))
    if exponent * base.bit_length() <= bit_budget:
        target = base**exponent
        return _Term(_min_power_exact(p, target), base, exponent, witness, True, None, target)
    n, bracket = _min_power_bracketed(p, base, exponent)
    return _Term(n, base, exponent, witness, False, bracket)


def _maximise(theorem: str, p: int, terms: Iterator[Tuple[int, int, dict]], bit_budget: int) -> BoundResult:
    best: Optional[_Term] = None
    for base, exponent, witness in terms:
        t = _solve_term(p, base, exponent, witness, bit_budget)
        if best is None or _larger(t, best):
            best = t
    if best is None:
        return BoundResult(theorem, 0, {}, 1, 0, True, (1, 1))
    cert = (p**best.n_min, best.target) if best.exact else None
    return BoundResult(theorem, best.n_min, best.witness, best.base, best.exponent, best.exact, cert, best.bracket)


def _larger(a: _Term, b: _Term) -> bool:
    if a.n_min != b.n_min:
        return a.n_min > b.n_min
    # same N: prefer the larger right-hand side B^E when both are materialised
    if a.exact and b.exact:
        return a.target > b.target
    return False


def _check_p(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")


def bound_thm31(p: int, m: int, d: int, bit_budget: int = DEFAULT_BIT_BUDGET) -> BoundResult:
    """Least N with p^N >= d^m (field of definition of instability parabolics)."""
    _check_p(p)
    if d < 1 or m < 1:
        raise ValueError("need m >= 1 and d >= 1")
    return _maximise("thm31", p, iter([(d, m, {"m": m})]), bit_budget)


def bound_thm32(p: int, m: int, d: int, bit_budget: int = DEFAULT_BIT_BUDGET) -> BoundResult:
    """Least N with p^N >= (d r)^C(m, r) for every 0 < r < m."""
    _check_p(p)
    if d < 1 or m < 1:
        raise ValueError("need m >= 1 and d >= 1")
    return _maximise("thm32", p, ((d * r, comb(m, r), {"r": r}) for r in range(1, m)), bit_budget)


def bound_thm44(p: int, n: int, l: int, bit_budget: int = DEFAULT_BIT_BUDGET) -> BoundResult:
    """Least N with p^N >= (l r)^C(K, r) for every 1 <= r <= K, K = dim T^l."""
    _check_p(p)
    if n < 1 or not 1 <= l <= n * (p - 1):
        raise ValueError(f"l must lie in [1, n(p-1)] = [1, {n * (p - 1)}]")
    K = tl_dim(p, n, l).enum
    res = _maximise("thm44", p, ((l * r, comb(K, r), {"r": r}) for r in range(1, K + 1)), bit_budget)
    return _with_extra(res, {"K": K})


def bound_thm54(p: int, n: int, m: int, d: int, bit_budget: int = DEFAULT_BIT_BUDGET) -> BoundResult:
    """Least N with p^N >= ((d+l) r)^C(m K_l, r) over 1 <= l <= n(p-1), 0 < r < m K_l."""
    _check_p(p)
    if n < 1 or m < 1 or d < 1:
        raise ValueError("need n, m, d >= 1")

    def terms():
        for l in range(1, n * (p - 1) + 1):
            mk = m * tl_dim(p, n, l).enum
            for r in range(1, mk):
                yield (d + l) * r, comb(mk, r), {"l": l, "r": r, "K": mk // m}

    return _maximise("thm54", p, terms(), bit_budget)


def _with_extra(res: BoundResult, extra: dict) -> BoundResult:
    return BoundResult(
        res.theorem, res.n_min, {**res.witness, **extra}, res.base, res.exponent, res.exact, res.certificate, res.bracket
    )


def cor55_rank(kind: str, n: int, d: int) -> int:
    """Rank of the tensor power, symmetric power or exterior power of a rank-n sheaf."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if kind == "tensor":
        return n**d
    if kind == "sym":
        return comb(n + d - 1, d)
    if kind == "wedge":
        if d > n:
            raise ValueError(f"wedge^{d} of a rank-{n} sheaf is zero")
        return comb(n, d)
    raise ValueError(f"unknown kind {kind!r}")
