"""Small finite fields F_{p^e} (e <= 3) for sampling group elements."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Tuple


def _poly_mod(coeffs: list, modulus: Tuple[int, ...], p: int) -> list:
    # modulus is monic, low-to-high, length e+1
    e = len(modulus) - 1
    c = [x % p for x in coeffs]
    for deg in range(len(c) - 1, e - 1, -1):
        f = c[deg]
        if f:
            for i in range(e + 1):
                c[deg - e + i] = (c[deg - e + i] - f * modulus[i]) % p
    return (c + [0] * e)[:e]


@lru_cache(maxsize=None)
def _irreducible(p: int, e: int) -> Tuple[int, ...]:
    """Lexicographically first monic irreducible of degree e over F_p (e <= 3: no roots suffices)."""
    if e == 1:
        return (0, 1)
    if e > 3:
        raise ValueError("only extension degrees e <= 3 are supported")
    for low in itertools.product(range(p), repeat=e):
        mod = tuple(low) + (1,)
        if all(sum(c * pow(x, i, p) for i, c in enumerate(mod)) % p for x in range(p)):
            return mod
    raise AssertionError("no irreducible found")


class FiniteField:
    """F_{p^e}; elements are encoded as integers 0..p^e-1 (base-p digits, low first)."""

    def __init__(self, p: int, e: int = 1):
        if p < 2:
            raise ValueError("p must be prime")
        if not 1 <= e <= 3:
            raise ValueError("extension degree must be 1, 2 or 3")
        self.p = p
        self.e = e
        self.order = p**e
        self.modulus = _irreducible(p, e)

    def __repr__(self) -> str:
        return f"F_{self.p}^{self.e}" if self.e > 1 else f"F_{self.p}"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))

    def __call__(self, x) -> "FFElem":
        if isinstance(x, FFElem):
            return x
        return FFElem(self, self._encode([int(x) % self.p]))

    def _encode(self, digits) -> int:
        return sum((d % self.p) * self.p**i for i, d in enumerate(digits))

    def _decode(self, code: int) -> list:
        out = []
        for _ in range(self.e):
            code, d = divmod(code, self.p)
            out.append(d)
        return out

    def element(self, code: int) -> "FFElem":
        return FFElem(self, code % self.order)

    def random(self, rng) -> "FFElem":
        return FFElem(self, rng.randrange(self.order))

    @property
    def zero(self) -> "FFElem":
        return FFElem(self, 0)

    @property
    def one(self) -> "FFElem":
        return FFElem(self, 1)


class FFElem:
    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    def _coerce(self, other) -> "FFElem":
        if isinstance(other, FFElem):
            if other.field != self.field:
                raise ValueError("mixed finite fields")
            return other
        return self.field(other)

    def __add__(self, other):
        o = self._coerce(other)
        F = self.field
        if F.e == 1:
            return FFElem(F, (self.code + o.code) % F.p)
        a, b = F._decode(self.code), F._decode(o.code)
        return FFElem(F, F._encode([x + y for x, y in zip(a, b)]))

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return FFElem(F, F._encode([-x for x in F._decode(self.code)]))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        F = self.field
        if F.e == 1:
            return FFElem(F, (self.code * o.code) % F.p)
        a, b = F._decode(self.code), F._decode(o.code)
        prod_ = [0] * (2 * F.e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod_[i + j] += x * y
        return FFElem(F, F._encode(_poly_mod(prod_, F.modulus, F.p)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        if self.code == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, FFElem):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field(other).code
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.e, self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __repr__(self) -> str:
        return f"{self.field}({self.code})"
