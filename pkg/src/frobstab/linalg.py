"""Exact linear algebra over the rationals and over prime fields F_p."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

Matrix = List[List[Fraction]]


def _to_fraction_matrix(A: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in A]


def rref(A: Sequence[Sequence]) -> tuple[Matrix, List[int]]:
    """Reduced row echelon form over Q. Returns (R, pivot_columns)."""
    R = _to_fraction_matrix(A)
    nrows = len(R)
    ncols = len(R[0]) if R else 0
    pivots: List[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        piv = next((r for r in range(row, nrows) if R[r][col] != 0), None)
        if piv is None:
            continue
        R[row], R[piv] = R[piv], R[row]
        inv = 1 / R[row][col]
        R[row] = [x * inv for x in R[row]]
        for r in range(nrows):
            if r != row and R[r][col] != 0:
                f = R[r][col]
                R[r] = [a - f * b for a, b in zip(R[r], R[row])]
        pivots.append(col)
        row += 1
    return R, pivots


def rank(A: Sequence[Sequence]) -> int:
    """Rank over Q."""
    if not A:
        return 0
    return len(rref(A)[1])


def solve(A: Sequence[Sequence], b: Sequence) -> Optional[List[Fraction]]:
    """Solve the square system A x = b over Q; None if A is singular."""
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve expects a square system")
    aug = [list(row) + [b[i]] for i, row in enumerate(A)]
    R, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [R[i][n] for i in range(n)]


def det(A: Sequence[Sequence]):
    """Determinant by elimination over any field whose elements support / (Fractions, FFElem)."""
    M = [list(row) for row in A]
    n = len(M)
    if n == 0:
        return 1
    result = M[0][0] * 0 + 1
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return M[0][0] * 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            result = -result
        pv = M[col][col]
        result = result * pv
        for r in range(col + 1, n):
            if M[r][col] != 0:
                f = M[r][col] / pv
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return result


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list:
    """Plain matrix product; entries may be any ring elements."""
    if not A:
        return []
    inner = len(B)
    if any(len(row) != inner for row in A):
        raise ValueError("shape mismatch in matmul")
    cols = len(B[0])
    out = []
    for row in A:
        out_row = []
        for j in range(cols):
            acc = row[0] * B[0][j]
            for k in range(1, inner):
                acc = acc + row[k] * B[k][j]
            out_row.append(acc)
        out.append(out_row)
    return out


def matvec(A: Sequence[Sequence], v: Sequence) -> list:
    return [row_dot(row, v) for row in A]


def row_dot(a: Sequence, b: Sequence):
    acc = a[0] * b[0]
    for x, y in zip(a[1:], b[1:]):
        acc = acc + x * y
    return acc


# --- prime fields -----------------------------------------------------------


def rank_mod_p(rows: Iterable[Dict[int, int]], p: int) -> int:
    """Rank over F_p of sparse rows given as {column: coefficient}.

    Incremental echelon form: every stored pivot row has leading (smallest)
    column with coefficient 1, so reductions keep rows sparse.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    pivots: Dict[int, Dict[int, int]] = {}
    for raw in rows:
        row = {c: v % p for c, v in raw.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: (v * inv) % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def nullity_mod_p(rows: Iterable[Dict[int, int]], ncols: int, p: int) -> int:
    """Kernel dimension over F_p of the operator whose (sparse) rows are given."""
    return ncols - rank_mod_p(rows, p)
