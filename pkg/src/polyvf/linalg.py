"""Dense exact linear algebra over the rationals.

Matrices are lists of lists of ``Fraction``; everything here is sized for
the small systems the rest of the package produces (a few hundred rows at
most), so plain Gauss-Jordan elimination is used throughout.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Matrix = list  # list[list[Fraction]]
Vector = list  # list[Fraction]


def frac_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def frac_vector(entries: Sequence) -> Vector:
    return [Fraction(x) for x in entries]


def identity(k: int) -> Matrix:
    return [[Fraction(1 if i == j else 0) for j in range(k)] for i in range(k)]


def transpose(m: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def trace(m: Sequence[Sequence[Fraction]]) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def rref(m: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = [list(row) for row in m]
    if not a:
        return a, []
    rows, cols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(m)[1])


def det(m: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [list(row) for row in m]
    k = len(a)
    if any(len(row) != k for row in a):
        raise ValueError("determinant needs a square matrix")
    result = Fraction(1)
    for c in range(k):
        pr = next((i for i in range(c, k) if a[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            result = -result
        result *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, k):
            if a[i][c] != 0:
                factor = a[i][c] * inv
                a[i] = [x - factor * y for x, y in zip(a[i], a[c])]
    return result


def invert(m: Sequence[Sequence[Fraction]]) -> Optional[Matrix]:
    """Exact inverse, or None when the matrix is singular."""
    k = len(m)
    aug = [list(row) + ident_row for row, ident_row in zip(m, identity(k))]
    reduced, pivots = rref(aug)
    if pivots[:k] != list(range(k)):
        return None
    return [row[k:] for row in reduced]


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[Vector]:
    """One exact solution of a x = b (free variables set to zero), or None."""
    if not a:
        return []
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    reduced, pivots = rref(aug)
    cols = len(a[0])
    if cols in pivots:
        return None  # pivot in the augmented column: inconsistent
    x = [Fraction(0)] * cols
    for r, c in enumerate(pivots):
        x[c] = reduced[r][-1]
    return x


def kernel_basis(a: Sequence[Sequence[Fraction]]) -> list[Vector]:
    """Basis of the right kernel {x : a x = 0}."""
    if not a:
        return []
    reduced, pivots = rref(a)
    cols = len(a[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(v)
    return basis
