"""Exact dense linear algebra over a field.

Entries are ``FieldElement`` or ``Fraction`` values; anything supporting
``+ - * /`` and truthiness works.  Matrices are lists of rows.
"""
from __future__ import annotations

from fractions import Fraction

from .coeff_field import FieldElement

__all__ = ["SingularMatrixError", "eliminate", "solve", "inverse", "determinant", "rank"]


class SingularMatrixError(ZeroDivisionError):
    pass


def _weight(x):
    # cheap pivot preference: fewest stored terms
    if isinstance(x, FieldElement):
        return len(x._n) + len(x._d)
    return 0


def eliminate(A, B=None):
    """Gauss-Jordan on ``[A | B]``; returns (det(A), A^{-1} B).

    Zero entries are skipped, so (block) triangular inputs cost little.
    Raises SingularMatrixError when A is singular.
    """
    n = len(A)
    A = [list(row) for row in A]
    B = [list(row) for row in B] if B is not None else [[] for _ in range(n)]
    det = None
    sign = 1
    for col in range(n):
        best = None
        for r in range(col, n):
            if A[r][col]:
                if best is None or _weight(A[r][col]) < _weight(A[best][col]):
                    best = r
        if best is None:
            raise SingularMatrixError(f"matrix is singular (column {col})")
        if best != col:
            A[col], A[best] = A[best], A[col]
            B[col], B[best] = B[best], B[col]
            sign = -sign
        piv = A[col][col]
        det = piv if det is None else det * piv
        inv = 1 / piv
        rowA = [x * inv if x else x for x in A[col]]
        rowB = [x * inv if x else x for x in B[col]]
        A[col], B[col] = rowA, rowB
        for r in range(n):
            if r == col:
                continue
            f = A[r][col]
            if not f:
                continue
            Ar, Br = A[r], B[r]
            for j in range(col, n):
                if rowA[j]:
                    Ar[j] = Ar[j] - f * rowA[j]
            for j in range(len(rowB)):
                if rowB[j]:
                    Br[j] = Br[j] - f * rowB[j]
    if det is None:
        det = Fraction(1)
    return (det if sign == 1 else -det), B


def solve(A, b):
    """Solve A x = b for a single right-hand side vector."""
    _, X = eliminate(A, [[v] for v in b])
    return [row[0] for row in X]


def inverse(A, zero, one):
    n = len(A)
    eye = [[one if i == j else zero for j in range(n)] for i in range(n)]
    return eliminate(A, eye)[1]


def determinant(A):
    if not A:
        return Fraction(1)
    try:
        return eliminate(A)[0]
    except SingularMatrixError:
        return A[0][0] * 0


def rank(A):
    """Rank of a (possibly rectangular) matrix."""
    A = [list(row) for row in A]
    rows = len(A)
    cols = len(A[0]) if A else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        for i in range(r + 1, rows):
            f = A[i][c]
            if f:
                f = f * inv
                A[i] = [x - f * y if y else x for x, y in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r
