"""Small exact linear algebra over the rationals."""
from __future__ import annotations

from .rational import as_rational
from .scalar import Scalar


class SingularMatrixError(ValueError):
    pass


def solve(A, b):
    """Solve ``A x = b`` by Gauss-Jordan elimination; entries of ``b`` may be Scalars."""
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve needs a square matrix and a matching right-hand side")
    M = [[as_rational(x) for x in row] for row in A]
    rhs = [x if isinstance(x, Scalar) else as_rational(x) for x in b]
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col]), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        M[col], M[pivot] = M[pivot], M[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = M[col][col] ** -1
        M[col] = [x * inv for x in M[col]]
        rhs[col] = rhs[col] * inv
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
                rhs[r] = rhs[r] - rhs[col] * f
    return rhs
