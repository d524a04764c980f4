"""Fraction-free (Bareiss) elimination over the Laurent polynomial ring."""
from __future__ import annotations

from .laurent import LaurentPoly


class SingularMatrix(ArithmeticError):
    pass


def bareiss_solve(A, b):
    """Solve ``A x = b`` over the fraction field of Q[Lambda].

    Returns ``(y, det)`` with ``x_i = y_i / det`` where ``det = det(A)`` up to
    sign and every ``y_i`` is a polynomial (Cramer numerators).  All
    intermediate divisions are exact.
    """
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("A must be square and match b")
    rank = b[0].rank
    M = [list(A[i]) + [b[i]] for i in range(n)]
    prev = LaurentPoly.constant(1, rank)
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k]), None)
        if piv is None:
            raise SingularMatrix(f"no pivot in column {k}")
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
        pk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n + 1):
                num = pk * M[i][j]
                if mik and M[k][j]:
                    num = num - mik * M[k][j]
                M[i][j] = num.exact_div(prev)
            M[i][k] = LaurentPoly.zero(rank)
        prev = pk
    det = M[n - 1][n - 1]
    y = [None] * n
    for i in range(n - 1, -1, -1):
        acc = det * M[i][n]
        for j in range(i + 1, n):
            if M[i][j]:
                acc = acc - M[i][j] * y[j]
        y[i] = acc.exact_div(M[i][i])
    return y, det
