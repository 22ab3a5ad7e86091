"""Exact Gaussian elimination over Q (Fractions) or Z/p (ints with modulus)."""

from __future__ import annotations

from fractions import Fraction


def _ops(p):
    if p is None:
        return (lambda x: x), (lambda x: 1 / Fraction(x))
    return (lambda x: x % p), (lambda x: pow(x, -1, p))


def rref(rows, p=None):
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    norm, inv = _ops(p)
    A = [[norm(x) for x in row] for row in rows]
    if not A:
        return [], []
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        s = inv(A[r][c])
        A[r] = [norm(x * s) for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [norm(a - f * b) for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(rows, p=None) -> int:
    return len(rref(rows, p)[1])


def det(rows, p=None):
    """Determinant of a square matrix."""
    norm, inv = _ops(p)
    A = [[norm(x) for x in row] for row in rows]
    n = len(A)
    result = norm(1) if p is not None else Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            result = norm(-result)
        result = norm(result * A[c][c])
        s = inv(A[c][c])
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = norm(A[i][c] * s)
                A[i] = [norm(a - f * b) for a, b in zip(A[i], A[c])]
    return result


def nullspace(rows, ncols=None, p=None):
    """Basis of {v : A v = 0} as a list of vectors."""
    if ncols is None:
        ncols = len(rows[0])
    R, pivots = rref(rows, p) if rows else ([], [])
    norm, _ = _ops(p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    zero = 0 if p is not None else Fraction(0)
    one = 1 if p is not None else Fraction(1)
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(R, pivots):
            v[pc] = norm(-row[f])
        basis.append(v)
    return basis


def left_nullspace(rows, p=None):
    """Basis of {y : y A = 0}."""
    if not rows:
        return []
    cols = [list(c) for c in zip(*rows)]
    return nullspace(cols, len(rows), p)


def submatrix(rows, cols):
    return [[row[c] for c in cols] for row in rows]
