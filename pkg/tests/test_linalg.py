from fractions import Fraction
from itertools import permutations

from hypothesis import given, strategies as st

from sparsesop.linalg import det, left_nullspace, nullspace, rank, rref


def leibniz(A):
    n = len(A)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= A[i][perm[i]]
        total += term
    return total


square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
)
rect = st.tuples(st.integers(1, 4), st.integers(1, 5)).flatmap(
    lambda rc: st.lists(st.lists(st.integers(-3, 3), min_size=rc[1], max_size=rc[1]),
                        min_size=rc[0], max_size=rc[0])
)


@given(square)
def test_det_matches_leibniz(A):
    assert det(A) == leibniz(A)
    assert det(A, 13) == leibniz(A) % 13


@given(rect)
def test_rank_nullity(A):
    n = len(A[0])
    N = nullspace(A, n)
    assert rank(A) + len(N) == n
    for v in N:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in A)


@given(rect)
def test_left_nullspace_mod_p(A):
    p = 11
    for y in left_nullspace(A, p):
        for j in range(len(A[0])):
            assert sum(y[i] * A[i][j] for i in range(len(A))) % p == 0
    assert len(left_nullspace(A, p)) == len(A) - rank(A, p)


@given(rect)
def test_rref_is_reduced(A):
    R, piv = rref(A)
    for r, c in zip(R, piv):
        assert r[c] == 1
        assert all(other[c] == 0 for other in R if other is not r)
    assert piv == sorted(piv)
