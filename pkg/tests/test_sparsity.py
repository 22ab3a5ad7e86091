from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import assume, given, strategies as st

from sparsesop.fixtures import GOLDEN, subspace
from sparsesop.linalg import det, rank
from sparsesop.sparsity import (
    Subspace,
    basis_sparseness,
    blocks,
    cobasis_sparseness,
    direct_sum,
    minimal_support_vectors,
    orthogonal_complement,
    pluecker_sparseness,
    sparsest_basis,
)


def span(*rows, p=None):
    return Subspace.row_space(rows, p)


def e(i, n):
    return tuple(1 if j == i else 0 for j in range(n))


small_matrices = st.tuples(st.integers(1, 3), st.integers(2, 6)).flatmap(
    lambda rn: st.lists(st.lists(st.integers(-2, 2), min_size=rn[1], max_size=rn[1]),
                        min_size=rn[0], max_size=rn[0])
)


def nonzero_space(rows, p=None):
    assume(rank(rows, p) > 0)
    return Subspace.row_space(rows, p)


# --- oracles ---------------------------------------------------------------


def dim_on(M, S):
    """dim of M intersected with the coordinate subspace on S."""
    outside = [j for j in range(M.n) if j not in S]
    if not outside:
        return M.dim
    return M.dim - rank([[r[j] for j in outside] for r in M.basis], M.p)


def scan_minimal_supports(M):
    out = []
    for k in range(1, M.n + 1):
        for S in combinations(range(M.n), k):
            if dim_on(M, S) >= 1 and all(dim_on(M, tuple(x for x in S if x != j)) == 0 for j in S):
                out.append(S)
    return out


def all_vectors(M):
    p = M.p
    for coeffs in product(range(p), repeat=M.dim):
        if any(coeffs):
            yield tuple(sum(c * r[j] for c, r in zip(coeffs, M.basis)) % p for j in range(M.n))


def exhaustive_basis_sparseness(M):
    """Min total support over every basis, enumerating all vectors of a space over a tiny field."""
    vecs = sorted(set(all_vectors(M)), key=lambda v: sum(1 for x in v if x))
    best = None
    for B in combinations(vecs, M.dim):
        if rank([list(v) for v in B], M.p) == M.dim:
            w = sum(sum(1 for x in v if x) for v in B)
            best = w if best is None else min(best, w)
    return best


def direct_minor_count(M):
    return sum(1 for S in combinations(range(M.n), M.dim)
               if det([[r[j] for j in S] for r in M.basis], M.p) != 0)


# --- examples --------------------------------------------------------------


def test_example_supports():
    M1 = subspace("M1")
    supports = [s for s, _ in minimal_support_vectors(M1)]
    assert supports == [(0,), (1, 2, 3, 4, 5, 6)]
    assert [s for s, _ in minimal_support_vectors(span(e(0, 3)))] == [(0,)]
    M2 = [s for s, _ in minimal_support_vectors(subspace("M2"))]
    assert (0, 1, 2) in M2 and (3, 4, 5) in M2


@pytest.mark.parametrize("name", ["M1", "M2", "L1", "L2", "M3", "M4"])
def test_golden_measures(name):
    M = subspace(name)
    measures = {"basis": basis_sparseness, "cobasis": cobasis_sparseness, "pluecker": pluecker_sparseness}
    for key, value in GOLDEN[name].items():
        assert measures[key](M) == value, key


def test_the_measures_disagree():
    M1, M2 = subspace("M1"), subspace("M2")
    assert basis_sparseness(M1) > basis_sparseness(M2)
    assert pluecker_sparseness(M1) < pluecker_sparseness(M2)
    L1, L2 = subspace("L1"), subspace("L2")
    assert basis_sparseness(L1) > basis_sparseness(L2)
    assert cobasis_sparseness(L1) == cobasis_sparseness(L2)
    M3, M4 = subspace("M3"), subspace("M4")
    assert basis_sparseness(M3) > basis_sparseness(M4)
    assert cobasis_sparseness(M3) < cobasis_sparseness(M4)


def test_trivial_cases():
    assert cobasis_sparseness(span(e(0, 2))) == 1
    assert pluecker_sparseness(span(*[e(i, 4) for i in range(4)])) == 1
    S = direct_sum(span(e(0, 1)), span(e(0, 3)))
    assert (S.n, S.dim) == (4, 2)
    M3 = subspace("M3")
    assert (M3.n, M3.dim) == (18, 9)


def test_block_sizes_of_fixtures():
    assert [len(cols) for cols, _ in blocks(subspace("M3"))] == [9, 9]
    assert max(len(cols) for cols, _ in blocks(subspace("M1"))) == 6


def test_limit_is_enforced():
    M = Subspace.row_space([[1] * 17])
    with pytest.raises(ValueError, match="exceeds the limit"):
        basis_sparseness(M)
    with pytest.raises(ValueError, match="exceeds the limit"):
        pluecker_sparseness(M)
    assert basis_sparseness(M, limit=17) == 17


def test_zero_space_is_rejected():
    Z = Subspace(3, ())
    with pytest.raises(ValueError):
        minimal_support_vectors(Z)
    assert orthogonal_complement(Z).dim == 3


def test_bad_rows():
    with pytest.raises(ValueError):
        Subspace(3, ((1, 2),))
    with pytest.raises(ValueError):
        Subspace.row_space([])


# --- properties ------------------------------------------------------------


@given(small_matrices)
def test_minimal_supports_match_subset_scan(rows):
    M = nonzero_space(rows)
    found = minimal_support_vectors(M)
    assert sorted(s for s, _ in found) == sorted(scan_minimal_supports(M))
    for s, v in found:
        assert M.contains(v)
        assert tuple(j for j, x in enumerate(v) if x) == s


@given(st.tuples(st.integers(1, 3), st.integers(2, 5)).flatmap(
    lambda rn: st.lists(st.lists(st.integers(0, 2), min_size=rn[1], max_size=rn[1]),
                        min_size=rn[0], max_size=rn[0])))
def test_basis_sparseness_matches_exhaustive_search_mod_3(rows):
    M = nonzero_space(rows, 3)
    assert basis_sparseness(M) == exhaustive_basis_sparseness(M)


@given(small_matrices)
def test_pluecker_count_matches_direct_minors(rows):
    M = nonzero_space(rows)
    assert pluecker_sparseness(M) == direct_minor_count(M)


@given(small_matrices, st.randoms(use_true_random=False))
def test_measures_are_basis_invariant(rows, rnd):
    M = nonzero_space(rows)
    B = [list(r) for r in M.basis]
    for _ in range(4):
        i, j = rnd.sample(range(len(B)), 2) if len(B) > 1 else (0, 0)
        if i != j:
            c = Fraction(rnd.randint(-3, 3))
            B[i] = [a + c * b for a, b in zip(B[i], B[j])]
        s = Fraction(rnd.choice([-2, -1, 1, 3]))
        B[i] = [s * a for a in B[i]]
    rnd.shuffle(B)
    N = Subspace.row_space(B)
    assert N == M
    for measure in (basis_sparseness, cobasis_sparseness, pluecker_sparseness):
        if measure is cobasis_sparseness and M.dim == M.n:
            continue
        assert measure(N) == measure(M)


@given(small_matrices)
def test_duality(rows):
    M = nonzero_space(rows)
    perp = orthogonal_complement(M)
    assert perp.dim == M.n - M.dim
    assert orthogonal_complement(perp) == M
    if perp.dim:
        assert cobasis_sparseness(M) == basis_sparseness(perp)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=8).filter(any))
def test_dimension_one_measures_agree(v):
    M = span(v)
    support = sum(1 for x in v if x)
    assert [s for s, _ in minimal_support_vectors(M)] == [tuple(j for j, x in enumerate(v) if x)]
    assert basis_sparseness(M) == pluecker_sparseness(M) == support


@given(small_matrices, small_matrices)
def test_basis_sparseness_adds_over_direct_sums(a, b):
    M, N = nonzero_space(a), nonzero_space(b)
    assert basis_sparseness(direct_sum(M, N)) == basis_sparseness(M) + basis_sparseness(N)


@given(small_matrices)
def test_sparsest_basis_spans(rows):
    M = nonzero_space(rows)
    B = sparsest_basis(M)
    assert len(B) == M.dim and Subspace.row_space(B) == M

