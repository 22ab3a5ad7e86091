"""Basis, cobasis and Pluecker sparseness of linear subspaces.

A subspace is the row space of an exact matrix (Fractions, or residues when
a modulus is given). Vectors of inclusion-minimal support (elementary
vectors) are enumerated per connected block of the column matroid; a
sparsest basis is then a minimum-weight matroid basis of those vectors,
which the greedy algorithm finds exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .config import DEFAULTS
from .linalg import det, left_nullspace, nullspace, rank, rref


@dataclass(frozen=True)
class Subspace:
    """Row space of `basis`, stored in reduced echelon form."""

    n: int
    basis: tuple
    p: int | None = None

    def __post_init__(self):
        rows = [list(r) for r in self.basis]
        if any(len(r) != self.n for r in rows):
            raise ValueError("row length differs from ambient dimension")
        if self.p is None:
            rows = [[Fraction(x) for x in r] for r in rows]
        R, _ = rref(rows, self.p) if rows else ([], [])
        object.__setattr__(self, "basis", tuple(tuple(r) for r in R))

    @classmethod
    def row_space(cls, matrix, p=None):
        matrix = [list(r) for r in matrix]
        if not matrix:
            raise ValueError("empty matrix")
        return cls(len(matrix[0]), tuple(tuple(r) for r in matrix), p)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> list:
        return [next(j for j, x in enumerate(r) if x) for r in self.basis]

    def contains(self, v) -> bool:
        return rank(list(self.basis) + [list(v)], self.p) == self.dim


def orthogonal_complement(M: Subspace) -> Subspace:
    if M.dim == 0:
        one = 1 if M.p else Fraction(1)
        return Subspace(M.n, tuple(tuple(one if i == j else 0 * one for j in range(M.n)) for i in range(M.n)), M.p)
    return Subspace(M.n, tuple(tuple(v) for v in nullspace(list(M.basis), M.n, M.p)), M.p)


def direct_sum(M: Subspace, N: Subspace) -> Subspace:
    if M.p != N.p:
        raise ValueError("subspaces over different fields")
    zero = 0 if M.p else Fraction(0)
    rows = [tuple(r) + (zero,) * N.n for r in M.basis] + [(zero,) * M.n + tuple(r) for r in N.basis]
    return Subspace(M.n + N.n, tuple(rows), M.p)


# ---------------------------------------------------------------------------
# Block decomposition


def blocks(M: Subspace) -> list:
    """Connected components of the column matroid as (columns, restricted subspace).

    In echelon form the components are the connected components of the
    bipartite graph joining row i to every column where it is non-zero.
    Zero columns lie in no support and are left out.
    """
    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, row in enumerate(M.basis):
        parent.setdefault(("r", i), ("r", i))
        for j, x in enumerate(row):
            if x:
                parent.setdefault(("c", j), ("c", j))
                parent[find(("c", j))] = find(("r", i))
    groups: dict = {}
    for node in parent:
        groups.setdefault(find(node), []).append(node)
    out = []
    for nodes in groups.values():
        rows = sorted(i for kind, i in nodes if kind == "r")
        cols = sorted(j for kind, j in nodes if kind == "c")
        sub = Subspace(len(cols), tuple(tuple(M.basis[i][j] for j in cols) for i in rows), M.p)
        out.append((tuple(cols), sub))
    return sorted(out)


def _check_size(n, limit):
    if n > limit:
        raise ValueError(f"block of {n} coordinates exceeds the limit of {limit}")


def _block_elementary(M: Subspace) -> dict:
    """Elementary vectors of a block, keyed by support. Each one vanishes on
    a hyperplane of the column matroid, spanned by r - 1 columns."""
    r, n = M.dim, M.n
    cols = [list(c) for c in zip(*M.basis)]
    found: dict = {}
    for S in combinations(range(n), r - 1):
        if not S:
            null = [[1]]
        else:
            sub = [[M.basis[i][j] for j in S] for i in range(r)]
            null = left_nullspace(sub, M.p)
        if len(null) != 1:
            continue
        y = null[0]
        v = tuple(_dot(y, c, M.p) for c in cols)
        supp = frozenset(j for j, x in enumerate(v) if x)
        if supp and supp not in found:
            found[supp] = v
    return found


def _dot(a, b, p):
    s = sum(x * y for x, y in zip(a, b))
    return s % p if p else s


def minimal_support_vectors(M: Subspace, limit: int = DEFAULTS.sparsity_limit) -> list:
    """All inclusion-minimal supports of non-zero vectors in M, with one
    representative each; supports are 0-based sorted tuples."""
    if M.dim == 0:
        raise ValueError("zero subspace")
    out = []
    for cols, sub in blocks(M):
        _check_size(sub.n, limit)
        for supp, v in _block_elementary(sub).items():
            full = [0 if M.p else Fraction(0)] * M.n
            for k, j in enumerate(cols):
                full[j] = v[k]
            out.append((tuple(sorted(cols[k] for k in supp)), tuple(full)))
    return sorted(out, key=lambda sv: (len(sv[0]), sv[0]))


def sparsest_basis(M: Subspace, limit: int = DEFAULTS.sparsity_limit) -> list:
    """A basis of M of minimum total support, from elementary vectors chosen
    greedily by support size."""
    chosen = []
    for _supp, v in minimal_support_vectors(M, limit):
        if rank(chosen + [list(v)], M.p) > len(chosen):
            chosen.append(list(v))
            if len(chosen) == M.dim:
                break
    return chosen


def basis_sparseness(M: Subspace, limit: int = DEFAULTS.sparsity_limit) -> int:
    return sum(sum(1 for x in v if x) for v in sparsest_basis(M, limit))


def cobasis_sparseness(M: Subspace, limit: int = DEFAULTS.sparsity_limit) -> int:
    return basis_sparseness(orthogonal_complement(M), limit)


def pluecker_sparseness(M: Subspace, limit: int = DEFAULTS.sparsity_limit) -> int:
    """Number of non-zero maximal minors; the count multiplies over blocks."""
    if M.dim == 0:
        raise ValueError("zero subspace")
    total = 1
    for _cols, sub in blocks(M):
        _check_size(sub.n, limit)
        rows = [list(r) for r in sub.basis]
        total *= sum(
            1 for S in combinations(range(sub.n), sub.dim) if det([[r[j] for j in S] for r in rows], M.p) != 0
        )
    return total
