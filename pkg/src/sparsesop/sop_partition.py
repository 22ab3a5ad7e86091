"""Sparse systems of parameters over a polynomial ring.

Generators are split into blocks whose initial terms share a variable of a
minimal coordinate prime; one random combination per block then gives a
system of parameters. Hypothesis checking, the full partial-Groebner-basis
pipeline and the Harris cubic counterexample live here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .algebra import (
    GREVLEX,
    Ideal,
    Ring,
    TermOrder,
    buchberger,
    leading_monomial,
    random_combination,
)
from .config import DEFAULTS
from .linalg import det, left_nullspace
from .monomial_ideals import (
    CoordinatePrime,
    MonomialIdeal,
    codim_ideal,
    codim_monomial,
    minimal_primes,
)


class PartitionError(ValueError):
    pass


class VerificationError(RuntimeError):
    """Random choices kept failing the codimension check."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


@dataclass(frozen=True)
class Partition:
    blocks: tuple
    prime: CoordinatePrime | None = None

    @property
    def c(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class ParameterSystem:
    forms: tuple
    blocks: tuple
    coefficients: tuple
    prime: CoordinatePrime | None
    seed: int
    attempts: int = 1
    partial_basis_size: int = 0

    @property
    def c(self) -> int:
        return len(self.forms)

    def nonzero_coefficients(self) -> int:
        return sum(len(b) for b in self.blocks)


def _ideal_of(polys) -> Ideal:
    polys = tuple(polys)
    return Ideal(polys[0].ring, polys)


def check_setwise_hypothesis(blocks, order: TermOrder = GREVLEX):
    """Every union of |U| blocks must generate an ideal of codim >= |U|.

    Returns (True, None) or (False, U) with U the first violating tuple of
    0-based block indices, in (size, lex) order.
    """
    blocks = [tuple(b) for b in blocks]
    if not blocks:
        raise PartitionError("no blocks")
    if any(not b for b in blocks):
        raise PartitionError("empty block")
    c = len(blocks)
    for size in range(1, c + 1):
        for U in combinations(range(c), size):
            gens = [f for j in U for f in blocks[j]]
            try:
                codim = codim_ideal(_ideal_of(gens), order)
            except ValueError:
                # the unit ideal has infinite codimension
                continue
            if codim < size:
                return False, U
    return True, None


def partition_by_prime(F, order: TermOrder, prime: CoordinatePrime) -> Partition:
    """Block p takes every remaining element whose initial term is divisible
    by the p-th variable of the prime."""
    remaining = list(F)
    blocks = []
    for v in prime.variables:
        block = [f for f in remaining if leading_monomial(f, order)[v]]
        if not block:
            raise PartitionError("partition degenerate, choose another prime")
        remaining = [f for f in remaining if not leading_monomial(f, order)[v]]
        blocks.append(tuple(block))
    if remaining:
        raise PartitionError("prime does not contain initial ideal")
    return Partition(tuple(blocks), prime)


def _initial_codim(polys, order) -> int:
    leads = [leading_monomial(f, order) for f in polys]
    M = MonomialIdeal(len(leads[0]), tuple(leads))
    if M.is_unit():
        raise ValueError("unit ideal")
    return codim_monomial(M)


def minimal_subset(polys, order: TermOrder, c: int) -> list:
    """Greedy removal in reverse insertion order while codim(in) stays c."""
    kept = list(polys)
    for idx in range(len(kept) - 1, -1, -1):
        trial = kept[:idx] + kept[idx + 1:]
        if trial and _initial_codim(trial, order) >= c:
            kept = trial
    return kept


def pad_block(block, order: TermOrder, variable: int | None = None):
    """Multiply each element by a power of a variable of its own initial term
    to reach the block's maximal degree."""
    target = max(f.degree() for f in block)
    out = []
    for f in block:
        gap = target - f.degree()
        if gap == 0:
            out.append(f)
            continue
        lm = leading_monomial(f, order)
        v = variable if variable is not None and lm[variable] else next(i for i, e in enumerate(lm) if e)
        out.append(f * f.ring.var(v) ** gap)
    return tuple(out)


def sparse_sop(
    F,
    order: TermOrder = GREVLEX,
    seed: int = 0,
    homogeneous: bool = False,
    retries: int = DEFAULTS.retries,
    prime_index: int = 0,
) -> ParameterSystem:
    """Sparse system of parameters for the ideal generated by F."""
    F = [f for f in F if f]
    if not F:
        raise ValueError("no non-zero generators")
    if homogeneous and not all(f.is_homogeneous() for f in F):
        raise ValueError("homogeneous output requested for non-homogeneous input")
    c = codim_ideal(_ideal_of(F), order)
    if c < 1:
        raise ValueError("ideal has codimension 0")

    def enough(leads):
        M = MonomialIdeal(len(leads[0]), tuple(leads))
        return M.is_unit() or codim_monomial(M) >= c

    partial = buchberger(F, order, stop=enough)
    basis = minimal_subset(partial, order, c)
    leads = MonomialIdeal(len(F[0].ring.gens()), tuple(leading_monomial(f, order) for f in basis))
    primes = [P for P in minimal_primes(leads) if len(P) == c]
    if not 0 <= prime_index < len(primes):
        raise PartitionError(f"prime index {prime_index} out of range ({len(primes)} primes)")
    prime = primes[prime_index]
    part = partition_by_prime(basis, order, prime)
    blocks = part.blocks
    if homogeneous:
        blocks = tuple(pad_block(b, order, v) for b, v in zip(blocks, prime.variables))

    rng = random.Random(seed)
    last = None
    for attempt in range(1, retries + 1):
        forms, coeffs = [], []
        for block in blocks:
            f, r = random_combination(block, rng)
            forms.append(f)
            coeffs.append(r)
        try:
            ok = codim_ideal(_ideal_of(forms), order) == c
        except ValueError:
            ok = False
        if ok:
            return ParameterSystem(tuple(forms), blocks, tuple(coeffs), prime, seed, attempt, len(partial))
        last = tuple(forms)
    raise VerificationError(f"no system of parameters after {retries} draws", witness=last)


# ---------------------------------------------------------------------------
# The d = 3 Harris example


def _plane_through(points, p):
    """Linear form vanishing at three points of P^3 (coefficient vector)."""
    null = left_nullspace([list(col) for col in zip(*points)], p)
    if len(null) != 1:
        raise ValueError("points are collinear")
    return null[0]


def _general_position(points, p) -> bool:
    return all(det([list(points[i]) for i in quad], p) != 0 for quad in combinations(range(5), 4))


def build_harris_cubics(seed: int = 0, ring: Ring | None = None, points=None, retries: int = DEFAULTS.retries):
    """Five cubics in four variables generating an ideal of codim 4 that admits
    no partition into four blocks giving a system of parameters.

    `points` seeds the first attempt (five vectors in k^4); degenerate
    configurations are redrawn.
    """
    ring = ring or Ring(4)
    if ring.nvars != 4:
        raise ValueError("the construction lives in P^3")
    p = ring.p
    rng = random.Random(seed)
    for attempt in range(retries):
        if attempt == 0 and points is not None:
            pts = [tuple(int(v) % p for v in pt) for pt in points]
        else:
            pts = [tuple(rng.randrange(p) for _ in range(4)) for _ in range(5)]
        if len(pts) != 5 or not _general_position(pts, p):
            continue
        x = ring.gens()
        planes = {}
        for triple in combinations(range(5), 3):
            coeffs = _plane_through([pts[i] for i in triple], p)
            planes[triple] = sum((x[k].scale(coeffs[k]) for k in range(4)), ring.zero())
        cubics = []
        for i in range(5):
            others = [t for t in planes if i not in t]
            family = []
            for trio in combinations(others, 3):
                family.append(planes[trio[0]] * planes[trio[1]] * planes[trio[2]])
            g, _ = random_combination(family, rng, first_one=False)
            cubics.append(g)
        return cubics
    raise ValueError("could not draw five points in general position")


def set_partitions(items, k):
    """All partitions of `items` into exactly k non-empty blocks."""
    items = list(items)
    if k == 0:
        if not items:
            yield []
        return
    if len(items) < k:
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest, k - 1):
        yield [[first]] + part
    for part in set_partitions(rest, k):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
