"""Systems of parameters modulo an ideal and Noether normalizations.

Includes the greedy one-form-at-a-time construction, the finiteness test
for linear candidates, enumeration of initial ideals over permuted lex and
grevlex orders, and lifting of normalizations from an initial ideal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations

from .algebra import (
    GREVLEX,
    Ideal,
    Polynomial,
    Ring,
    TermOrder,
    buchberger,
    groebner_basis,
    leading_monomial,
    random_combination,
)
from .config import DEFAULTS
from .linalg import rank
from .monomial_ideals import (
    MonomialIdeal,
    codim_ideal,
    codim_monomial,
    hilbert_numerator,
    initial_ideal,
)
from .sop_partition import VerificationError, pad_block


@dataclass(frozen=True)
class NormalizationCandidate:
    """d x m matrix of residues mod p; row i is the linear form sum_j c_ij x_j."""

    matrix: tuple
    p: int = DEFAULTS.prime

    def __post_init__(self):
        rows = tuple(tuple(int(x) % self.p for x in row) for row in self.matrix)
        if not rows or len({len(r) for r in rows}) != 1:
            raise ValueError("candidate must be a non-empty rectangular matrix")
        object.__setattr__(self, "matrix", rows)

    @property
    def d(self) -> int:
        return len(self.matrix)

    @property
    def m(self) -> int:
        return len(self.matrix[0])

    def nonzeros(self) -> int:
        return sum(1 for row in self.matrix for x in row if x)

    def rank(self) -> int:
        return rank(self.matrix, self.p)

    def forms(self, ring: Ring) -> list:
        if ring.nvars != self.m or ring.p != self.p:
            raise ValueError("candidate does not match the ring")
        x = ring.gens()
        return [sum((x[j].scale(c) for j, c in enumerate(row) if c), ring.zero()) for row in self.matrix]

    def __str__(self):
        p = self.p
        return "\n".join(" ".join(str(c - p if c > p // 2 else c) for c in row) for row in self.matrix)


def _codim(ideal: Ideal, order=GREVLEX) -> int:
    """Codimension, with the unit ideal counted as m + 1."""
    try:
        return codim_ideal(ideal, order)
    except ValueError:
        return ideal.nvars + 1


def is_noether_normalization(J: Ideal, cand: NormalizationCandidate) -> bool:
    """S/(J + rows) is finite dimensional, i.e. every variable has a pure
    power among the leading monomials of a Groebner basis."""
    if not J.is_homogeneous():
        raise ValueError("Noether normalization test needs a homogeneous ideal")
    forms = [f for f in cand.forms(J.ring) if f]
    ideal = J + forms
    if not ideal.generators:
        return False
    leads = [leading_monomial(g, GREVLEX) for g in groebner_basis(ideal, GREVLEX)]
    m = J.nvars
    pure = set()
    for lm in leads:
        nz = [i for i, e in enumerate(lm) if e]
        if not nz:
            return True
        if len(nz) == 1:
            pure.add(nz[0])
    return len(pure) == m


# ---------------------------------------------------------------------------
# Greedy


@dataclass(frozen=True)
class GreedyStep:
    subset: tuple
    form: Polynomial
    coefficients: tuple
    ideal: Ideal
    codim: int


@dataclass(frozen=True)
class GreedyTrace:
    steps: tuple

    @property
    def forms(self) -> tuple:
        return tuple(s.form for s in self.steps)

    @property
    def total_nonzeros(self) -> int:
        return sum(len(s.coefficients) for s in self.steps)


def _homogeneous_refinement(J: Ideal, chosen, order: TermOrder):
    """Partial Groebner basis of J + (chosen) until its initial ideal gains
    codimension over in(J); elements then padded to a common degree."""
    base = _initial_codim_of(J, order)
    start = list(groebner_basis(J, order)) if J.generators else []

    def gained(leads):
        M = MonomialIdeal(J.nvars, tuple(leads))
        return M.is_unit() or codim_monomial(M) > base

    partial = buchberger(start + list(chosen), order, stop=gained)
    new = partial[len(start):] or list(chosen)
    return pad_block(new, order)


def _initial_codim_of(J, order):
    if not J.generators:
        return 0
    return codim_monomial(initial_ideal(J, order))


def greedy_sop(
    F,
    J: Ideal,
    seed: int = 0,
    homogeneous: bool = False,
    order: TermOrder = GREVLEX,
    retries: int = DEFAULTS.retries,
) -> GreedyTrace:
    """Choose forms one at a time from cardinality-minimal subsets of F that
    escape every maximal-dimensional minimal prime of the current ideal.

    A subset escapes all such primes exactly when adjoining it raises the
    codimension, which is what is tested. Ties go to the lexicographically
    least index set; the highest-index element of the chosen subset is then
    dropped from F.
    """
    F = [f for f in F if f]
    if not F:
        raise ValueError("empty F")
    rng = random.Random(seed)
    c = _codim(J + F, order) - _codim(J, order)
    if c < 1:
        raise ValueError("F contained in a minimal prime")
    steps = []
    current = J
    for _ in range(c):
        base = _codim(current, order)
        subset = None
        for size in range(1, len(F) + 1):
            for idx in combinations(range(len(F)), size):
                if _codim(current + [F[i] for i in idx], order) > base:
                    subset = idx
                    break
            if subset is not None:
                break
        if subset is None:
            raise ValueError("F contained in a minimal prime")
        chosen = [F[i] for i in subset]
        parts = _homogeneous_refinement(current, chosen, order) if homogeneous else chosen
        for _attempt in range(retries):
            f, coeffs = random_combination(parts, rng)
            if f and _codim(current + [f], order) > base:
                break
        else:
            raise VerificationError(f"no combination of {len(parts)} elements raised the codimension")
        current = current + [f]
        steps.append(GreedyStep(tuple(chosen), f, coeffs, current, _codim(current, order)))
        del F[max(subset)]
    return GreedyTrace(tuple(steps))


# ---------------------------------------------------------------------------
# Initial ideals and lifting


def _orders(m):
    for perm in permutations(range(m)):
        yield TermOrder.lex(perm)
        yield TermOrder.grevlex(perm)


def initial_ideals_with_orders(J: Ideal, limit: int = DEFAULTS.enumeration_limit) -> dict:
    """Distinct initial ideals over all permuted lex and grevlex orders, each
    mapped to the first order that produced it."""
    m = J.nvars
    if m > limit:
        raise ValueError(f"{m} variables is too many to enumerate orders; supply explicit orders")
    if not J.generators:
        return {MonomialIdeal(m, ()): GREVLEX}
    homogeneous = J.is_homogeneous()
    pool = list(groebner_basis(J, GREVLEX))
    reference = hilbert_numerator(initial_ideal(J, GREVLEX)) if homogeneous else None
    found: dict = {}
    for order in _orders(m):
        leads = MonomialIdeal(m, tuple(leading_monomial(g, order) for g in pool))
        # in(pool) is contained in in(J); equal Hilbert series forces equality
        if not (homogeneous and hilbert_numerator(leads) == reference):
            G = groebner_basis(Ideal(J.ring, tuple(pool)), order)
            pool.extend(g for g in G if g not in pool)
            leads = MonomialIdeal(m, tuple(leading_monomial(g, order) for g in G))
        found.setdefault(leads, order)
    return found


def enumerate_initial_ideals(J: Ideal, limit: int = DEFAULTS.enumeration_limit) -> set:
    return set(initial_ideals_with_orders(J, limit))


@dataclass(frozen=True)
class LiftResult:
    candidate: NormalizationCandidate
    t: int
    weight: tuple
    attempts: int


def lift_details(
    J: Ideal,
    order: TermOrder,
    cand: NormalizationCandidate,
    seed: int = 0,
    retries: int = DEFAULTS.retries,
) -> LiftResult:
    G = groebner_basis(J, order)
    M = MonomialIdeal(J.nvars, tuple(leading_monomial(g, order) for g in G))
    if not is_noether_normalization(M.to_ideal(J.ring), cand):
        raise ValueError("candidate does not normalize the initial ideal")
    weight = order.representing_weight(J.nvars, max(g.degree() for g in G))
    p = cand.p
    rng = random.Random(seed)
    for attempt in range(1, retries + 1):
        t = rng.randrange(1, p)
        scale = [pow(t, w, p) for w in weight]
        lifted = NormalizationCandidate(
            tuple(tuple(c * s % p for c, s in zip(row, scale)) for row in cand.matrix), p
        )
        if is_noether_normalization(J, lifted):
            return LiftResult(lifted, t, weight, attempt)
    raise VerificationError(f"lifting failed for {retries} values of t")


def lift_from_initial(J, order, cand, seed=0, retries=DEFAULTS.retries) -> NormalizationCandidate:
    """Scale column j of a normalization of in(J) by t^w_j, w a weight
    representing the order on J."""
    return lift_details(J, order, cand, seed, retries).candidate
