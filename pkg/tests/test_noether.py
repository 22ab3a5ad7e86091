import random

import pytest
from hypothesis import given, strategies as st

from sparsesop.algebra import GREVLEX, LEX, Ideal, Ring, TermOrder
from sparsesop.chow import chow_form_monomial, expand, noether_complexity, sparsest_normalization
from sparsesop.fixtures import ex29_displayed_initial, ex29_ideal, ex29_normalization, ex29_rx, load_ideal
from sparsesop.monomial_ideals import MonomialIdeal, codim_ideal, initial_ideal, minimal_primes
from sparsesop.noether import (
    NormalizationCandidate,
    enumerate_initial_ideals,
    greedy_sop,
    initial_ideals_with_orders,
    is_noether_normalization,
    lift_details,
    lift_from_initial,
)
from sparsesop.sop_partition import VerificationError

from conftest import squarefree_families


@pytest.fixture(scope="module")
def J29():
    return ex29_ideal()


def cand(*rows, p=32003):
    return NormalizationCandidate(tuple(rows), p)


# --- candidates ------------------------------------------------------------


def test_candidate_normalizes_entries():
    c = cand((1, -1, 0), p=7)
    assert c.matrix == ((1, 6, 0),) and c.nonzeros() == 2 and c.rank() == 1
    with pytest.raises(ValueError):
        NormalizationCandidate(((1, 2), (3,)))


def test_candidate_ring_mismatch():
    with pytest.raises(ValueError):
        cand((1, 0)).forms(Ring(3))


# --- the normalization test ------------------------------------------------


def test_displayed_matrix_normalizes_example_29(J29):
    assert is_noether_normalization(J29, ex29_normalization())


def test_vandermonde_rows_normalize_example_29(J29):
    rows = [[j ** i for j in range(1, 7)] for i in range(3)]
    assert is_noether_normalization(J29, cand(*rows))


@pytest.mark.parametrize("rows", [
    ((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)),
    ((1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 1, 1)),
])
def test_special_rows_fail_for_example_29(J29, rows):
    assert not is_noether_normalization(J29, cand(*rows))


def test_inhomogeneous_ideal_is_rejected():
    with pytest.raises(ValueError, match="homogeneous"):
        is_noether_normalization(load_ideal("ex15"), cand((1, 0, 0)))


@given(squarefree_families(m_max=5), st.integers(0, 2**32 - 1))
def test_random_candidate_of_full_size_normalizes(family, seed):
    """Generic d x m matrices normalize any ideal of dimension d."""
    m, supports = family
    M = MonomialIdeal(m, tuple(tuple((s >> i) & 1 for i in range(m)) for s in supports))
    d = m - codim_ideal(M.to_ideal(Ring(m)))
    if d == 0:
        return
    rng = random.Random(seed)
    c = cand(*[[rng.randrange(1, 32003) for _ in range(m)] for _ in range(d)])
    assert is_noether_normalization(M.to_ideal(Ring(m)), c)


# --- greedy ----------------------------------------------------------------


def test_greedy_on_example_23():
    J = load_ideal("ex23")
    trace = greedy_sop(list(J.ring.gens()), J, seed=0)
    first = sorted(next(iter(f.variables())) for f in trace.steps[0].subset)
    assert first == [0, 5]
    assert trace.total_nonzeros == 7
    assert len(trace.steps) == 2
    assert is_noether_normalization(J, _as_candidate(trace.forms))


def _as_candidate(forms):
    m = forms[0].ring.nvars
    rows = []
    for f in forms:
        row = [0] * m
        for mono, c in f.terms.items():
            row[mono.index(1)] = c
        rows.append(row)
    return cand(*rows)


def test_hand_built_six_term_normalization_of_example_23():
    J = load_ideal("ex23")
    assert is_noether_normalization(J, cand((1, 1, 1, 0, 0, 0), (0, 0, 0, 1, 1, 1)))
    assert not is_noether_normalization(J, cand((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)))


def test_greedy_from_zero_ideal():
    R = Ring(3)
    x1 = R.var(0)
    trace = greedy_sop([x1], Ideal(R, ()), seed=0)
    assert trace.forms == (x1,) and trace.steps[0].codim == 1


def test_greedy_raises_codim_each_step():
    J = load_ideal("ex23")
    trace = greedy_sop(list(J.ring.gens()), J, seed=4)
    codims = [codim_ideal(J)] + [s.codim for s in trace.steps]
    assert codims == list(range(codims[0], codims[0] + len(trace.steps) + 1))


def test_greedy_homogeneous_output():
    R = Ring(3)
    F = [R.parse(s) for s in ("x1^2", "x2", "x3^3")]
    trace = greedy_sop(F, Ideal(R, ()), seed=1, homogeneous=True)
    assert all(f.is_homogeneous() for f in trace.forms)
    assert codim_ideal(Ideal(R, trace.forms)) == 3


def test_greedy_rejects_degenerate_input():
    R = Ring(2)
    x1 = R.var(0)
    with pytest.raises(ValueError):
        greedy_sop([x1], Ideal(R, (x1,)))
    with pytest.raises(ValueError):
        greedy_sop([], Ideal(R, ()))


# --- initial ideals --------------------------------------------------------


def test_example_29_has_six_initial_ideals(J29):
    found = initial_ideals_with_orders(J29)
    assert len(found) == 6
    assert ex29_displayed_initial() in found
    for M, order in found.items():
        assert initial_ideal(J29, order) == M


def test_every_initial_ideal_of_example_29_needs_eight(J29):
    for M in enumerate_initial_ideals(J29):
        assert noether_complexity(expand(chow_form_monomial(M))) == 8


def test_quadric_surface_has_two_initial_ideals():
    R = Ring(3)
    J = Ideal(R, (R.parse("x1*x2 - x3^2"),))
    found = enumerate_initial_ideals(J)
    assert len(found) == 2
    assert found == {MonomialIdeal(3, ((1, 1, 0),)), MonomialIdeal(3, ((0, 0, 2),))}


@given(squarefree_families(m_max=5))
def test_monomial_ideal_is_its_only_initial_ideal(family):
    m, supports = family
    M = MonomialIdeal(m, tuple(tuple((s >> i) & 1 for i in range(m)) for s in supports))
    assert enumerate_initial_ideals(M.to_ideal(Ring(m))) == {M}


def test_enumeration_limit():
    R = Ring(3)
    with pytest.raises(ValueError, match="too many"):
        enumerate_initial_ideals(Ideal(R, (R.parse("x1"),)), limit=2)


# --- lifting ---------------------------------------------------------------


@pytest.mark.parametrize("order", [GREVLEX, LEX, TermOrder.grevlex((5, 4, 3, 2, 1, 0))],
                         ids=lambda o: o.describe())
def test_lift_succeeds_for_almost_every_seed(J29, order):
    M = initial_ideal(J29, order)
    base = sparsest_normalization(M, seed=0)
    ok = 0
    for seed in range(100):
        try:
            lifted = lift_details(J29, order, base, seed=seed, retries=1).candidate
        except VerificationError:
            continue
        ok += 1
        assert lifted.nonzeros() == base.nonzeros() == 8
    assert ok >= 99


def test_lift_keeps_the_support(J29):
    M = initial_ideal(J29, GREVLEX)
    base = sparsest_normalization(M, seed=2)
    lifted = lift_from_initial(J29, GREVLEX, base, seed=2)
    support = lambda c: [[bool(x) for x in row] for row in c.matrix]
    assert support(lifted) == support(base)
    assert is_noether_normalization(J29, lifted)


def test_lift_rejects_a_non_normalization(J29):
    with pytest.raises(ValueError, match="does not normalize"):
        lift_from_initial(J29, GREVLEX, cand((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)))


def test_complexity_of_ideal_at_most_that_of_initial_ideals(J29):
    """Lifting makes complexity(J) <= complexity(in(J)); here 6 < 8."""
    assert noether_complexity(expand(ex29_rx())) == 6
    assert all(noether_complexity(expand(chow_form_monomial(M))) >= 6 for M in enumerate_initial_ideals(J29))


@given(squarefree_families(m_max=5, max_gens=5), st.integers(0, 1000))
def test_greedy_cuts_every_minimal_prime(family, seed):
    """codim(P + forms) >= codim(I + J) for each minimal prime P of J, I the variables."""
    m, supports = family
    M = MonomialIdeal(m, tuple(tuple((s >> i) & 1 for i in range(m)) for s in supports))
    R = Ring(m)
    J = M.to_ideal(R)
    if codim_ideal(J) == m:
        return
    trace = greedy_sop(list(R.gens()), J, seed=seed)
    for P in minimal_primes(M):
        ideal = Ideal(R, tuple(R.var(v) for v in P.variables) + trace.forms)
        assert codim_ideal(ideal) >= m
