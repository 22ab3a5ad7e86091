from hypothesis import HealthCheck, settings, strategies as st

from sparsesop.algebra import Polynomial

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SMALL_P = 101


def polynomials(ring, max_terms=4, max_deg=3):
    """Random polynomials as dicts of exponent tuples to residues."""
    mono = st.tuples(*[st.integers(0, max_deg) for _ in range(ring.nvars)])
    coeff = st.integers(1, ring.p - 1)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(lambda d: Polynomial(ring, d))


def nonzero_polynomials(ring, **kw):
    return polynomials(ring, **kw).filter(bool)


def squarefree_families(m_min=2, m_max=7, max_gens=7):
    """(m, supports) with supports non-empty bitmasks over m variables."""
    return st.integers(m_min, m_max).flatmap(
        lambda m: st.tuples(
            st.just(m),
            st.lists(st.integers(1, (1 << m) - 1), min_size=1, max_size=max_gens),
        )
    )



# One line per acceptance criterion, filled in by test_acceptance.py and
# repeated at the end of the run so the verdicts survive output capture.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
