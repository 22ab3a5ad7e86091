"""Bundled example ideals, matrices and graphs with their golden values."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .algebra import Ideal, intersect
from .chow import BracketPolynomial, parse_brackets
from .monomial_ideals import CoordinatePrime, MonomialIdeal
from .noether import NormalizationCandidate
from .sparsity import Subspace, direct_sum, orthogonal_complement
from .textio import parse_graph, parse_ideal, parse_matrix


def read_text(name: str) -> str:
    return resources.files("sparsesop").joinpath("data", name).read_text()


def load_ideal(name: str, field: int | None = None) -> Ideal:
    return parse_ideal(read_text(name + ".ideal"), field)


def load_matrix(name: str) -> list:
    return parse_matrix(read_text(name + ".matrix"))


def load_graph(name: str):
    return parse_graph(read_text(name + ".graph"))


def ex11_partitions(F):
    """The rejected and accepted partitions of the four monomials."""
    x1x2, x2x3, x4sq, x1x3 = F
    return [(x1x2,), (x2x3, x4sq), (x1x3,)], [(x1x2,), (x2x3, x1x3), (x4sq,)]


def ex17_pairs():
    """(x1^2 - x2^2, x1x2 + x2^2) and its initial-term counterpart (x1^2, x1x2 + x2^2)."""
    F = load_ideal("ex17")
    f, g, h = F.generators
    R = F.ring
    return Ideal(R, (f, g + h)), Ideal(R, (R.parse("x1^2"), g + h))


@lru_cache(maxsize=None)
def ex29_ideal(field: int | None = None) -> Ideal:
    """Intersection of the three toric components."""
    a, b, c = (load_ideal(f"ex29_{k}", field) for k in "abc")
    return intersect(intersect(a, b), c)


def ex29_displayed_initial() -> MonomialIdeal:
    """(x2x5, x3, x4) ∩ (x1x4, x2, x6) ∩ (x2x4, x1, x5)."""

    def m(*vs):
        return tuple(1 if i + 1 in vs else 0 for i in range(6))

    A = MonomialIdeal(6, (m(2, 5), m(3), m(4)))
    B = MonomialIdeal(6, (m(1, 4), m(2), m(6)))
    C = MonomialIdeal(6, (m(2, 4), m(1), m(5)))
    return A.intersect(B).intersect(C)


def ex29_rx() -> BracketPolynomial:
    return parse_brackets(read_text("ex29_rx.brackets"), 6)


def ex29_normalization(p: int | None = None) -> NormalizationCandidate:
    rows = tuple(tuple(int(x) for x in row) for row in load_matrix("ex29_normalization"))
    return NormalizationCandidate(rows) if p is None else NormalizationCandidate(rows, p)


def subspace(name: str) -> Subspace:
    """M1, M2, L1, L2 from disk; M3 = L1 + L2^perp and M4 = L2 + L1^perp."""
    if name == "M3":
        return direct_sum(subspace("L1"), orthogonal_complement(subspace("L2")))
    if name == "M4":
        return direct_sum(subspace("L2"), orthogonal_complement(subspace("L1")))
    return Subspace.row_space(load_matrix(name.lower()))


EX23_PRIMES = tuple(
    CoordinatePrime(tuple(v - 1 for v in vs))
    for vs in [(1, 2, 4, 5), (1, 3, 4, 5), (2, 3, 4, 5), (2, 3, 4, 6), (2, 3, 5, 6)]
)

GOLDEN = {
    "1.1": {"codim": 3, "witness": (0, 2)},
    "1.5": {"codims": (1, 3), "witness": (0, 1)},
    "1.7": {"codims": (1, 2)},
    "1.2": {"codim": 4, "partitions": 10, "valid_partitions": 0},
    "2.3": {
        "chow": "[1 4][1 5][1 6][2 6][3 6]",
        "raw_terms": 32,
        "complexity": 6,
        "greedy_first": (0, 5),
        "greedy_total": 7,
        "sparsest": 6,
        "coordinate_normalizations": 0,
    },
    "2.4": {"chow": "-[1 2]^2 - [1 3][2 3]"},
    "2.9": {
        "chow_initial": "[1 2 6][1 3 5][1 5 6][2 3 6][3 4 5][3 4 6]",
        "terms": 13452,
        "min_support_initial": 8,
        "min_support_rx": 6,
        "initial_ideals": 6,
        "lifted_nonzeros": 8,
    },
    "M1": {"basis": 7, "pluecker": 6},
    "M2": {"basis": 6, "pluecker": 9},
    "L1": {"basis": 19, "cobasis": 21},
    "L2": {"basis": 18, "cobasis": 21},
    "M3": {"basis": 40, "cobasis": 39},
    "M4": {"basis": 39, "cobasis": 40},
}
