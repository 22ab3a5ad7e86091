"""Expansion statistics for the bundled Chow forms: distributed term count
before collection, collected term count, minimal supports and complexity."""

import argparse
import time
from math import prod

from sparsesop import fixtures
from sparsesop.chow import chow_form_monomial, expand, minimal_supports, noether_complexity
from sparsesop.monomial_ideals import MonomialIdeal


def raw_terms(B):
    """Terms of the distributed product before like terms are collected."""
    fact = prod(range(1, B.d + 1))
    return sum(fact ** len(brs) for brs, _ in B.terms)


def forms():
    yield "space curve", chow_form_monomial(MonomialIdeal.from_ideal(fixtures.load_ideal("ex23")))
    yield "toric in(J)", chow_form_monomial(fixtures.ex29_displayed_initial())
    yield "toric J", fixtures.ex29_rx()


def main():
    argparse.ArgumentParser(description=__doc__).parse_args()
    print(f"{'form':<12} {'d x m':>6} {'raw':>8} {'collected':>10} {'minimal':>8} {'complexity':>10} {'seconds':>8}")
    for label, B in forms():
        start = time.perf_counter()
        E = expand(B)
        elapsed = time.perf_counter() - start
        print(f"{label:<12} {f'{B.d}x{B.m}':>6} {raw_terms(B):>8} {len(E):>10} "
              f"{len(minimal_supports(E)):>8} {noether_complexity(E):>10} {elapsed:>8.2f}")


if __name__ == "__main__":
    main()
