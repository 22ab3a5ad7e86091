"""Compare the greedy system of parameters over the variables with the
sparsest Noether normalization on random square-free monomial ideals.

For each sampled unmixed ideal the script reports the greedy non-zero count
and the Noether complexity from the expanded Chow form.
"""

import argparse
import random
from collections import Counter

from sparsesop.algebra import Ring
from sparsesop.chow import chow_form_monomial, expand, noether_complexity
from sparsesop.monomial_ideals import MonomialIdeal, codim_monomial, minimal_primes
from sparsesop.noether import greedy_sop


def sample(rng, m):
    gens = {tuple(rng.randint(0, 1) for _ in range(m)) for _ in range(rng.randint(2, 6))}
    return MonomialIdeal(m, tuple(g for g in gens if any(g)))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=60)
    parser.add_argument("--vars", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    gaps = Counter()
    done = 0
    while done < args.count:
        M = sample(rng, args.vars)
        if not M.gens or len({len(P) for P in minimal_primes(M)}) != 1:
            continue
        d = M.nvars - codim_monomial(M)
        if d < 1:
            continue
        R = Ring(M.nvars)
        trace = greedy_sop(list(R.gens()), M.to_ideal(R), seed=args.seed)
        best = noether_complexity(expand(chow_form_monomial(M)))
        gaps[trace.total_nonzeros - best] += 1
        done += 1
    print("greedy minus optimal: ideals")
    for gap in sorted(gaps):
        print(f"{gap:>20}: {gaps[gap]}")


if __name__ == "__main__":
    main()
