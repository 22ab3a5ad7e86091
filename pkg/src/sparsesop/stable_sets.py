"""Stanley-Reisner ideals of graphs and disjoint pairs of stable sets.

The Noether complexity of I_G is 2n - |S1| - |S2| for the best pair of
disjoint stable sets; this module computes that count exhaustively so it can
be checked against the Chow-form route. Vertices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .config import DEFAULTS
from .monomial_ideals import MonomialIdeal, codim_monomial, minimal_primes


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("negative vertex count")
        norm = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i + 1}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {i + 1} {j + 1} outside 1..{n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    def adjacent(self, i, j) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbours(self) -> list:
        """Neighbourhoods as bitmasks."""
        nb = [0] * self.n
        for i, j in self.edges:
            nb[i] |= 1 << j
            nb[j] |= 1 << i
        return nb

    def is_stable(self, vertices) -> bool:
        return not any(self.adjacent(i, j) for i, j in combinations(vertices, 2))

    def isolated(self) -> list:
        return [v for v, mask in enumerate(self.neighbours()) if not mask]


def complete(n) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle(n) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def graph_ideal(G: Graph) -> MonomialIdeal:
    """Non-edge quadrics together with all square-free cubics, minimalized:
    only the cubics of triangles survive."""
    if G.n < 2:
        raise ValueError("graph ideal needs at least two vertices")

    def mono(vs):
        return tuple(1 if v in vs else 0 for v in range(G.n))

    gens = [mono(pair) for pair in combinations(range(G.n), 2) if not G.adjacent(*pair)]
    gens += [mono(t) for t in combinations(range(G.n), 3)]
    M = MonomialIdeal(G.n, tuple(gens))
    if not M.gens:
        raise ValueError("graph ideal is zero: dimension too small")
    return M


def complex_dimension(G: Graph) -> int:
    """d = 1 + dimension of the complex (vertices and edges) cut out by I_G,
    read off the codimension of the ideal."""
    return G.n - codim_monomial(graph_ideal(G))


def edge_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal(G.n, tuple(tuple(1 if v in e else 0 for v in range(G.n)) for e in sorted(G.edges)))


def maximal_stable_sets(G: Graph) -> list:
    """Inclusion-maximal stable sets, by brute force (sorted)."""
    stable = [S for k in range(G.n + 1) for S in combinations(range(G.n), k) if G.is_stable(S)]
    sets = [frozenset(S) for S in stable]
    out = [S for S, fs in zip(stable, sets) if not any(fs < other for other in sets)]
    return sorted(out)


def stable_sets_from_primes(G: Graph) -> list:
    """Complements of the minimal primes of the edge ideal."""
    if not G.edges:
        return [tuple(range(G.n))]
    return sorted(P.complement(G.n) for P in minimal_primes(edge_ideal(G)))


class _Independence:
    """alpha(G[mask]) with memoization, plus the lex-least maximum stable set."""

    def __init__(self, G: Graph):
        self.nb = G.neighbours()
        self.memo = {0: 0}

    def alpha(self, mask: int) -> int:
        memo = self.memo
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        best = max(self.alpha(rest), 1 + self.alpha(rest & ~self.nb[v]))
        memo[mask] = best
        return best

    def lex_least(self, mask: int) -> tuple:
        target = self.alpha(mask)
        out = []
        while target:
            v = (mask & -mask).bit_length() - 1
            rest = mask & ~(1 << v)
            if 1 + self.alpha(rest & ~self.nb[v]) == target:
                out.append(v)
                mask = rest & ~self.nb[v]
                target -= 1
            else:
                mask = rest
        return tuple(out)


def max_disjoint_stable_pair(G: Graph, limit: int = DEFAULTS.stable_set_limit):
    """Disjoint stable sets (S1, S2) maximizing |S1| + |S2|.

    Ties prefer larger |S1|, then the lexicographically least (S1, S2).
    Some optimum has |S1| >= |S2|, so S1 sizes are scanned downwards until
    2|S1| falls below the best total.
    """
    if G.n > limit:
        raise ValueError(f"{G.n} vertices exceeds the limit of {limit}")
    full = (1 << G.n) - 1
    ind = _Independence(G)
    best = None
    for k in range(ind.alpha(full), -1, -1):
        if best is not None and 2 * k < best[0]:
            break
        for S1 in combinations(range(G.n), k):
            if not G.is_stable(S1):
                continue
            rest = full & ~sum(1 << v for v in S1)
            total = k + ind.alpha(rest)
            if best is None or total > best[0]:
                best = (total, S1, ind.lex_least(rest))
    return best[1], best[2]


def noether_complexity_via_graph(G: Graph) -> int:
    S1, S2 = max_disjoint_stable_pair(G)
    return 2 * G.n - len(S1) - len(S2)


def join_reduction(G1: Graph) -> Graph:
    """Two disjoint copies of G1 (vertices i and i + n) with every vertex of
    the first joined to every vertex of the second."""
    n = G1.n
    edges = list(G1.edges) + [(i + n, j + n) for i, j in G1.edges]
    edges += [(i, j + n) for i in range(n) for j in range(n)]
    return Graph(2 * n, edges)


def max_stable_set_via_join(G1: Graph) -> int:
    """alpha(G1), recovered from the pair oracle on the join."""
    S1, _ = max_disjoint_stable_pair(join_reduction(G1))
    return len(S1)
