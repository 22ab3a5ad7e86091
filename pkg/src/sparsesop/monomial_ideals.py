"""Monomial ideals: minimal coordinate primes, codimension, top components.

The minimal primes of a monomial ideal are the inclusion-minimal sets of
variables meeting the support of every generator (minimal transversals).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .algebra import (
    GREVLEX,
    Ideal,
    TermOrder,
    initial_monomials,
    mono_divides,
    mono_lcm,
)


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.nvars:
                raise ValueError("monomial has wrong number of variables")
        object.__setattr__(self, "gens", minimalize(self.gens))

    @classmethod
    def from_polynomials(cls, polys):
        polys = list(polys)
        if not polys:
            raise ValueError("no generators")
        for f in polys:
            if not f.is_monomial():
                raise ValueError(f"{f} is not a monomial")
        return cls(polys[0].ring.nvars, tuple(next(iter(f.terms)) for f in polys))

    @classmethod
    def from_ideal(cls, ideal: Ideal):
        if not ideal.is_monomial():
            raise ValueError("ideal is not generated by monomials")
        return cls(ideal.nvars, tuple(next(iter(f.terms)) for f in ideal.generators))

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def contains(self, mono) -> bool:
        return any(mono_divides(g, mono) for g in self.gens)

    def supports(self) -> list:
        """Generator supports as bitmasks."""
        return [sum(1 << i for i, e in enumerate(g) if e) for g in self.gens]

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(self.nvars, tuple(mono_lcm(a, b) for a in self.gens for b in other.gens))

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(self.nvars, self.gens + other.gens)

    def permute(self, perm) -> MonomialIdeal:
        """Rename variable i to perm[i]."""
        out = []
        for g in self.gens:
            e = [0] * self.nvars
            for i, v in enumerate(g):
                e[perm[i]] = v
            out.append(tuple(e))
        return MonomialIdeal(self.nvars, tuple(out))

    def to_ideal(self, ring) -> Ideal:
        return Ideal(ring, tuple(ring.monomial(g) for g in self.gens))

    def __str__(self):
        from .algebra import mono_str

        return "(" + ", ".join(mono_str(g) for g in self.gens) + ")"


def minimalize(monos) -> tuple:
    """Drop duplicates and multiples; sort canonically (degree, then lex descending)."""
    uniq = sorted(set(tuple(m) for m in monos), key=lambda m: (sum(m), tuple(-e for e in m)))
    kept = []
    for m in uniq:
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True, order=True)
class CoordinatePrime:
    """The prime generated by a set of variables (0-based indices, sorted)."""

    variables: tuple

    def __post_init__(self):
        vs = tuple(sorted(set(self.variables)))
        if not vs:
            raise ValueError("empty coordinate prime")
        object.__setattr__(self, "variables", vs)

    def __len__(self):
        return len(self.variables)

    def mask(self) -> int:
        return sum(1 << i for i in self.variables)

    def contains(self, mono) -> bool:
        return any(mono[i] for i in self.variables)

    def complement(self, nvars) -> tuple:
        return tuple(i for i in range(nvars) if i not in self.variables)

    def __str__(self):
        return "(" + ",".join(f"x{i + 1}" for i in self.variables) + ")"


def _bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _require_proper(M: MonomialIdeal):
    if M.is_unit():
        raise ValueError("unit ideal")
    if not M.gens:
        raise ValueError("zero ideal has no proper minimal primes")


def minimal_transversals(supports) -> list:
    """All inclusion-minimal hitting sets of the given bitmasks (Berge)."""
    trans = {0}
    for edge in sorted(set(supports), key=lambda s: (s.bit_count(), s)):
        nxt = set()
        for t in trans:
            if t & edge:
                nxt.add(t)
            else:
                for v in _bits(edge):
                    nxt.add(t | (1 << v))
        ordered = sorted(nxt, key=lambda s: s.bit_count())
        kept = []
        for t in ordered:
            if not any(k & t == k for k in kept):
                kept.append(t)
        trans = set(kept)
    return list(trans)


def _prime_sort_key(prime: CoordinatePrime):
    return (len(prime), prime.variables)


def minimal_primes(M: MonomialIdeal) -> list:
    """Minimal coordinate primes, sorted by (cardinality, lex)."""
    _require_proper(M)
    primes = [CoordinatePrime(tuple(_bits(t))) for t in minimal_transversals(M.supports())]
    return sorted(primes, key=_prime_sort_key)


def min_hitting_set(supports, nvars) -> int:
    """Size of a minimum hitting set, by branch and bound."""
    supports = sorted(set(supports), key=lambda s: s.bit_count())
    best = [nvars + 1]

    def packing_bound(unhit):
        # disjoint unhit supports each need their own variable
        used = 0
        count = 0
        for s in unhit:
            if not s & used:
                used |= s
                count += 1
        return count

    def search(chosen, size):
        unhit = [s for s in supports if not s & chosen]
        if not unhit:
            best[0] = min(best[0], size)
            return
        if size + packing_bound(unhit) >= best[0]:
            return
        for v in _bits(unhit[0]):
            search(chosen | (1 << v), size + 1)

    search(0, 0)
    return best[0]


def codim_monomial(M: MonomialIdeal) -> int:
    if M.is_unit():
        raise ValueError("unit ideal")
    return min_hitting_set(M.supports(), M.nvars)


def initial_ideal(ideal: Ideal, order: TermOrder = GREVLEX) -> MonomialIdeal:
    if not ideal.generators:
        return MonomialIdeal(ideal.nvars, ())
    return MonomialIdeal(ideal.nvars, tuple(initial_monomials(ideal, order)))


def codim_ideal(ideal: Ideal, order: TermOrder = GREVLEX) -> int:
    """Codimension of an ideal via the initial ideal of its Groebner basis."""
    M = initial_ideal(ideal, order)
    if M.is_unit():
        raise ValueError("unit ideal")
    return codim_monomial(M)


def dimension(ideal: Ideal, order: TermOrder = GREVLEX) -> int:
    return ideal.nvars - codim_ideal(ideal, order)


def localize(M: MonomialIdeal, prime: CoordinatePrime) -> MonomialIdeal:
    """Set the variables outside `prime` to 1 and keep the prime variables."""
    gens = [tuple(g[i] for i in prime.variables) for g in M.gens]
    return MonomialIdeal(len(prime), tuple(gens))


def standard_monomial_count(M: MonomialIdeal) -> int:
    """Number of monomials outside an Artinian monomial ideal."""
    n = M.nvars
    bounds = [None] * n
    for g in M.gens:
        nz = [i for i, e in enumerate(g) if e]
        if len(nz) == 1:
            i = nz[0]
            bounds[i] = g[i] if bounds[i] is None else min(bounds[i], g[i])
        elif not nz:
            return 0
    if any(b is None for b in bounds):
        raise ValueError("ideal is not Artinian")
    return sum(1 for e in product(*(range(b) for b in bounds)) if not M.contains(e))


def top_components(M: MonomialIdeal) -> list:
    """Minimal primes of minimal size with their multiplicities (localization lengths)."""
    primes = minimal_primes(M)
    c = len(primes[0])
    return [(P, standard_monomial_count(localize(M, P))) for P in primes if len(P) == c]


# ---------------------------------------------------------------------------
# Hilbert series (independent route to the degree)


@lru_cache(maxsize=None)
def _numerator(gens: tuple) -> tuple:
    """Coefficients of K(t) with HS(S/M) = K(t) / (1-t)^n."""
    if not gens:
        return (1,)
    masks = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    pivot = None
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            shared = masks[a] & masks[b]
            if shared:
                pivot = min(shared)
                break
        if pivot is not None:
            break
    if pivot is None:
        out = (1,)
        for g in gens:
            out = _poly_mul(out, _one_minus_t_pow(sum(g)))
        return out
    n = len(gens[0])
    x = tuple(1 if i == pivot else 0 for i in range(n))
    plus = minimalize([g for g in gens if not g[pivot]] + [x])
    colon = minimalize([tuple(max(e - 1, 0) if i == pivot else e for i, e in enumerate(g)) for g in gens])
    first = _numerator(plus)
    second = _poly_mul((0, 1), _numerator(colon))
    return _poly_add(first, second)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _poly_add(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _one_minus_t_pow(d):
    out = [0] * (d + 1)
    out[0] = 1
    out[d] -= 1
    return tuple(out)


def hilbert_numerator(M: MonomialIdeal) -> tuple:
    return _numerator(M.gens)


def hilbert_degree(M: MonomialIdeal) -> tuple:
    """(codim, degree) read off the Hilbert series numerator."""
    if M.is_unit():
        raise ValueError("unit ideal")
    K = list(hilbert_numerator(M))
    c = 0
    while sum(K) == 0:
        # divide by (1 - t)
        q = []
        acc = 0
        for a in K[:-1]:
            acc += a
            q.append(acc)
        K = q
        c += 1
    return c, sum(K)
