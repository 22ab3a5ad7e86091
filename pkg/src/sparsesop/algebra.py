"""Sparse polynomials over a prime field, term orders, division and Buchberger.

Monomials are tuples of exponents. Field scalars are plain ints in [0, p).
Variables are 0-based internally and printed as x1, x2, ...
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Sequence

from .config import DEFAULTS

Monomial = tuple


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_support(a):
    return frozenset(i for i, e in enumerate(a) if e)


def mono_str(a) -> str:
    parts = []
    for i, e in enumerate(a):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Ring:
    """The polynomial ring k[x1..xm] with k = Z/p."""

    nvars: int
    p: int = DEFAULTS.prime

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("ring needs at least one variable")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c: int) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, i: int) -> Polynomial:
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> tuple:
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, exps, coeff: int = 1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        return Polynomial(self, {exps: coeff})

    def parse(self, text: str) -> Polynomial:
        from .textio import parse_polynomial

        return parse_polynomial(text, self)

    def random_scalar(self, rng, nonzero: bool = True) -> int:
        return rng.randrange(1 if nonzero else 0, self.p)


class Polynomial:
    """Immutable sparse polynomial; `terms` maps exponent tuples to residues."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict, reduced: bool = False):
        self.ring = ring
        if reduced:
            self.terms = terms
        else:
            p = ring.p
            self.terms = {m: c % p for m, c in terms.items() if c % p}
        self._hash = None

    # -- basic protocol --------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        p = self.ring.p
        out = []
        for m in sorted(self.terms, key=GREVLEX.key, reverse=True):
            c = self.terms[m]
            neg = c > p // 2
            a = p - c if neg else c
            body = mono_str(m)
            if body == "1":
                s = str(a)
            elif a == 1:
                s = body
            else:
                s = f"{a}*{body}"
            if not out:
                out.append(f"-{s}" if neg else s)
            else:
                out.append(f"- {s}" if neg else f"+ {s}")
        return " ".join(out)

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        p = self.ring.p
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = (t.get(m, 0) + c) % p
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Polynomial(self.ring, t, reduced=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()}, reduced=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        p = self.ring.p
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                t[m] = (t.get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, {m: c for m, c in t.items() if c}, reduced=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> Polynomial:
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: v * c % p for m, v in self.terms.items()}, reduced=True)

    def mul_term(self, mono, c: int) -> Polynomial:
        p = self.ring.p
        return Polynomial(
            self.ring, {mono_mul(m, mono): v * c % p for m, v in self.terms.items()}, reduced=True
        )

    # -- inspection ------------------------------------------------------
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def variables(self) -> frozenset:
        out = set()
        for m in self.terms:
            out |= mono_support(m)
        return frozenset(out)

    def evaluate(self, point: Sequence[int]) -> int:
        p = self.ring.p
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * pow(x, e, p) % p
            total += v
        return total % p

    def monic(self, order: TermOrder) -> Polynomial:
        _, c = initial_term(self, order)
        return self.scale(pow(c, -1, self.ring.p))


@dataclass(frozen=True)
class TermOrder:
    """A monomial order: lex, grevlex, or a weight vector refined by a tiebreak.

    `perm` lists 0-based variable indices from most to least significant;
    None means x1 > x2 > ... > xm.
    """

    kind: str = "grevlex"
    perm: tuple | None = None
    weight: tuple | None = None
    tiebreak: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "weight"):
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.kind == "weight" and self.weight is None:
            raise ValueError("weight order needs a weight vector")
        if self.tiebreak not in ("lex", "grevlex"):
            raise ValueError(f"unknown tiebreak {self.tiebreak!r}")
        if self.perm is not None and sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm must be a permutation of 0..m-1")

    @classmethod
    def lex(cls, perm=None):
        return cls("lex", tuple(perm) if perm is not None else None)

    @classmethod
    def grevlex(cls, perm=None):
        return cls("grevlex", tuple(perm) if perm is not None else None)

    @classmethod
    def weighted(cls, weight, tiebreak="grevlex", perm=None):
        return cls("weight", tuple(perm) if perm is not None else None, tuple(weight), tiebreak)

    @cached_property
    def key(self) -> Callable:
        """Sort key: a > b in this order iff key(a) > key(b)."""
        perm = self.perm
        base = self.kind if self.kind != "weight" else self.tiebreak
        if base == "lex":
            if perm is None:
                inner = tuple
            else:
                def inner(m):
                    return tuple(m[i] for i in perm)
        else:
            if perm is None:
                def inner(m):
                    return (sum(m),) + tuple(-e for e in reversed(m))
            else:
                rev = tuple(reversed(perm))

                def inner(m):
                    return (sum(m),) + tuple(-m[i] for i in rev)
        if self.kind != "weight":
            return inner
        w = self.weight

        def weighted(m):
            return (sum(a * b for a, b in zip(w, m)),) + inner(m)

        return weighted

    def greater(self, a, b) -> bool:
        return self.key(a) > self.key(b)

    def representing_weight(self, nvars: int, max_degree: int) -> tuple:
        """A positive integer weight that agrees with this order on all pairs of
        monomials of equal degree <= max_degree."""
        perm = self.perm if self.perm is not None else tuple(range(nvars))
        base = max_degree + 1
        inner = [0] * nvars
        kind = self.kind if self.kind != "weight" else self.tiebreak
        for rank, i in enumerate(perm):
            if kind == "lex":
                inner[i] = base ** (nvars - 1 - rank)
            else:
                inner[i] = -(base ** rank)
        if self.kind == "weight":
            spread = 2 * max_degree * max(abs(v) for v in inner) + 1
            inner = [w * spread + v for w, v in zip(self.weight, inner)]
        shift = 1 - min(inner)
        return tuple(v + shift for v in inner)

    def describe(self) -> str:
        s = self.kind if self.kind != "weight" else "weight:" + ",".join(map(str, self.weight))
        if self.perm is not None:
            s += " perm=" + ",".join(str(i + 1) for i in self.perm)
        return s


LEX = TermOrder.lex()
GREVLEX = TermOrder.grevlex()


@dataclass(frozen=True)
class Ideal:
    ring: Ring
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if not isinstance(g, Polynomial) or g.ring != self.ring:
                raise ValueError("generator not in the ideal's ring")
            if not g:
                raise ValueError("zero generator")
        object.__setattr__(self, "generators", gens)

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def __add__(self, other):
        if isinstance(other, Ideal):
            extra = other.generators
        else:
            extra = tuple(other)
        return Ideal(self.ring, self.generators + tuple(g for g in extra if g))

    def __str__(self):
        from .textio import format_ideal

        return format_ideal(self)


# ---------------------------------------------------------------------------
# initial terms and division


def initial_term(f: Polynomial, order: TermOrder):
    """The order-greatest (monomial, coefficient) of f."""
    if not f.terms:
        raise ValueError("zero has no initial term")
    m = max(f.terms, key=order.key)
    return m, f.terms[m]


def leading_monomial(f: Polynomial, order: TermOrder):
    return initial_term(f, order)[0]


def _neg_key(order):
    key = order.key

    def nk(m):
        return tuple(-k for k in key(m))

    return nk


def divide(f: Polynomial, G: Sequence[Polynomial], order: TermOrder, with_quotients=False):
    """Multivariate division. Returns the remainder, or (quotients, remainder)."""
    ring = f.ring
    p = ring.p
    nk = _neg_key(order)
    divisors = []
    for g in G:
        if not g:
            raise ValueError("zero divisor in division")
        lm, lc = initial_term(g, order)
        divisors.append((lm, pow(lc, -1, p), g.terms))
    work = dict(f.terms)
    heap = [(nk(m), m) for m in work]
    heapq.heapify(heap)
    rem = {}
    quotients = [dict() for _ in G] if with_quotients else None
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for idx, (lm, inv, gterms) in enumerate(divisors):
            if all(a <= b for a, b in zip(lm, m)):
                q = tuple(a - b for a, b in zip(m, lm))
                qc = c * inv % p
                if with_quotients:
                    quotients[idx][q] = (quotients[idx].get(q, 0) + qc) % p
                for gm, gc in gterms.items():
                    if gm == lm:
                        continue
                    t = tuple(a + b for a, b in zip(gm, q))
                    old = work.get(t)
                    v = ((old or 0) - qc * gc) % p
                    if v:
                        work[t] = v
                        if old is None:
                            heapq.heappush(heap, (nk(t), t))
                    elif old is not None:
                        del work[t]
                break
        else:
            rem[m] = c
    r = Polynomial(ring, rem, reduced=True)
    if with_quotients:
        return [Polynomial(ring, q) for q in quotients], r
    return r


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Fully reduced remainder of f modulo G."""
    return divide(f, G, order)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    p = f.ring.p
    mf, cf = initial_term(f, order)
    mg, cg = initial_term(g, order)
    lcm = mono_lcm(mf, mg)
    a = f.mul_term(mono_div(lcm, mf), pow(cf, -1, p))
    b = g.mul_term(mono_div(lcm, mg), pow(cg, -1, p))
    return a - b


# ---------------------------------------------------------------------------
# Buchberger


def buchberger(
    gens: Iterable[Polynomial],
    order: TermOrder,
    stop: Callable[[list], bool] | None = None,
) -> list:
    """Complete `gens` toward a Groebner basis.

    Pairs are processed in (lcm degree, pair index) order. When `stop` is
    given it is called with the list of current leading monomials after the
    start and after every new basis element; the partial basis is returned
    (input generators first, then remainders in insertion order) as soon as it
    holds. If `stop` never fires the reduced Groebner basis is returned.
    """
    G = [g for g in gens if g]
    if not G:
        raise ValueError("no non-zero generators")
    leads = [leading_monomial(g, order) for g in G]
    if stop is not None and stop(list(leads)):
        return list(G)

    heap: list = []
    pending: set = set()

    def push(i, j):
        lcm = mono_lcm(leads[i], leads[j])
        heapq.heappush(heap, (sum(lcm), i, j))
        pending.add((i, j))

    for j in range(len(G)):
        for i in range(j):
            push(i, j)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        lcm = mono_lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        if _chain_criterion(i, j, lcm, leads, pending):
            continue
        h = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if not h:
            continue
        h = h.monic(order)
        G.append(h)
        leads.append(leading_monomial(h, order))
        n = len(G) - 1
        for k in range(n):
            push(k, n)
        if stop is not None and stop(list(leads)):
            return list(G)
        if h.is_constant():
            break
    return reduce_basis(G, order)


def _chain_criterion(i, j, lcm, leads, pending) -> bool:
    for k, lk in enumerate(leads):
        if k == i or k == j:
            continue
        if not mono_divides(lk, lcm):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def reduce_basis(G: Sequence[Polynomial], order: TermOrder) -> list:
    """Reduced Groebner basis from any Groebner basis, sorted by leading monomial."""
    G = [g for g in G if g]
    for g in G:
        if g.is_constant():
            return [g.ring.one()]
    key = order.key
    items = sorted(((leading_monomial(g, order), g) for g in G), key=lambda t: key(t[0]))
    minimal = []
    for lm, g in items:
        if any(mono_divides(other, lm) for other, _ in minimal):
            continue
        minimal.append((lm, g))
    out = []
    polys = [g for _, g in minimal]
    for idx, g in enumerate(polys):
        others = polys[:idx] + polys[idx + 1:]
        r = normal_form(g, others, order) if others else g
        out.append(r.monic(order))
    return sorted(out, key=lambda g: key(leading_monomial(g, order)))


@lru_cache(maxsize=4096)
def _cached_basis(ring, gens, order):
    return tuple(buchberger(list(gens), order))


def groebner_basis(ideal: Ideal, order: TermOrder = GREVLEX) -> tuple:
    """Reduced Groebner basis of an ideal (cached)."""
    return _cached_basis(ideal.ring, ideal.generators, order)


def initial_monomials(ideal: Ideal, order: TermOrder = GREVLEX) -> list:
    return [leading_monomial(g, order) for g in groebner_basis(ideal, order)]


def is_groebner_basis(G: Sequence[Polynomial], order: TermOrder) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    G = list(G)
    for j in range(len(G)):
        for i in range(j):
            if normal_form(s_polynomial(G[i], G[j], order), G, order):
                return False
    return True


def contains(ideal: Ideal, f: Polynomial, order: TermOrder = GREVLEX) -> bool:
    return not normal_form(f, groebner_basis(ideal, order), order)


def extend_ring(f: Polynomial, ring: Ring, shift: int = 0) -> Polynomial:
    """Embed f into a ring with more variables, placing x_i at x_{i+shift}."""
    pad_front = (0,) * shift
    pad_back = (0,) * (ring.nvars - f.ring.nvars - shift)
    return Polynomial(ring, {pad_front + m + pad_back: c for m, c in f.terms.items()}, reduced=True)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """I cap J by eliminating t from t*I + (1-t)*J."""
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    m = a.nvars
    big = Ring(m + 1, a.ring.p)
    t = big.var(0)
    gens = [t * extend_ring(g, big, 1) for g in a.generators]
    gens += [(1 - t) * extend_ring(g, big, 1) for g in b.generators]
    elim = TermOrder.weighted((1,) + (0,) * m, tiebreak="grevlex")
    G = buchberger(gens, elim)
    out = []
    for g in G:
        if any(mono[0] for mono in g.terms):
            continue
        out.append(Polynomial(a.ring, {mono[1:]: c for mono, c in g.terms.items()}, reduced=True))
    return Ideal(a.ring, tuple(out))


def random_combination(polys: Sequence[Polynomial], rng, first_one: bool = True):
    """Sum of r_f * f with non-zero random r_f; the first coefficient is 1 when
    `first_one` (scaling does not change the ideal)."""
    ring = polys[0].ring
    coeffs = []
    total = ring.zero()
    for k, f in enumerate(polys):
        r = 1 if (first_one and k == 0) else ring.random_scalar(rng)
        coeffs.append(r)
        total = total + f.scale(r)
    return total, tuple(coeffs)
