"""Bracket polynomials and Chow forms.

A bracket [i1 ... id] is the d x d minor on columns i1 < ... < id of a d x m
coefficient matrix (c_ij). Brackets are stored 0-based and printed 1-based.
Expansion into monomials in the c_ij is exact over the integers; monomials are
packed into ints, 8 bits per variable c_ij (index i*m + j).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .algebra import Polynomial
from .config import DEFAULTS
from .linalg import det
from .monomial_ideals import MonomialIdeal, codim_monomial, minimal_primes, top_components
from .noether import NormalizationCandidate

WIDTH = 8
_MASK = (1 << WIDTH) - 1


def bracket(*indices) -> tuple:
    """A bracket from 1-based indices, as stored (0-based, sorted)."""
    idx = tuple(i - 1 for i in indices)
    if len(set(idx)) != len(idx) or min(idx) < 0:
        raise ValueError(f"bad bracket {indices}")
    return tuple(sorted(idx))


def bracket_str(b) -> str:
    return "[" + " ".join(str(i + 1) for i in b) + "]"


@dataclass(frozen=True)
class BracketPolynomial:
    """Integer combination of bracket monomials; terms are (sorted bracket
    tuple, coefficient) pairs in canonical order."""

    d: int
    m: int
    terms: tuple

    @classmethod
    def from_dict(cls, d, m, terms: dict):
        for brs in terms:
            for b in brs:
                if len(b) != d or list(b) != sorted(set(b)) or b[-1] >= m:
                    raise ValueError(f"bracket {bracket_str(b)} does not fit d={d}, m={m}")
        clean = sorted((tuple(sorted(k)), v) for k, v in terms.items() if v)
        merged: dict = {}
        for k, v in clean:
            merged[k] = merged.get(k, 0) + v
        return cls(d, m, tuple(sorted((k, v) for k, v in merged.items() if v)))

    @classmethod
    def monomial(cls, d, m, brackets, coeff=1):
        return cls.from_dict(d, m, {tuple(sorted(brackets)): coeff})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def _check(self, other):
        if (self.d, self.m) != (other.d, other.m):
            raise ValueError("bracket polynomials of different shapes")

    def __add__(self, other):
        self._check(other)
        t = self.as_dict()
        for k, v in other.terms:
            t[k] = t.get(k, 0) + v
        return BracketPolynomial.from_dict(self.d, self.m, t)

    def __neg__(self):
        return BracketPolynomial(self.d, self.m, tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BracketPolynomial.from_dict(self.d, self.m, {k: v * other for k, v in self.terms})
        self._check(other)
        t: dict = {}
        for k1, v1 in self.terms:
            for k2, v2 in other.terms:
                k = tuple(sorted(k1 + k2))
                t[k] = t.get(k, 0) + v1 * v2
        return BracketPolynomial.from_dict(self.d, self.m, t)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = BracketPolynomial.monomial(self.d, self.m, (), 1)
        for _ in range(n):
            out = out * self
        return out

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def factors(self) -> tuple:
        """Brackets of a bracket monomial (with repetition)."""
        if not self.is_monomial():
            raise ValueError("not a bracket monomial")
        return self.terms[0][0]

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k, v in self.terms:
            body = _format_bracket_monomial(k)
            a = abs(v)
            s = body if a == 1 and body else (f"{a}*{body}" if body else str(a))
            if not out:
                out.append(f"-{s}" if v < 0 else s)
            else:
                out.append(f"- {s}" if v < 0 else f"+ {s}")
        return " ".join(out)


def _format_bracket_monomial(brs) -> str:
    parts = []
    i = 0
    while i < len(brs):
        j = i
        while j < len(brs) and brs[j] == brs[i]:
            j += 1
        power = j - i
        parts.append(bracket_str(brs[i]) + (f"^{power}" if power > 1 else ""))
        i = j
    return "".join(parts)


_BTOKEN = re.compile(r"\s*(?:(\d+)|\[([^\]]*)\]|([-+*^()]))")


def parse_brackets(text: str, m: int | None = None) -> BracketPolynomial:
    """Parse e.g. `[1 2 6][1 5 6] - 3*[1 2 5]^2` or `([12][34] - [13][24])^2`.

    Indices inside a bracket are whitespace-separated; a bracket without
    whitespace is read digit by digit. Juxtaposition multiplies.
    """
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        mt = _BTOKEN.match(text, pos)
        if mt is None:
            raise ValueError(f"cannot parse bracket polynomial at offset {pos}")
        pos = mt.end()
        num, inner, sym = mt.groups()
        if num is not None:
            tokens.append(("int", int(num)))
        elif inner is not None:
            inner = inner.strip()
            parts = inner.split() if re.search(r"\s", inner) else list(inner)
            tokens.append(("br", bracket(*(int(t) for t in parts))))
        else:
            tokens.append(("sym", sym))
    sizes = {len(v) for k, v in tokens if k == "br"}
    if not sizes:
        raise ValueError("no brackets found")
    if len(sizes) > 1:
        raise ValueError("brackets of different sizes")
    d = sizes.pop()
    top = max(v[-1] + 1 for k, v in tokens if k == "br")
    m = m if m is not None else top
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        i += 1
        return tokens[i - 1]

    def const(c):
        return BracketPolynomial.monomial(d, m, (), c)

    def expr():
        sign = 1
        if peek() == ("sym", "-"):
            take()
            sign = -1
        elif peek() == ("sym", "+"):
            take()
        out = term() * sign
        while peek() in (("sym", "+"), ("sym", "-")):
            op = take()[1]
            rhs = term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term():
        out = power()
        while True:
            if peek() == ("sym", "*"):
                take()
                out = out * power()
            elif peek()[0] in ("br", "int") or peek() == ("sym", "("):
                out = out * power()
            else:
                return out

    def power():
        base = atom()
        if peek() == ("sym", "^"):
            take()
            kind, n = take()
            if kind != "int":
                raise ValueError("exponent must be an integer")
            return base ** n
        return base

    def atom():
        kind, val = take()
        if kind == "int":
            return const(val)
        if kind == "br":
            return BracketPolynomial.monomial(d, m, (val,))
        if (kind, val) == ("sym", "("):
            out = expr()
            if take() != ("sym", ")"):
                raise ValueError("unbalanced parenthesis")
            return out
        raise ValueError(f"unexpected token {val!r}")

    out = expr()
    if peek()[0] != "end":
        raise ValueError(f"unexpected token {peek()[1]!r}")
    return out


# ---------------------------------------------------------------------------
# Chow forms


def chow_form_monomial(M: MonomialIdeal, d: int | None = None) -> BracketPolynomial:
    """Product over top-dimensional components of [complement]^multiplicity."""
    comps = top_components(M)
    top = M.nvars - codim_monomial(M)
    if d is not None and d != top:
        raise ValueError(f"requested d={d} but the top components have dimension {top}")
    if top < 1:
        raise ValueError("ideal has no projective points")
    brs = []
    for prime, mult in comps:
        brs.extend([prime.complement(M.nvars)] * mult)
    return BracketPolynomial.monomial(top, M.nvars, brs)


def _symmetric(c, p):
    return c - p if c > p // 2 else c


def chow_form_hypersurface(F: Polynomial) -> BracketPolynomial:
    """Substitute x_j -> (-1)^(j-1) [1..m without j] into F."""
    if not F or not F.is_homogeneous() or F.degree() < 1:
        raise ValueError("need a non-constant homogeneous polynomial")
    m = F.ring.nvars
    d = m - 1
    omit = [tuple(i for i in range(m) if i != j) for j in range(m)]
    terms: dict = {}
    for mono, c in F.terms.items():
        coeff = _symmetric(c, F.ring.p)
        brs = []
        for j, e in enumerate(mono):
            if e:
                if j % 2 and e % 2:
                    coeff = -coeff
                brs.extend([omit[j]] * e)
        key = tuple(sorted(brs))
        terms[key] = terms.get(key, 0) + coeff
    return BracketPolynomial.from_dict(d, m, terms)


# ---------------------------------------------------------------------------
# Expansion


@dataclass(frozen=True)
class ExpandedForm:
    """Collected polynomial in V = {c_ij}; keys are packed exponent vectors."""

    d: int
    m: int
    terms: dict

    def __len__(self):
        return len(self.terms)

    @property
    def nvars(self) -> int:
        return self.d * self.m

    def exponents(self, key) -> tuple:
        return tuple((key >> (WIDTH * v)) & _MASK for v in range(self.nvars))

    def support(self, key) -> int:
        mask = 0
        v = 0
        while key:
            if key & _MASK:
                mask |= 1 << v
            key >>= WIDTH
            v += 1
        return mask

    def supports(self) -> set:
        return {self.support(k) for k in self.terms}

    def evaluate(self, matrix, p) -> int:
        flat = [x for row in matrix for x in row]
        total = 0
        for key, c in self.terms.items():
            v = c % p
            for idx, e in enumerate(self.exponents(key)):
                if e:
                    v = v * pow(flat[idx], e, p) % p
                    if not v:
                        break
            total += v
        return total % p

    def variable_name(self, v) -> str:
        i, j = divmod(v, self.m)
        return f"c{i + 1}{j + 1}" if self.m < 10 and self.d < 10 else f"c{i + 1}_{j + 1}"


def _var_key(i, j, m):
    return 1 << (WIDTH * (i * m + j))


@lru_cache(maxsize=None)
def _expand_bracket(b, d, m) -> tuple:
    out: dict = {}
    for perm in permutations(range(d)):
        inversions = sum(1 for x in range(d) for y in range(x + 1, d) if perm[x] > perm[y])
        key = sum(_var_key(i, b[perm[i]], m) for i in range(d))
        out[key] = out.get(key, 0) + (-1 if inversions % 2 else 1)
    return tuple(out.items())


def _multiply(a: dict, b) -> dict:
    out: dict = {}
    for k1, v1 in a.items():
        for k2, v2 in b:
            k = k1 + k2
            v = out.get(k, 0) + v1 * v2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def expand(B: BracketPolynomial, limit: int = DEFAULTS.expand_limit) -> ExpandedForm:
    """Expand brackets into signed permutation sums and collect."""
    return _expand_cached(B, limit)


@lru_cache(maxsize=64)
def _expand_cached(B, limit):
    if B.d * B.m > limit:
        raise ValueError(
            f"expansion of a {B.d}x{B.m} bracket polynomial exceeds the limit {limit}; "
            "use complexity-only mode"
        )
    total: dict = {}
    for brs, coeff in B.terms:
        if len(brs) > _MASK:
            raise ValueError("bracket degree too large for packed exponents")
        acc = {0: coeff}
        for b in brs:
            acc = _multiply(acc, _expand_bracket(b, B.d, B.m))
        for k, v in acc.items():
            s = total.get(k, 0) + v
            if s:
                total[k] = s
            else:
                total.pop(k, None)
    return ExpandedForm(B.d, B.m, total)


# ---------------------------------------------------------------------------
# Delta complexes and Noether complexity


def minimal_supports(E: ExpandedForm) -> list:
    """Inclusion-minimal monomial supports, as bitmasks over V."""
    kept = []
    for s in sorted(E.supports(), key=lambda s: (s.bit_count(), s)):
        if not any(k & s == k for k in kept):
            kept.append(s)
    return kept


@dataclass(frozen=True)
class SimplicialComplexOnV:
    d: int
    m: int
    maximal_faces: tuple

    @property
    def full(self) -> int:
        return (1 << (self.d * self.m)) - 1

    def has_face(self, face: int) -> bool:
        return any(face & f == face for f in self.maximal_faces)

    def is_subcomplex_of(self, other: SimplicialComplexOnV) -> bool:
        return all(other.has_face(f) for f in self.maximal_faces)


def delta_complex(E: ExpandedForm) -> SimplicialComplexOnV:
    """Maximal faces are complements of the minimal monomial supports."""
    if not E.terms:
        raise ValueError("zero form has no non-roots")
    full = (1 << E.nvars) - 1
    faces = tuple(sorted(full & ~s for s in minimal_supports(E)))
    return SimplicialComplexOnV(E.d, E.m, faces)


def noether_complexity(E: ExpandedForm) -> int:
    """Least number of variables c_ij in any monomial of the expanded form."""
    if not E.terms:
        raise ValueError("zero form")
    return min(s.bit_count() for s in E.supports())


def _support_positions(mask, m):
    return tuple(divmod(v, m) for v in range(mask.bit_length()) if mask >> v & 1)


def evaluate(B: BracketPolynomial, cand: NormalizationCandidate) -> int:
    """Value of B with each bracket replaced by the matching minor of cand."""
    if (cand.d, cand.m) != (B.d, B.m):
        raise ValueError(f"candidate is {cand.d}x{cand.m}, bracket polynomial needs {B.d}x{B.m}")
    p = cand.p
    minors: dict = {}
    total = 0
    for brs, coeff in B.terms:
        v = coeff % p
        for b in brs:
            if b not in minors:
                minors[b] = det([[row[j] for j in b] for row in cand.matrix], p)
            v = v * minors[b] % p
            if not v:
                break
        total += v
    return total % p


def sparsest_normalization(
    M: MonomialIdeal,
    seed: int = 0,
    p: int = DEFAULTS.prime,
    retries: int = DEFAULTS.retries,
) -> NormalizationCandidate:
    """Noether normalization whose support is a minimal monomial support of the
    expanded Chow form, i.e. a maximal face of its Delta complex."""
    if len({len(P) for P in minimal_primes(M)}) > 1:
        raise ValueError("ideal is mixed; the Chow form only sees its top components")
    R = chow_form_monomial(M)
    E = expand(R)
    best = min(minimal_supports(E), key=lambda s: (s.bit_count(), _support_positions(s, E.m)))
    return realize_support(R, best, seed, p, retries)


def realize_support(R: BracketPolynomial, mask: int, seed: int, p: int, retries: int) -> NormalizationCandidate:
    """Random non-zero entries on the positions of `mask`, checked to be a non-root."""
    rng = random.Random(seed)
    positions = _support_positions(mask, R.m)
    for _ in range(retries):
        mat = [[0] * R.m for _ in range(R.d)]
        for i, j in positions:
            mat[i][j] = rng.randrange(1, p)
        cand = NormalizationCandidate(tuple(tuple(r) for r in mat), p)
        if evaluate(R, cand):
            return cand
    raise RuntimeError(f"no non-root on support after {retries} draws")


def indicator_matrix(cols, m, p=DEFAULTS.prime) -> NormalizationCandidate:
    rows = []
    for c in cols:
        row = [0] * m
        row[c] = 1
        rows.append(tuple(row))
    return NormalizationCandidate(tuple(rows), p)


def coordinate_normalization_test(M: MonomialIdeal, cols, p: int = DEFAULTS.prime) -> bool:
    """Do the coordinates x_j, j in cols (0-based), give a Noether normalization?"""
    R = chow_form_monomial(M)
    cols = tuple(sorted(cols))
    if len(cols) != R.d:
        raise ValueError(f"need {R.d} columns")
    return evaluate(R, indicator_matrix(cols, R.m, p)) != 0


def coordinate_normalizations(M: MonomialIdeal, p: int = DEFAULTS.prime) -> list:
    R = chow_form_monomial(M)
    return [cols for cols in combinations(range(R.m), R.d) if evaluate(R, indicator_matrix(cols, R.m, p))]
