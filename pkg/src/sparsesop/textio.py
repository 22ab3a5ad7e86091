"""Text formats: ideal files, matrices of rationals, graphs.

Ideal grammar (whitespace-insensitive, `#` starts a comment):

    ring <m> mod <p>
    gens <expr>, <expr>, ...

Expressions use variables x1..xm, integer literals, + - * ^ and parentheses.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import Ideal, Polynomial, Ring


class ParseError(ValueError):
    def __init__(self, msg, line=None, col=None):
        where = f" at line {line}, column {col}" if line is not None else ""
        super().__init__(f"{msg}{where}")
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*(?:(#[^\n]*)|(\d+)|(x\d+)|([A-Za-z_]\w*)|(.))", re.S)


def _tokenize(text):
    tokens = []
    pos = 0
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def where(offset):
        line = 0
        for k, s in enumerate(line_starts):
            if s <= offset:
                line = k
        return line + 1, offset - line_starts[line] + 1

    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        pos = m.end()
        comment, num, var, word, sym = m.groups()
        if comment is not None:
            continue
        start = m.start(m.lastindex)
        line, col = where(start)
        if num is not None:
            tokens.append(("int", int(num), line, col))
        elif var is not None:
            tokens.append(("var", int(var[1:]), line, col))
        elif word is not None:
            tokens.append(("word", word, line, col))
        elif sym is not None and not sym.isspace():
            tokens.append(("sym", sym, line, col))
    line, col = where(len(text))
    tokens.append(("eof", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens, ring=None):
        self.tokens = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], tok[3])

    def expect(self, kind, value=None):
        tok = self.take()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] if tok[1] is not None else "end of input"
            self.fail(f"expected {want!r}, found {got!r}", tok)
        return tok

    def is_sym(self, s):
        tok = self.peek()
        return tok[0] == "sym" and tok[1] == s

    def expr(self):
        result = self.term()
        while self.is_sym("+") or self.is_sym("-"):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self):
        result = self.unary()
        while self.is_sym("*"):
            self.take()
            result = result * self.unary()
        return result

    def unary(self):
        if self.is_sym("-"):
            self.take()
            return -self.unary()
        if self.is_sym("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.is_sym("^"):
            self.take()
            exp = self.expect("int")
            return base ** exp[1]
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return self.ring.constant(tok[1])
        if tok[0] == "var":
            self.take()
            k = tok[1]
            if not 1 <= k <= self.ring.nvars:
                self.fail(f"unknown variable x{k}", tok)
            return self.ring.var(k - 1)
        if self.is_sym("("):
            self.take()
            e = self.expr()
            self.expect("sym", ")")
            return e
        got = tok[1] if tok[1] is not None else "end of input"
        self.fail(f"unexpected {got!r}", tok)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    p = _Parser(_tokenize(text), ring)
    f = p.expr()
    p.expect("eof")
    return f


def parse_ideal(text: str, field: int | None = None) -> Ideal:
    """Parse an ideal file. `field` overrides the declared modulus."""
    tokens = _tokenize(text)
    p = _Parser(tokens)
    p.expect("word", "ring")
    m = p.expect("int")[1]
    p.expect("word", "mod")
    mod_tok = p.expect("int")
    try:
        ring = Ring(m, field if field is not None else mod_tok[1])
    except ValueError as exc:
        raise ParseError(str(exc), mod_tok[2], mod_tok[3]) from None
    p.ring = ring
    p.expect("word", "gens")
    gens = []
    while True:
        tok = p.peek()
        g = p.expr()
        if not g:
            p.fail("zero generator", tok)
        gens.append(g)
        if p.is_sym(","):
            p.take()
            continue
        break
    p.expect("eof")
    return Ideal(ring, tuple(gens))


def format_ideal(ideal: Ideal) -> str:
    gens = ", ".join(str(g) for g in ideal.generators)
    return f"ring {ideal.nvars} mod {ideal.ring.p}\ngens {gens}\n"


def parse_matrix(text: str) -> list:
    """Rows of whitespace-separated rationals (e.g. `1 -2 3/4`)."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([Fraction(tok) for tok in line.split()])
        except (ValueError, ZeroDivisionError):
            raise ParseError("bad matrix entry", lineno, 1) from None
    if not rows:
        raise ParseError("empty matrix")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("ragged matrix rows")
    return rows


def format_matrix(rows) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in rows) + "\n"


def parse_graph(text: str):
    """First line `n`, then one `i j` edge per line (1-based)."""
    from .stable_sets import Graph

    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    numbered = [(k + 1, ln) for k, ln in enumerate(lines) if ln]
    if not numbered:
        raise ParseError("empty graph file")
    lineno, first = numbered[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError("expected vertex count", lineno, 1) from None
    edges = []
    for lineno, ln in numbered[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError("expected `i j`", lineno, 1)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("non-integer vertex", lineno, 1) from None
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise ParseError(f"bad edge {i} {j}", lineno, 1)
        edges.append((i - 1, j - 1))
    return Graph(n, edges)


def format_graph(graph) -> str:
    lines = [str(graph.n)] + [f"{i + 1} {j + 1}" for i, j in sorted(graph.edges)]
    return "\n".join(lines) + "\n"
