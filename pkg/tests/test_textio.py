from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sparsesop.algebra import Ideal, Ring
from sparsesop.chow import BracketPolynomial, bracket, parse_brackets
from sparsesop.stable_sets import Graph
from sparsesop.textio import (
    ParseError,
    format_graph,
    format_ideal,
    format_matrix,
    parse_graph,
    parse_ideal,
    parse_matrix,
)

from conftest import nonzero_polynomials


def test_example_11_file():
    J = parse_ideal("ring 4 mod 32003\ngens x1*x2, x2*x3, x4^2, x1*x3")
    R = J.ring
    assert (R.nvars, R.p) == (4, 32003)
    assert J.generators == tuple(R.parse(s) for s in ("x1*x2", "x2*x3", "x4^2", "x1*x3"))


def test_principal_ideal():
    J = parse_ideal("ring 1 mod 7\ngens x1")
    assert J.generators == (J.ring.var(0),)


def test_component_of_example_29():
    J = parse_ideal("ring 6 mod 32003\ngens x2*x5 - x1*x6, x3, x4")
    assert len(J.generators) == 3
    assert J.generators[0].terms == {(0, 1, 0, 0, 1, 0): 1, (1, 0, 0, 0, 0, 1): 32002}


def test_parentheses_and_whitespace():
    a = parse_ideal("ring 3 mod 101 gens (x1 + 1)*x2 ,x1^2")
    b = parse_ideal("ring 3 mod 101\ngens x1*x2+x2, x1*x1")
    assert a.generators == b.generators


def test_field_override():
    J = parse_ideal("ring 2 mod 32003\ngens 9*x1 + x2", field=7)
    assert J.ring.p == 7
    assert J.generators[0] == J.ring.parse("2*x1 + x2")


@pytest.mark.parametrize(
    "text, message, line, col",
    [
        ("ring 2 mod 7\ngens x3", "unknown variable x3", 2, 6),
        ("ring 2 mod 7\ngens x1 - x1", "zero generator", 2, 6),
        ("ring 2 mod 7\ngens x1 +", None, 2, 10),
        ("ring 2 mod 8\ngens x1", None, 1, 12),
        ("rung 2 mod 7\ngens x1", None, 1, 1),
    ],
)
def test_errors_carry_position(text, message, line, col):
    with pytest.raises(ParseError) as err:
        parse_ideal(text)
    if message:
        assert message in str(err.value)
    assert (err.value.line, err.value.col) == (line, col)


R3 = Ring(3, 32003)


@given(st.lists(nonzero_polynomials(R3), min_size=1, max_size=4))
def test_round_trip(gens):
    J = Ideal(R3, tuple(gens))
    again = parse_ideal(format_ideal(J))
    assert again.generators == J.generators and again.ring == J.ring


def test_matrix_round_trip():
    rows = parse_matrix("1 -2 3/4\n# comment\n0 5 -1/3\n")
    assert rows == [[1, -2, Fraction(3, 4)], [0, 5, Fraction(-1, 3)]]
    assert parse_matrix(format_matrix(rows)) == rows


@pytest.mark.parametrize("text", ["1 2\n3", "1 x", ""])
def test_bad_matrices(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_graph_round_trip():
    G = parse_graph("5\n1 2\n2 3\n3 4\n4 5\n5 1\n")
    assert G.n == 5 and (0, 4) in G.edges
    assert parse_graph(format_graph(G)) == G


@pytest.mark.parametrize("text", ["3\n1 1", "3\n1 4", "x", "3\n1"])
def test_bad_graphs(text):
    with pytest.raises(ValueError):
        parse_graph(text)


def test_graph_type_normalizes_edges():
    assert Graph(3, [(2, 0)]).edges == frozenset({(0, 2)})


def test_bracket_text():
    B = parse_brackets("+3*[1 2 6][1 5 6] - [1 2 6]^2")
    assert B.as_dict() == {(bracket(1, 2, 6), bracket(1, 5, 6)): 3, (bracket(1, 2, 6), bracket(1, 2, 6)): -1}
    assert parse_brackets("[126][156]") == parse_brackets("[1 2 6] * [1 5 6]")


def test_bracket_products_of_sums():
    B = parse_brackets("([12] - [13])([12] + [13])")
    assert B == parse_brackets("[12]^2 - [13]^2")


def test_bracket_text_round_trip():
    B = parse_brackets("-[1 2]^2 - [1 3][2 3] + 4*[1 3]")
    assert parse_brackets(str(B), B.m) == B
    assert isinstance(B, BracketPolynomial)


@pytest.mark.parametrize("text", ["[1 2][1 2 3]", "[1 2] +", "([1 2]", "3"])
def test_bad_bracket_text(text):
    with pytest.raises(ValueError):
        parse_brackets(text)
