from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qaff.expr import NAMES, BinOp, ExprSyntaxError, Neg, Num, Pow, Sym, parse, to_string

atoms = st.one_of(
    st.sampled_from(NAMES).map(Sym),
    st.integers(0, 50).map(lambda n: Num(Fraction(n))),
)


def _extend(children):
    return st.one_of(
        st.tuples(st.sampled_from("+-*/"), children, children).map(lambda t: BinOp(*t)),
        children.map(Neg),
    )


powers = st.one_of(atoms, st.tuples(atoms, st.integers(-5, 5)).map(lambda t: Pow(*t)))
trees = st.recursive(powers, _extend, max_leaves=12)


@given(trees)
def test_round_trip(node):
    assert parse(to_string(node)) == node


def test_product_node():
    assert parse("xi*U^2") == BinOp("*", Sym("xi"), Pow(Sym("U"), 2))


def test_scalar_scaled_xis():
    node = parse("(1-mu^2)*xis")
    assert node == BinOp("*", BinOp("-", Num(Fraction(1)), Pow(Sym("mu"), 2)), Sym("xis"))


def test_syntax_error_offset():
    with pytest.raises(ExprSyntaxError) as e:
        parse("xi**U")
    assert e.value.offset == 3
    assert "name" in e.value.expected


def test_precedence():
    assert parse("a+g*gs^2") == BinOp("+", Sym("a"), BinOp("*", Sym("g"), Pow(Sym("gs"), 2)))
    assert parse("-U^2") == Neg(Pow(Sym("U"), 2))


@pytest.mark.parametrize("text", ["", "(xi", "xi^a", "2 3", "xi % 2", "U^"])
def test_malformed(text):
    with pytest.raises(ExprSyntaxError):
        parse(text)
