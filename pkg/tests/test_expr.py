"""Expression grammar: parsing, rendering, weight checking, evaluation."""

from fractions import Fraction

import pytest

from conftest import series_coeffs
from cuspbase.catalog import delta_weight, evaluate, get_catalog
from cuspbase.errors import ExprSyntaxError, UnknownAtom, WeightMismatch
from cuspbase.expr import (
    Add, Const, Delta, Eis, Eta, Gen, Lit, Mul, Pow, Subst, W2, Wpa,
    expr_weight, render, sub,
)
from cuspbase.parse import parse_expr


def test_parse_atoms():
    assert parse_expr("eta(2:16,1:-8)") == Eta(((2, 16), (1, -8)))
    assert parse_expr("E[2,4,0]") == Gen(2, 4, 0)
    assert parse_expr("E4(3)") == Eis(4, 3)
    assert parse_expr("E6(1)") == Eis(6, 1)
    assert parse_expr("Ew2(6)") == W2(6)
    assert parse_expr("wpa(2,0,5)") == Wpa(2, 0, 5)
    assert parse_expr("delta(7)") == Delta(7)
    assert parse_expr("qser(1: 1,-8,12)") == Lit(1, (Fraction(1), Fraction(-8),
                                                     Fraction(12)))
    assert parse_expr("3/4") == Const(Fraction(3, 4))


def test_parse_structure():
    tree = parse_expr("E[2,4,0]*E[2,4,1]*(E[2,4,0]+16*E[2,4,1])")
    e0, e1 = Gen(2, 4, 0), Gen(2, 4, 1)
    assert tree == Mul((e0, e1, Add((e0, Mul((Const(Fraction(16)), e1))))))
    diff = parse_expr("wpa(2,0,5)-wpa(4,0,5)")
    assert diff == Add((Wpa(2, 0, 5),
                        Mul((Const(Fraction(-1)), Wpa(4, 0, 5)))))
    assert parse_expr("delta(4)@2") == Subst(Delta(4), 2)
    assert parse_expr("E[2,7,0]^3") == Pow(Gen(2, 7, 0), 3)


def test_round_trip():
    for text in (
        "eta(2:16,1:-8)",
        "E[2,4,0]*E[2,4,1]*(E[2,4,0]+16*E[2,4,1])",
        "wpa(2,0,5)-wpa(4,0,5)",
        "delta(4)@2",
        "1/16*(wpa(2,0,5)-wpa(4,0,5))^2",
        "qser(0: 1,24,24)",
        "-3*wpa(2,0,2)",
    ):
        tree = parse_expr(text)
        rendered = render(tree)
        assert rendered.replace(" ", "") == text.replace(" ", "")
        assert parse_expr(rendered) == tree


def test_syntax_errors_carry_position():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("E[2,4")
    assert isinstance(info.value.position, int)
    with pytest.raises(ExprSyntaxError):
        parse_expr("1 + ")
    with pytest.raises(ExprSyntaxError):
        parse_expr("eta(2:16,2:-8)")  # duplicate scale
    with pytest.raises(UnknownAtom):
        parse_expr("zeta(3)")


def test_weight_checking():
    assert expr_weight(parse_expr("E[2,4,0]^3"), delta_weight) == 6
    assert expr_weight(parse_expr("delta(7)"), delta_weight) == 6
    assert expr_weight(parse_expr("qser(0: 1,2)"), delta_weight) is None
    with pytest.raises(WeightMismatch):
        expr_weight(parse_expr("E4(1)+E6(1)"), delta_weight)
    with pytest.raises(WeightMismatch):
        evaluate(parse_expr("delta(2)+E[2,2,0]"), 6)


def test_evaluate_examples():
    f82 = evaluate(get_catalog(2).seeds[0], 8)
    assert series_coeffs(f82, 8) == [0, 1, -8, 12, 64, -210, -96, 1016]
    f64 = evaluate(get_catalog(4).seeds[0], 10)
    assert series_coeffs(f64, 10) == [0, 1, 0, -12, 0, 54, 0, -88, 0, -99]
    d1 = evaluate(Delta(1), 5)
    assert series_coeffs(d1, 5) == [0, 1, -24, 252, -1472]
    f45 = evaluate(sub(Gen(4, 5, 1), Mul((Const(Fraction(10)), Gen(4, 5, 2)))), 3)
    assert series_coeffs(f45, 3) == [0, 1, -4]


def test_evaluate_scalar_expression():
    one = evaluate(parse_expr("1"), 4)
    assert series_coeffs(one, 1) == [1]


def test_evaluate_qser_literal_precision():
    lit = evaluate(parse_expr("qser(1: 1,-8,12)"), 10)
    assert lit.prec_exponent == 4  # knowledge stops after the stored terms
    assert series_coeffs(lit, 4) == [0, 1, -8, 12]


def test_discriminant_from_eisenstein():
    # classical cross-check: 1728 delta = E4^3 - E6^2
    lhs = evaluate(parse_expr("delta(1)"), 12)
    rhs = evaluate(parse_expr("1/1728*(E4(1)^3-E6(1)^2)"), 12)
    assert lhs == rhs
