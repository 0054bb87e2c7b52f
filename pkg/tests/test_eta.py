"""Eta quotient expansion against the published series and a naive oracle."""

import random
from fractions import Fraction

import pytest

from conftest import naive_eta_product_part, series_coeffs
from cuspbase.catalog import eta_leaves
from cuspbase.errors import FractionalValuation
from cuspbase.eta import EtaQuotient, eta_expand, eta_profile


def test_published_expansions():
    cases = [
        ({2: 16, 1: -8}, 1, [1, 8, 28, 64]),
        ({3: 18, 1: -6}, 2, [1, 6, 27, 80, 207, 432, 863, 1512]),
        ({9: 6, 3: -2}, 2, [1, 0, 0, 2, 0, 0, 5, 0, 0, 4, 0, 0, 8]),
        ({4: 8, 2: -4}, 1, [1, 0, 4, 0, 6, 0, 8]),
        ({7: 14, 1: -2}, 4, [1, 2, 5, 10]),
    ]
    for terms, lead, coeffs in cases:
        s = eta_expand(EtaQuotient(terms), lead + len(coeffs))
        assert s.valuation() == lead
        assert series_coeffs(s, lead + len(coeffs))[lead:] == coeffs


def test_empty_quotient_is_one():
    s = eta_expand(EtaQuotient({}), 5)
    assert series_coeffs(s, 5) == [1, 0, 0, 0, 0]


def test_profiles():
    assert eta_profile(EtaQuotient({7: 14, 1: -2})) == (6, 4)
    assert eta_profile(EtaQuotient({1: 24})) == (12, 1)
    assert eta_profile(EtaQuotient({1: 2, 2: -4, 5: -10, 10: 20})) == (4, 6)
    assert eta_profile(EtaQuotient({2: 1})) == (Fraction(1, 2), Fraction(1, 12))


def test_expansion_valuation_matches_profile():
    for _, quotient in eta_leaves():
        _, v = eta_profile(quotient)
        s = eta_expand(quotient, v + 6)
        assert s.valuation() == v
        assert s.leading_coefficient() == 1


def test_fractional_valuation_rejected():
    with pytest.raises(FractionalValuation):
        eta_expand(EtaQuotient({1: 1}), 4)  # valuation 1/24
    # half-integer valuations ride the half grid
    s = eta_expand(EtaQuotient({3: 4}), 3)  # valuation 1/2
    assert s.grid == 2
    assert s.valuation() == Fraction(1, 2)


def test_homomorphism_on_random_quotients():
    rng = random.Random(3)
    depth = 12
    for _ in range(25):
        a = EtaQuotient({rng.randrange(1, 5): rng.choice([2, 4, -2]) * 12})
        b = EtaQuotient({rng.randrange(5, 9): rng.choice([1, 3, -1]) * 24})
        merged = a * b
        va, vb = a.valuation, b.valuation
        lhs = eta_expand(merged, va + vb + depth)
        rhs = eta_expand(a, va + depth) * eta_expand(b, vb + depth)
        assert lhs == rhs.truncate(va + vb + depth)


def test_integer_coefficients():
    for _, quotient in eta_leaves():
        _, v = eta_profile(quotient)
        s = eta_expand(quotient, v + 20)
        assert all(isinstance(c, int) for _, c in s.items())


def test_naive_oracle_agreement_small():
    # spot check at modest depth; the 200-coefficient sweep lives in the
    # acceptance suite
    for terms in ({2: 16, 1: -8}, {5: 10, 1: -2}, {1: 2, 2: -4, 5: -10, 10: 20}):
        quotient = EtaQuotient(terms)
        _, v = eta_profile(quotient)
        depth = 40
        s = eta_expand(quotient, v + depth)
        oracle = naive_eta_product_part(quotient.terms, depth)
        assert [s.coeff(v + i) for i in range(depth)] == oracle


def test_parse_and_render():
    q = EtaQuotient.parse(" 2:16 , 1:-8 ")
    assert q == EtaQuotient({2: 16, 1: -8})
    assert EtaQuotient.parse(q.render()) == q
    with pytest.raises(ValueError):
        EtaQuotient.parse("2:16,2:-8")
    with pytest.raises(ValueError):
        EtaQuotient.parse("2-16")
