"""Dedekind eta quotients prod_m eta(m*tau)^{r_m} and their q-expansions.

An eta quotient expands to q^(sum m*r_m / 24) * prod_m prod_{k>=1}
(1 - q^{mk})^{r_m}.  The weight is (1/2) sum r_m and the valuation at
infinity is (1/24) sum m*r_m; both are plain arithmetic on the exponents.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FractionalValuation
from .series import QSeries


class EtaQuotient:
    """Finite multiset of (scale, exponent) pairs, scales distinct."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        if hasattr(terms, "items"):
            terms = terms.items()
        seen = {}
        for m, r in terms:
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"eta scale must be a positive integer, got {m}")
            if not isinstance(r, int):
                raise ValueError(f"eta exponent must be an integer, got {r}")
            if m in seen:
                raise ValueError(f"duplicate eta scale {m}")
            if r != 0:
                seen[m] = r
        self.terms = tuple(sorted(seen.items()))

    @property
    def weight(self):
        w = Fraction(sum(r for _, r in self.terms), 2)
        return w.numerator if w.denominator == 1 else w

    @property
    def valuation(self):
        v = Fraction(sum(m * r for m, r in self.terms), 24)
        return v.numerator if v.denominator == 1 else v

    def __mul__(self, other):
        merged = dict(self.terms)
        for m, r in other.terms:
            merged[m] = merged.get(m, 0) + r
        return EtaQuotient(merged)

    def __eq__(self, other):
        return isinstance(other, EtaQuotient) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"EtaQuotient({self.render()!r})"

    def render(self):
        return ",".join(f"{m}:{r}" for m, r in self.terms)

    @classmethod
    def parse(cls, text):
        """Parse the "m:r,m:r" syntax; whitespace is ignored."""
        compact = "".join(text.split())
        if not compact:
            return cls(())
        pairs = []
        for chunk in compact.split(","):
            m, sep, r = chunk.partition(":")
            if not sep:
                raise ValueError(f"expected scale:exponent, got {chunk!r}")
            try:
                pairs.append((int(m), int(r)))
            except ValueError:
                raise ValueError(f"expected scale:exponent, got {chunk!r}") from None
        return cls(pairs)

    def expand(self, prec):
        return eta_expand(self, prec)


def _euler_factor_list(m, rel):
    """Coefficients of prod_{k>=1} (1 - q^{mk}) below exponent rel."""
    c = [0] * rel
    c[0] = 1
    e = m
    while e < rel:
        # in-place multiply by (1 - q^e); descending keeps reads pristine
        for i in range(rel - 1, e - 1, -1):
            c[i] -= c[i - e]
        e += m
    return c


def eta_profile(e):
    """(weight, valuation) of an eta quotient, by exponent arithmetic."""
    return (e.weight, e.valuation)


def eta_expand(e, prec):
    """Expand an eta quotient to an exact QSeries below exponent prec.

    Each scale's Euler product is accumulated factor by factor with early
    truncation, raised to |r_m| by repeated squaring, and inverted once when
    r_m is negative.
    """
    v = Fraction(e.valuation)
    if Fraction(prec) <= v:
        raise ValueError(f"prec {prec} must exceed the valuation {v}")
    if v.denominator == 1:
        grid = 1
    elif v.denominator == 2:
        grid = 2
    else:
        raise FractionalValuation(
            f"sum m*r_m = {24 * v} is not divisible by 12; "
            "valuation not representable on the half grid"
        )
    # the product part has integer exponents; needed below prec - v
    rel_f = Fraction(prec) - v
    rel = int(rel_f) if rel_f.denominator == 1 else int(rel_f) + 1
    prod = QSeries.one(prec=rel)
    for m, r in e.terms:
        base = QSeries(1, 0, _euler_factor_list(m, rel), rel)
        powed = base ** abs(r)
        if r < 0:
            powed = powed.invert()
        prod = prod * powed
    return (QSeries.monomial(v) * prod).truncate(prec)
