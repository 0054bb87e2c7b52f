"""Classical Eisenstein series and the level-lifted weight-2 combination.

E_4 = 1 + 240 sum sigma_3(n) q^n and E_6 = 1 - 504 sum sigma_5(n) q^n are
the weight 4 and 6 generators at level 1.  The quasi-modular E_2 is kept
module-private: it only enters through the modular combination
(N*E_2(N*tau) - E_2(tau)) / (N-1), which is unitary of valuation 0 on
Gamma0(N).
"""

from __future__ import annotations

from fractions import Fraction

from .series import QSeries


def sigma_power_sum(n, k):
    """Sum of k-th powers of the divisors of n, by direct enumeration."""
    if n < 1:
        raise ValueError("divisor sums need n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** k
            e = n // d
            if e != d:
                total += e ** k
        d += 1
    return total


def eisenstein_series(weight, prec):
    """E_4 or E_6 truncated below exponent prec."""
    if weight == 4:
        scale, power = 240, 3
    elif weight == 6:
        scale, power = -504, 5
    else:
        raise ValueError(f"only weights 4 and 6 are provided, got {weight}")
    coeffs = [1] + [scale * sigma_power_sum(n, power) for n in range(1, prec)]
    return QSeries(1, 0, coeffs, prec)


def _e2(prec):
    # quasi-modular; never exposed as a basis atom
    coeffs = [1] + [-24 * sigma_power_sum(n, 1) for n in range(1, prec)]
    return QSeries(1, 0, coeffs, prec)


def weight2_level_combo(N, prec):
    """(N*E_2(N tau) - E_2(tau)) / (N-1), unitary of weight 2 on Gamma0(N)."""
    if not isinstance(N, int) or N < 2:
        raise ValueError("the weight-2 combination needs an integer level N >= 2")
    inner = (prec + N - 1) // N
    lifted = _e2(inner).substitute_q_power(N)
    combo = (lifted.scale(N) - _e2(prec)).scale(Fraction(1, N - 1))
    return combo.truncate(prec)
