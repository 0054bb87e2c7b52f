"""Exact truncated power series in q over the rationals.

A series lives on an exponent grid of step 1 or 1/2 (half steps only arise
inside Weierstrass intermediates).  Internally exponents are scaled
integers: on grid g, slot i holds the coefficient of q^(i/g).  Every series
carries a precision frontier ``prec`` (scaled, exclusive): coefficients at
exponents >= prec/g are unknown, everything below is exact.  ``prec=None``
marks an exact polynomial, known to every order.

Values are immutable; all operations return new series.  Coefficients are
stored as plain ints when integral and ``fractions.Fraction`` otherwise, so
integer-heavy convolutions stay in fast int arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotAUnit, OffGrid, PrecisionExceeded, ZeroWithinPrecision


def _norm_coeff(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    return _norm_coeff(Fraction(c))


def _to_index(e, grid):
    f = Fraction(e) * grid
    if f.denominator != 1:
        raise OffGrid(f"exponent {e} is not on the 1/{grid} grid")
    return f.numerator


def _from_index(i, grid):
    f = Fraction(i, grid)
    return f.numerator if f.denominator == 1 else f


def _min_prec(p, q):
    if p is None:
        return q
    if q is None:
        return p
    return min(p, q)


class QSeries:
    """Immutable truncated q-series with exact rational coefficients.

    The raw constructor takes *scaled* indices (``lead`` and ``prec`` in
    units of 1/grid).  Use :meth:`make`, :meth:`one`, :meth:`zero` or
    :meth:`monomial` to build series from plain exponents.
    """

    __slots__ = ("grid", "lead", "coeffs", "prec")

    def __init__(self, grid, lead, coeffs, prec):
        if grid not in (1, 2):
            raise ValueError(f"grid must be 1 or 2, got {grid}")
        coeffs = [_norm_coeff(c) for c in coeffs]
        if prec is not None:
            if int(prec) != prec:
                raise OffGrid(f"precision index {prec} is not integral")
            prec = int(prec)
            if len(coeffs) > prec - lead:
                coeffs = coeffs[: prec - lead]
        # strip leading zeros (advance the lead), then trailing zeros
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        lead += i
        coeffs = coeffs[i:]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            lead = prec if prec is not None else 0
        # collapse the half grid when no odd-index coefficient is known nonzero
        if grid == 2:
            if all((lead + j) % 2 == 0 for j, c in enumerate(coeffs) if c != 0):
                if coeffs:
                    coeffs = coeffs[::2] if lead % 2 == 0 else coeffs[1::2]
                    lead = (lead + 1) // 2
                grid = 1
                if prec is not None:
                    prec = (prec + 1) // 2
                if not coeffs:
                    lead = prec if prec is not None else 0
        self.grid = grid
        self.lead = lead
        self.coeffs = tuple(coeffs)
        self.prec = prec

    # -- constructors --------------------------------------------------

    @classmethod
    def make(cls, lead, coeffs, prec=None, grid=1):
        """Build a series from a lead *exponent* and a dense coefficient run."""
        lead_idx = _to_index(lead, grid)
        prec_idx = None if prec is None else _to_index(prec, grid)
        return cls(grid, lead_idx, coeffs, prec_idx)

    @classmethod
    def zero(cls, prec=None, grid=1):
        prec_idx = None if prec is None else _to_index(prec, grid)
        return cls(grid, 0, [], prec_idx)

    @classmethod
    def one(cls, prec=None):
        prec_idx = None if prec is None else _to_index(prec, 1)
        return cls(1, 0, [1], prec_idx)

    @classmethod
    def monomial(cls, exponent, coeff=1, prec=None):
        e = Fraction(exponent)
        grid = e.denominator
        if grid not in (1, 2):
            raise OffGrid(f"exponent {exponent} needs a grid finer than 1/2")
        prec_idx = None if prec is None else _to_index(prec, grid)
        return cls(grid, e.numerator * (grid // e.denominator), [coeff], prec_idx)

    # -- inspection ----------------------------------------------------

    @property
    def is_zero(self):
        """True when no nonzero coefficient is known (zero within precision)."""
        return not self.coeffs

    @property
    def prec_exponent(self):
        return None if self.prec is None else _from_index(self.prec, self.grid)

    def coeff(self, e):
        """Exact coefficient of q^e.  Raises beyond the precision frontier."""
        idx = _to_index(e, self.grid)
        if self.prec is not None and idx >= self.prec:
            raise PrecisionExceeded(
                f"coefficient of q^{e} is beyond the frontier q^{self.prec_exponent}"
            )
        if idx < self.lead or idx >= self.lead + len(self.coeffs):
            return 0
        return self.coeffs[idx - self.lead]

    def valuation(self):
        """Exponent of the first nonzero coefficient."""
        if not self.coeffs:
            raise ZeroWithinPrecision("series is zero within its precision")
        return _from_index(self.lead, self.grid)

    def leading_coefficient(self):
        if not self.coeffs:
            raise ZeroWithinPrecision("series is zero within its precision")
        return self.coeffs[0]

    def items(self):
        """Known nonzero (exponent, coefficient) pairs, ascending."""
        return [
            (_from_index(self.lead + j, self.grid), c)
            for j, c in enumerate(self.coeffs)
            if c != 0
        ]

    # -- grid handling ---------------------------------------------------

    def _upcast(self, grid):
        if grid == self.grid:
            return self
        assert grid == 2 and self.grid == 1
        coeffs = []
        for c in self.coeffs:
            coeffs.append(c)
            coeffs.append(0)
        if coeffs:
            coeffs.pop()
        out = QSeries.__new__(QSeries)
        out.grid = 2
        out.lead = self.lead * 2
        out.coeffs = tuple(coeffs)
        out.prec = None if self.prec is None else self.prec * 2
        return out

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries(1, 0, [other], None)
        if not isinstance(other, QSeries):
            return NotImplemented
        g = max(self.grid, other.grid)
        a, b = self._upcast(g), other._upcast(g)
        prec = _min_prec(a.prec, b.prec)
        lo = min(a.lead, b.lead)
        hi = max(a.lead + len(a.coeffs), b.lead + len(b.coeffs))
        if prec is not None:
            hi = min(hi, prec)
        out = [0] * max(hi - lo, 0)
        for j, c in enumerate(a.coeffs):
            i = a.lead + j - lo
            if 0 <= i < len(out):
                out[i] = c
        for j, c in enumerate(b.coeffs):
            i = b.lead + j - lo
            if 0 <= i < len(out):
                out[i] += c
        return QSeries(g, lo, out, prec)

    __radd__ = __add__

    def __neg__(self):
        out = QSeries.__new__(QSeries)
        out.grid = self.grid
        out.lead = self.lead
        out.coeffs = tuple(-c for c in self.coeffs)
        out.prec = self.prec
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries(1, 0, [other], None)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, r):
        """Multiply every coefficient by the exact scalar r."""
        r = _norm_coeff(r)
        if r == 0:
            return QSeries(self.grid, 0, [], self.prec)
        return QSeries(self.grid, self.lead, [r * c for c in self.coeffs], self.prec)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        g = max(self.grid, other.grid)
        a, b = self._upcast(g), other._upcast(g)
        # frontier: each factor's unknown tail is shifted by the other's lead
        pa = None if a.prec is None else a.prec + b.lead
        pb = None if b.prec is None else b.prec + a.lead
        prec = _min_prec(pa, pb)
        if not a.coeffs or not b.coeffs:
            return QSeries(g, 0, [], prec)
        lead = a.lead + b.lead
        if prec is None:
            length = len(a.coeffs) + len(b.coeffs) - 1
        else:
            length = min(len(a.coeffs) + len(b.coeffs) - 1, prec - lead)
        out = [0] * length
        bc = b.coeffs
        for i, ca in enumerate(a.coeffs):
            if ca == 0 or i >= length:
                continue
            jmax = min(len(bc), length - i)
            for j in range(jmax):
                cb = bc[j]
                if cb != 0:
                    out[i + j] += ca * cb
        return QSeries(g, lead, out, prec)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = QSeries.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def invert(self, prec=None):
        """Reciprocal series; requires valuation zero.

        The result satisfies self * invert(self) == 1 up to the precision
        frontier.  A finite frontier is required: pass ``prec`` when the
        series is an exact polynomial.
        """
        if not self.coeffs:
            raise NotAUnit("cannot invert a series that is zero within precision")
        if self.lead != 0:
            raise NotAUnit(
                f"cannot invert a series of valuation {self.valuation()}"
            )
        prec_idx = None if prec is None else _to_index(prec, self.grid)
        eff = _min_prec(self.prec, prec_idx)
        if eff is None:
            raise ValueError("invert needs a finite precision frontier")
        a0 = self.coeffs[0]
        inv0 = Fraction(1, 1) / a0
        out = [inv0]
        a = self.coeffs
        for n in range(1, eff):
            acc = 0
            for k in range(1, min(n, len(a) - 1) + 1):
                ck = a[k]
                if ck != 0:
                    acc += ck * out[n - k]
            out.append(-acc * inv0 if acc != 0 else 0)
        return QSeries(self.grid, 0, out, eff)

    def substitute_q_power(self, d):
        """The map f(tau) -> f(d*tau): every exponent is multiplied by d."""
        if not isinstance(d, int) or d < 1:
            raise ValueError("substitution power must be a positive integer")
        if d == 1:
            return self
        coeffs = []
        for c in self.coeffs:
            coeffs.append(c)
            coeffs.extend([0] * (d - 1))
        if coeffs:
            del coeffs[len(coeffs) - (d - 1):]
        prec = None if self.prec is None else self.prec * d
        return QSeries(self.grid, self.lead * d, coeffs, prec)

    def truncate(self, prec):
        """Lower the precision frontier to the given exponent."""
        prec_idx = _to_index(prec, self.grid)
        new = _min_prec(self.prec, prec_idx)
        return QSeries(self.grid, self.lead, list(self.coeffs), new)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.grid == other.grid
            and self.lead == other.lead
            and self.coeffs == other.coeffs
            and self.prec == other.prec
        )

    def __hash__(self):
        return hash((self.grid, self.lead, self.coeffs, self.prec))

    def __repr__(self):
        return f"QSeries({self.to_str(max_terms=6)})"

    def to_str(self, var="q", max_terms=None):
        parts = []
        for e, c in self.items():
            if max_terms is not None and len(parts) >= max_terms:
                parts.append("...")
                break
            if e == 0:
                term = str(c)
            else:
                ev = str(e) if Fraction(e).denominator == 1 else f"({e})"
                if c == 1:
                    term = var if e == 1 else f"{var}^{ev}"
                elif c == -1:
                    term = f"-{var}" if e == 1 else f"-{var}^{ev}"
                else:
                    term = f"{c}*{var}" if e == 1 else f"{c}*{var}^{ev}"
            parts.append(term)
        if not parts:
            parts.append("0")
        s = " + ".join(parts).replace("+ -", "- ")
        if self.prec is not None:
            pe = self.prec_exponent
            pv = str(pe) if Fraction(pe).denominator == 1 else f"({pe})"
            s += f" + O({var}^{pv})"
        return s


def first_mismatch(a, b, upto=None):
    """First exponent below the common frontier where two series differ.

    Returns None when the series agree on every commonly known coefficient
    (optionally capped at the exponent ``upto``, exclusive).
    """
    g = max(a.grid, b.grid)
    ax, bx = a._upcast(g), b._upcast(g)
    hi = _min_prec(ax.prec, bx.prec)
    if upto is not None:
        hi = _min_prec(hi, _to_index(upto, g))
    if hi is None:
        hi = max(ax.lead + len(ax.coeffs), bx.lead + len(bx.coeffs))
    lo = min(ax.lead, bx.lead)
    for i in range(lo, hi):
        ca = ax.coeffs[i - ax.lead] if ax.lead <= i < ax.lead + len(ax.coeffs) else 0
        cb = bx.coeffs[i - bx.lead] if bx.lead <= i < bx.lead + len(bx.coeffs) else 0
        if ca != cb:
            return _from_index(i, g)
    return None
