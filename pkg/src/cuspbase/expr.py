"""Expression trees for catalogued modular forms.

Leaves are eta quotients, Eisenstein atoms, weight-2 level combinations,
Weierstrass torsion values, explicit truncated q-expansions, and references
into the per-level catalogue (generators and the structuring delta form).
Internal nodes are sums, products, integer powers and the scaling map
f(tau) -> f(d*tau).  Rational scalars are Const leaves of weight 0.

Every tree has a well-defined weight, checked structurally: products add
weights, powers multiply them, and all summands must agree (explicit
q-expansion literals act as wildcards).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import WeightMismatch
from .eta import EtaQuotient


@dataclass(frozen=True)
class Const:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Eta:
    terms: tuple  # ((scale, exponent), ...)

    def quotient(self):
        return EtaQuotient(self.terms)


@dataclass(frozen=True)
class Eis:
    weight: int  # 4 or 6
    scale: int = 1


@dataclass(frozen=True)
class W2:
    """The weight-2 combination (N E_2(N tau) - E_2(tau)) / (N - 1)."""

    level: int


@dataclass(frozen=True)
class Wpa:
    """Normalized Weierstrass value at z = (a tau + b)/2 on (1, N tau)."""

    a: int
    b: int
    level: int


@dataclass(frozen=True)
class Gen:
    """Reference to the catalogued generator of given weight/level/index."""

    weight: int
    level: int
    index: int


@dataclass(frozen=True)
class Delta:
    """Reference to the structuring form of the given level."""

    level: int


@dataclass(frozen=True)
class Lit:
    """Explicit truncated q-expansion; known through lead+len(coeffs) only."""

    lead: int
    coeffs: tuple


@dataclass(frozen=True)
class Add:
    terms: tuple


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Subst:
    """f(tau) -> f(d tau)."""

    child: object
    d: int


def expr_weight(expr, delta_weight=None):
    """Structural weight of an expression; None when undetermined.

    ``delta_weight`` maps a level to the weight of its Delta reference (the
    catalogue provides it; tests may pass a plain dict).  Raises
    WeightMismatch when summands disagree.
    """
    if isinstance(expr, Const):
        return 0 if expr.value != 0 else None
    if isinstance(expr, Eta):
        w = expr.quotient().weight
        if not isinstance(w, int):
            raise WeightMismatch(f"eta quotient {expr.terms} has half-integer weight {w}")
        return w
    if isinstance(expr, Eis):
        return expr.weight
    if isinstance(expr, (W2, Wpa)):
        return 2
    if isinstance(expr, Gen):
        return expr.weight
    if isinstance(expr, Delta):
        if delta_weight is None:
            from .catalog import delta_weight as _dw
            delta_weight = _dw
        return delta_weight(expr.level)
    if isinstance(expr, Lit):
        return None
    if isinstance(expr, Add):
        agreed = None
        for t in expr.terms:
            w = expr_weight(t, delta_weight)
            if w is None:
                continue
            if agreed is None:
                agreed = w
            elif agreed != w:
                raise WeightMismatch(f"sum mixes weights {agreed} and {w}")
        return agreed
    if isinstance(expr, Mul):
        total = 0
        for f in expr.factors:
            w = expr_weight(f, delta_weight)
            if w is None:
                return None
            total += w
        return total
    if isinstance(expr, Pow):
        w = expr_weight(expr.base, delta_weight)
        return None if w is None else w * expr.exponent
    if isinstance(expr, Subst):
        return expr_weight(expr.child, delta_weight)
    raise TypeError(f"not a form expression: {expr!r}")


# -- builders used by the catalogue and tests --------------------------------

def const(p, q=1):
    return Const(Fraction(p, q))


def eta(*pairs):
    return Eta(tuple(pairs))


def wp(a, b, level):
    return Wpa(a, b, level)


def add(*terms):
    return Add(tuple(terms))


def mul(*factors):
    return Mul(tuple(factors))


def sub(a, b):
    return Add((a, Mul((Const(Fraction(-1)), b))))


def scaled(p, q, child):
    return Mul((Const(Fraction(p, q)), child))


def neg(child):
    return Mul((Const(Fraction(-1)), child))


# -- rendering ---------------------------------------------------------------

def _frac_str(f):
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _precedence(expr):
    if isinstance(expr, Add):
        return 1
    if isinstance(expr, Mul):
        return 2
    if isinstance(expr, (Pow, Subst)):
        return 3
    return 4


def render(expr):
    """Canonical text for an expression, in the grammar parse() accepts."""
    if isinstance(expr, Const):
        return _frac_str(expr.value)
    if isinstance(expr, Eta):
        return "eta(" + ",".join(f"{m}:{r}" for m, r in expr.terms) + ")"
    if isinstance(expr, Eis):
        return f"E{expr.weight}({expr.scale})"
    if isinstance(expr, W2):
        return f"Ew2({expr.level})"
    if isinstance(expr, Wpa):
        return f"wpa({expr.a},{expr.b},{expr.level})"
    if isinstance(expr, Gen):
        return f"E[{expr.weight},{expr.level},{expr.index}]"
    if isinstance(expr, Delta):
        return f"delta({expr.level})"
    if isinstance(expr, Lit):
        return f"qser({expr.lead}: " + ",".join(_frac_str(c) for c in expr.coeffs) + ")"
    if isinstance(expr, Add):
        parts = []
        for i, t in enumerate(expr.terms):
            s = render(t)
            if i == 0:
                parts.append(s)
            elif s.startswith("-"):
                parts.append("-" + s[1:])
            else:
                parts.append("+" + s)
        return "".join(parts)
    if isinstance(expr, Mul):
        factors = list(expr.factors)
        sign = ""
        if factors and factors[0] == Const(Fraction(-1)) and len(factors) > 1:
            sign = "-"
            factors = factors[1:]
        parts = []
        for f in factors:
            s = render(f)
            if _precedence(f) < 2:
                s = f"({s})"
            parts.append(s)
        return sign + "*".join(parts)
    if isinstance(expr, Pow):
        s = render(expr.base)
        if _precedence(expr.base) < 4:
            s = f"({s})"
        return f"{s}^{expr.exponent}"
    if isinstance(expr, Subst):
        s = render(expr.child)
        if _precedence(expr.child) < 4:
            s = f"({s})"
        return f"{s}@{expr.d}"
    raise TypeError(f"not a form expression: {expr!r}")
