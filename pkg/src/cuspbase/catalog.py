"""Per-level data: structuring eta forms, generator families, ladder seeds.

Levels 1..10 each carry the eta quotient of their structuring form, the
low-weight generator family expressed over eta / Eisenstein / Weierstrass
atoms, the cuspidal ladder seeds, and the atom list whose monomials span
the full spaces.  The evaluator turns any expression tree into an exact
QSeries at a requested precision.

Two seeds have no closed form stated over the available atoms (level 3 at
weight 6, level 6 at weight 4); they are completed with the classical
cuspidal eta products of those levels and flagged ``reconstructed``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dimensions import DELTA_DATA
from .eisenstein import eisenstein_series, weight2_level_combo
from .errors import UnsupportedLevel
from .eta import EtaQuotient, eta_expand
from .expr import (
    Add, Const, Delta, Eis, Eta, Gen, Lit, Mul, Pow, Subst, W2, Wpa,
    add, const, eta, expr_weight, mul, neg, scaled, sub, wp,
)
from .series import QSeries
from .weierstrass import TorsionPoint, wpa_expand


@dataclass(frozen=True)
class SpanAtom:
    """One generator usable in monomial spanning sets for the full spaces."""

    name: str
    expr: object
    weight: int
    valuation: int


@dataclass(frozen=True)
class LevelCatalog:
    level: int
    delta: Eta
    generators: dict            # (weight, index) -> expression
    span_atoms: tuple           # SpanAtom, ...
    seeds: tuple                # ladder seeds, valuations 1, 2, ...
    k0: int
    base_seed: object | None    # low-weight cusp seed below k0 (level 7 only)
    reconstructed: frozenset    # names of entries completed from outside atoms


def delta_weight(N):
    if N not in DELTA_DATA:
        raise UnsupportedLevel(f"no structuring form catalogued for level {N}")
    return DELTA_DATA[N][0]


def _products_of_weight2(level, count=5):
    """The weight-4 family (E0^2, E0*E1, E0*E2, E1*E2, E2^2)."""
    e0, e1, e2 = (Gen(2, level, s) for s in (0, 1, 2))
    return [mul(e0, e0), mul(e0, e1), mul(e0, e2), mul(e1, e2), mul(e2, e2)][:count]


def _build_catalogs():
    cats = {}

    deltas = {
        1: eta((1, 24)),
        2: eta((2, 16), (1, -8)),
        3: eta((3, 18), (1, -6)),
        4: eta((4, 8), (2, -4)),
        5: eta((5, 10), (1, -2)),
        6: eta((1, 2), (2, -4), (3, -6), (6, 12)),
        7: eta((7, 14), (1, -2)),
        8: eta((8, 8), (4, -4)),
        9: eta((9, 6), (3, -2)),
        10: eta((1, 2), (2, -4), (5, -10), (10, 20)),
    }

    # -- level 1: Eisenstein monomials, no weight-2 form exists ----------
    cats[1] = LevelCatalog(
        level=1, delta=deltas[1], generators={}, span_atoms=(),
        seeds=(Delta(1),), k0=6, base_seed=None, reconstructed=frozenset(),
    )

    # -- level 2 ----------------------------------------------------------
    g2 = {
        (2, 0): scaled(-3, 1, wp(2, 0, 2)),
        (4, 0): Pow(Gen(2, 2, 0), 2),
        (4, 1): Delta(2),
    }
    cats[2] = LevelCatalog(
        level=2, delta=deltas[2], generators=g2,
        span_atoms=(
            SpanAtom("E2_2_0", Gen(2, 2, 0), 2, 0),
            SpanAtom("delta_2", Delta(2), 4, 1),
        ),
        seeds=(mul(sub(Gen(4, 2, 0), scaled(64, 1, Gen(4, 2, 1))), Gen(4, 2, 1)),),
        k0=4, base_seed=None, reconstructed=frozenset(),
    )

    # -- level 3 ----------------------------------------------------------
    g3 = {(2, 0): W2(3)}
    cats[3] = LevelCatalog(
        level=3, delta=deltas[3], generators=g3,
        span_atoms=(
            SpanAtom("E2_3_0", Gen(2, 3, 0), 2, 0),
            SpanAtom("delta_3", Delta(3), 6, 2),
            SpanAtom("E4_s1", Eis(4, 1), 4, 0),
            SpanAtom("E4_s3", Eis(4, 3), 4, 0),
            SpanAtom("E6_s1", Eis(6, 1), 6, 0),
            SpanAtom("E6_s3", Eis(6, 3), 6, 0),
        ),
        seeds=(eta((1, 6), (3, 6)),),
        k0=3, base_seed=None,
        reconstructed=frozenset({"E2_3_0", "F6_3_1"}),
    )

    # -- level 4 ----------------------------------------------------------
    g4 = {
        (2, 0): eta((1, 8), (2, -4)),
        (2, 1): Delta(4),
    }
    cats[4] = LevelCatalog(
        level=4, delta=deltas[4], generators=g4,
        span_atoms=(
            SpanAtom("E2_4_0", Gen(2, 4, 0), 2, 0),
            SpanAtom("E2_4_1", Gen(2, 4, 1), 2, 1),
        ),
        seeds=(mul(Gen(2, 4, 0), Gen(2, 4, 1),
                   add(Gen(2, 4, 0), scaled(16, 1, Gen(2, 4, 1)))),),
        k0=3, base_seed=None, reconstructed=frozenset(),
    )

    # -- level 5 ----------------------------------------------------------
    w15, w25 = wp(2, 0, 5), wp(4, 0, 5)
    half5, tau5 = wp(0, 1, 5), wp(5, 0, 5)
    g5 = {
        (2, 0): scaled(-3, 2, add(w15, w25)),
        (4, 0): Pow(Gen(2, 5, 0), 2),
        (4, 1): scaled(1, 48, sub(
            scaled(9, 1, Pow(add(w15, w25), 2)),
            scaled(12, 1, add(Pow(half5, 2), Pow(tau5, 2), mul(half5, tau5))),
        )),
        (4, 2): Delta(5),
    }
    cats[5] = LevelCatalog(
        level=5, delta=deltas[5], generators=g5,
        span_atoms=(
            SpanAtom("E2_5_0", Gen(2, 5, 0), 2, 0),
            SpanAtom("E4_5_1", Gen(4, 5, 1), 4, 1),
            SpanAtom("delta_5", Gen(4, 5, 2), 4, 2),
        ),
        seeds=(sub(Gen(4, 5, 1), scaled(10, 1, Gen(4, 5, 2))),),
        k0=2, base_seed=None, reconstructed=frozenset(),
    )

    # -- level 6 ----------------------------------------------------------
    g6 = {
        (2, 0): scaled(-3, 1, wp(2, 0, 2)),
        (2, 1): scaled(-1, 4, sub(wp(2, 0, 2), wp(2, 0, 3))),
        (2, 2): Delta(6),
    }
    cats[6] = LevelCatalog(
        level=6, delta=deltas[6], generators=g6,
        span_atoms=tuple(
            SpanAtom(f"E2_6_{s}", Gen(2, 6, s), 2, s) for s in (0, 1, 2)
        ),
        seeds=(eta((1, 2), (2, 2), (3, 2), (6, 2)),),
        k0=2, base_seed=None, reconstructed=frozenset({"F4_6_1"}),
    )

    # -- level 7 ----------------------------------------------------------
    w17, w27, w37 = wp(2, 0, 7), wp(4, 0, 7), wp(6, 0, 7)
    half7, tau7 = wp(0, 1, 7), wp(7, 0, 7)
    sum7 = add(w17, w27, w37)
    g7 = {
        (2, 0): neg(sum7),
        (4, 0): Pow(Gen(2, 7, 0), 2),
        (4, 1): scaled(1, 8, sub(
            Pow(sum7, 2),
            scaled(3, 1, add(Pow(half7, 2), Pow(tau7, 2), mul(half7, tau7))),
        )),
        (4, 2): scaled(1, 32, sub(
            scaled(3, 1, add(Pow(w17, 2), Pow(w27, 2), Pow(w37, 2))),
            Pow(sum7, 2),
        )),
        (6, 0): Pow(Gen(2, 7, 0), 3),
        (6, 1): mul(Gen(2, 7, 0), Gen(4, 7, 1)),
        (6, 2): mul(Gen(2, 7, 0), Gen(4, 7, 2)),
        (6, 3): scaled(-1, 128, mul(
            sub(scaled(2, 1, w17), add(w27, w37)),
            sub(scaled(2, 1, w27), add(w17, w37)),
            sub(scaled(2, 1, w37), add(w17, w27)),
        )),
        (6, 4): Delta(7),
    }
    f47 = sub(Gen(4, 7, 1), scaled(6, 1, Gen(4, 7, 2)))
    cats[7] = LevelCatalog(
        level=7, delta=deltas[7], generators=g7,
        span_atoms=(
            SpanAtom("E2_7_0", Gen(2, 7, 0), 2, 0),
            SpanAtom("E4_7_1", Gen(4, 7, 1), 4, 1),
            SpanAtom("E4_7_2", Gen(4, 7, 2), 4, 2),
            SpanAtom("E6_7_3", Gen(6, 7, 3), 6, 3),
            SpanAtom("delta_7", Gen(6, 7, 4), 6, 4),
        ),
        seeds=(
            mul(f47, Gen(2, 7, 0)),
            sub(Gen(6, 7, 2), scaled(49, 1, Gen(6, 7, 4))),
            sub(Gen(6, 7, 3), scaled(13, 2, Gen(6, 7, 4))),
        ),
        k0=3, base_seed=f47, reconstructed=frozenset(),
    )

    # -- level 8 ----------------------------------------------------------
    g8 = {
        (2, 0): eta((1, 8), (2, -4)),
        (2, 1): eta((4, 8), (2, -4)),
        (2, 2): eta((8, 8), (4, -4)),
    }
    for s, prod in enumerate(_products_of_weight2(8)):
        g8[(4, s)] = prod
    cats[8] = LevelCatalog(
        level=8, delta=deltas[8], generators=g8,
        span_atoms=tuple(
            SpanAtom(f"E2_8_{s}", Gen(2, 8, s), 2, s) for s in (0, 1, 2)
        ),
        seeds=(add(Gen(4, 8, 1),
                   scaled(8, 1, Gen(4, 8, 2)),
                   scaled(32, 1, Gen(4, 8, 3)),
                   scaled(-128, 1, Gen(4, 8, 4))),),
        k0=2, base_seed=None, reconstructed=frozenset(),
    )

    # -- level 9 ----------------------------------------------------------
    g9 = {
        (2, 0): scaled(-3, 1, wp(6, 0, 9)),
        (2, 1): scaled(-1, 4, sub(wp(2, 0, 3), wp(6, 0, 9))),
        (2, 2): Delta(9),
    }
    for s, prod in enumerate(_products_of_weight2(9)):
        g9[(4, s)] = prod
    cats[9] = LevelCatalog(
        level=9, delta=deltas[9], generators=g9,
        span_atoms=tuple(
            SpanAtom(f"E2_9_{s}", Gen(2, 9, s), 2, s) for s in (0, 1, 2)
        ),
        seeds=(add(Gen(4, 9, 1),
                   scaled(-3, 1, Gen(4, 9, 2)),
                   scaled(-27, 1, Gen(4, 9, 4))),),
        k0=2, base_seed=None, reconstructed=frozenset(),
    )

    # -- level 10 ---------------------------------------------------------
    w12, w1_5, w2_5, w5_10 = wp(2, 0, 2), wp(2, 0, 5), wp(4, 0, 5), wp(10, 0, 10)
    g10 = {
        (2, 0): scaled(-3, 1, w5_10),
        (2, 1): scaled(-1, 8, sub(w12, w5_10)),
        (2, 2): scaled(1, 16, add(
            w12,
            scaled(-2, 1, w1_5),
            scaled(-2, 1, w2_5),
            scaled(3, 1, w5_10),
        )),
    }
    for s, prod in enumerate(_products_of_weight2(10)):
        g10[(4, s)] = prod
    g10[(4, 5)] = Subst(Delta(2), 5)
    g10[(4, 6)] = Delta(10)
    e = {s: Gen(4, 10, s) for s in range(1, 7)}
    cats[10] = LevelCatalog(
        level=10, delta=deltas[10], generators=g10,
        span_atoms=(
            SpanAtom("E2_10_0", Gen(2, 10, 0), 2, 0),
            SpanAtom("E2_10_1", Gen(2, 10, 1), 2, 1),
            SpanAtom("E2_10_2", Gen(2, 10, 2), 2, 2),
            SpanAtom("E4_10_5", Gen(4, 10, 5), 4, 5),
            SpanAtom("E4_10_6", Gen(4, 10, 6), 4, 6),
        ),
        seeds=(
            add(e[1], neg(e[2]), scaled(-4, 1, e[3]), scaled(2, 1, e[4]),
                scaled(16, 1, e[5]), scaled(-40, 1, e[6])),
            add(e[2], scaled(-7, 1, e[4]), scaled(4, 1, e[5]),
                scaled(40, 1, e[6])),
            add(e[3], scaled(-3, 1, e[4]), scaled(-8, 1, e[5]),
                scaled(20, 1, e[6])),
        ),
        k0=2, base_seed=None, reconstructed=frozenset(),
    )

    return cats


_CATALOGS = _build_catalogs()


def get_catalog(N):
    cat = _CATALOGS.get(N)
    if cat is None:
        raise UnsupportedLevel(f"level {N} is outside the catalogued range 1..10")
    return cat


def level1_eisenstein(half_weight):
    """The unitary valuation-0 Eisenstein monomial of weight 2k at level 1."""
    if half_weight < 2:
        raise ValueError("level 1 has no positive-weight form below weight 4")
    if half_weight % 2 == 0:
        return Pow(Eis(4, 1), half_weight // 2)
    return mul(Pow(Eis(4, 1), (half_weight - 3) // 2), Eis(6, 1))


# -- evaluation ---------------------------------------------------------------

_EVAL_CACHE = {}


def clear_caches():
    _EVAL_CACHE.clear()


def evaluate(expr, prec, _check=True):
    """Exact expansion of an expression tree below exponent prec."""
    if _check:
        expr_weight(expr, delta_weight)  # raises WeightMismatch on bad trees
    if prec < 1:
        raise ValueError("precision must be a positive exponent bound")
    return _eval(expr, int(prec)).truncate(prec)


def _eval(expr, prec):
    key = (expr, prec)
    hit = _EVAL_CACHE.get(key)
    if hit is not None:
        return hit
    out = _eval_uncached(expr, prec)
    _EVAL_CACHE[key] = out
    return out


def _eval_uncached(expr, prec):
    if isinstance(expr, Const):
        return QSeries.make(0, [expr.value])
    if isinstance(expr, Eta):
        return eta_expand(expr.quotient(), prec)
    if isinstance(expr, Eis):
        inner = -(-prec // expr.scale)
        return eisenstein_series(expr.weight, inner).substitute_q_power(expr.scale)
    if isinstance(expr, W2):
        return weight2_level_combo(expr.level, prec)
    if isinstance(expr, Wpa):
        return wpa_expand(TorsionPoint(expr.a, expr.b, expr.level), prec)
    if isinstance(expr, Gen):
        cat = get_catalog(expr.level)
        body = cat.generators.get((expr.weight, expr.index))
        if body is None:
            raise UnsupportedLevel(
                f"no generator of weight {expr.weight}, index {expr.index} "
                f"catalogued at level {expr.level}"
            )
        return _eval(body, prec)
    if isinstance(expr, Delta):
        return _eval(get_catalog(expr.level).delta, prec)
    if isinstance(expr, Lit):
        return QSeries.make(expr.lead, list(expr.coeffs),
                            prec=expr.lead + len(expr.coeffs))
    if isinstance(expr, Add):
        out = QSeries.zero()
        for t in expr.terms:
            out = out + _eval(t, prec)
        return out
    if isinstance(expr, Mul):
        out = QSeries.one()
        for f in expr.factors:
            out = out * _eval(f, prec)
        return out
    if isinstance(expr, Pow):
        return _eval(expr.base, prec) ** expr.exponent
    if isinstance(expr, Subst):
        inner = -(-prec // expr.d)
        return _eval(expr.child, inner).substitute_q_power(expr.d)
    raise TypeError(f"not a form expression: {expr!r}")


# -- named access and identity corpus ----------------------------------------

def named_forms(N):
    """name -> expression for every catalogued form at level N."""
    cat = get_catalog(N)
    out = {f"delta_{N}": Delta(N)}
    for (w, s) in sorted(cat.generators):
        out[f"E{w}_{N}_{s}"] = Gen(w, N, s)
    for i, seed in enumerate(cat.seeds, start=1):
        out[f"F{2 * cat.k0}_{N}_{i}"] = seed
    if cat.base_seed is not None:
        out[f"F4_{N}_1"] = cat.base_seed
    return out


def eta_leaves():
    """Every distinct eta quotient appearing in the catalogue, with a name."""
    seen = {}

    def walk(name, node):
        if isinstance(node, Eta):
            seen.setdefault(node.terms, name)
        elif isinstance(node, Add):
            for t in node.terms:
                walk(name, t)
        elif isinstance(node, Mul):
            for f in node.factors:
                walk(name, f)
        elif isinstance(node, Pow):
            walk(name, node.base)
        elif isinstance(node, Subst):
            walk(name, node.child)

    for N in sorted(_CATALOGS):
        for name, form in named_forms(N).items():
            if isinstance(form, (Gen, Delta)):
                cat = get_catalog(N)
                body = cat.delta if isinstance(form, Delta) \
                    else cat.generators[(form.weight, form.index)]
                walk(name, body)
            else:
                walk(name, form)
    return [(name, EtaQuotient(terms)) for terms, name in sorted(seen.items())]


def catalog_identities(N):
    """Cross-representation identity pairs (check id, lhs, rhs, weight)."""
    get_catalog(N)
    out = []
    if N == 2:
        out.append(("identity:E2_2_0:lambert_combo", Gen(2, 2, 0), W2(2), 2))
        out.append(("identity:F8_2_1:eta_product",
                    get_catalog(2).seeds[0], eta((1, 8), (2, 8)), 8))
    if N == 5:
        out.append(("identity:delta_5:weierstrass_square", Delta(5),
                    scaled(1, 16, Pow(sub(wp(2, 0, 5), wp(4, 0, 5)), 2)), 4))
        out.append(("identity:E2_5_0:lambert_combo", Gen(2, 5, 0), W2(5), 2))
    if N == 6:
        out.append(("identity:delta_6:weierstrass_sum", Delta(6),
                    scaled(1, 48, add(
                        scaled(3, 1, wp(2, 0, 2)),
                        scaled(-8, 1, wp(2, 0, 3)),
                        *[wp(2 * j, 0, 6) for j in range(1, 6)],
                    )), 2))
        out.append(("identity:E2_6_0:lambert_combo", Gen(2, 6, 0), W2(2), 2))
    if N == 7:
        out.append(("identity:F6_7_1:m_basis_coords",
                    get_catalog(7).seeds[0],
                    sub(Gen(6, 7, 1), scaled(6, 1, Gen(6, 7, 2))), 6))
    if N == 8:
        out.append(("identity:delta_8:scaled_delta_4", Delta(8),
                    Subst(Delta(4), 2), 2))
    if N == 9:
        out.append(("identity:E2_9_0:lambert_combo", Gen(2, 9, 0),
                    Subst(W2(3), 3), 2))
    if N == 10:
        out.append(("identity:E2_10_0:lambert_combo", Gen(2, 10, 0),
                    Subst(Gen(2, 2, 0), 5), 2))
    return out
