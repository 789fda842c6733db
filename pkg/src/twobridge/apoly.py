"""A-polynomials of 2-bridge knots by eliminating the trace variable.

The longitude eigenvalue satisfies L M^(2 sigma) = -g(M)/g(1/M) at every
root of the Riley polynomial f, so the A-polynomial is the resultant in
Ltilde of f and the L-linear polynomial

    elim = L * M^(2 sigma) * gbar + g.

The quadratic witness form L M^(2 sigma) - Ltilde g^2 (reduced mod f) is
kept as an independent cross-check path; both eliminations must produce
the same normalized squarefree part.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .exact import Bivar, Laurent, LPoly, Poly, Var
from .knots import EpsilonSeq, TwoBridgeFraction, epsilon_from_fraction, half_sequences
from .resultants import (
    UnitReport,
    content_and_units,
    prem,
    rem_monic,
    resultant,
    squarefree_part,
)
from .riley import RileyPair, riley_recursive


class DegenerateElimination(ArithmeticError):
    """The resultant vanished identically: f and elim share a factor."""

    code = "DEGENERATE"

    def __init__(self, gcd: Poly):
        super().__init__(f"resultant is identically zero; common factor {gcd}")
        self.gcd = gcd


@dataclass(frozen=True)
class LongitudePair:
    """The elimination input: f (monic up to sign in Ltilde), the L-linear
    longitude relation, and sigma."""

    f: Poly
    elim: Poly
    sigma: int


@dataclass(frozen=True)
class LongitudeWitness:
    """Ltilde * g^2 reduced mod f: the quadratic longitude representative."""

    value: Poly


@dataclass
class APolyResult:
    raw: Bivar
    normalized: Bivar
    squarefree: Bivar
    multiplicities: list[tuple[Bivar, int]]
    unit_report: UnitReport
    clear_power: int  # raw == resultant * M^clear_power
    strategy: str = "prs"
    wall_ms: float = 0.0
    fraction: TwoBridgeFraction | None = None
    eps: EpsilonSeq | None = None
    sigma: int = 0

    def output(self, squarefree: bool) -> Bivar:
        return self.squarefree if squarefree else self.normalized


def longitude_pair(pair: RileyPair, eps: EpsilonSeq) -> LongitudePair:
    """Assemble elim = L M^(2 sigma) gbar + g with L-linear coefficients."""
    sigma = eps.sigma
    g = pair.g
    gb_shift = pair.g_bar().coeffs
    coeffs = []
    for k in range(max(len(g.coeffs), len(gb_shift))):
        gk = g.coeff(k)
        bk = gb_shift[k].shift(2 * sigma) if k < len(gb_shift) else Laurent.zero()
        coeffs.append(LPoly((gk, bk)))
    elim = Poly(Var.LT, coeffs)
    return LongitudePair(pair.f, elim, sigma)


def _main_var_gcd(f: Poly, q: Poly) -> Poly:
    """Last nonzero pseudo-remainder: the common factor witness, up to units."""
    a, b = (f, q) if f.degree >= q.degree else (q, f)
    a = a.lift_l()
    b = b.lift_l()
    while b:
        r = prem(a, b)
        a, b = b, r
    return a


def eliminate(lp: LongitudePair, strategy: str = "prs") -> APolyResult:
    """Resultant elimination of Ltilde, cleared and normalized."""
    t0 = time.perf_counter()
    if not lp.elim:
        raise DegenerateElimination(lp.f)
    res = resultant(lp.f.lift_l(), lp.elim, strategy)
    if not res:
        raise DegenerateElimination(_main_var_gcd(lp.f, lp.elim))
    if isinstance(res, Laurent):
        res = LPoly.from_laurent(res)
    raw, clear = Bivar.from_lpoly(res)
    normalized, unit = content_and_units(raw)
    wrt = "L" if normalized.deg_l() > 0 else "M"
    sf, mults = squarefree_part(normalized, wrt)
    return APolyResult(
        raw=raw,
        normalized=normalized,
        squarefree=sf,
        multiplicities=mults,
        unit_report=unit,
        clear_power=clear,
        strategy=strategy,
        wall_ms=(time.perf_counter() - t0) * 1e3,
        sigma=lp.sigma,
    )


def longitude_witness(lp: LongitudePair) -> LongitudeWitness:
    """Reduce Ltilde g^2 mod f; exact because lc(f) is a sign."""
    g = Poly(Var.LT, [c.coeff(0) for c in lp.elim.coeffs])
    w = rem_monic((g * g).shift_var(1), lp.f)
    return LongitudeWitness(w)


def eliminate_witness(lp: LongitudePair, strategy: str = "prs") -> APolyResult:
    """Independent elimination through the quadratic witness form."""
    w = longitude_witness(lp).value
    coeffs: list[LPoly] = []
    n = max(1, len(w.coeffs))
    for k in range(n):
        wk = w.coeff(k) if k < len(w.coeffs) else Laurent.zero()
        if k == 0:
            coeffs.append(LPoly((-wk, Laurent.term(1, 2 * lp.sigma))))
        else:
            coeffs.append(LPoly((-wk,)))
    elim2 = Poly(Var.LT, coeffs)
    return eliminate(LongitudePair(lp.f, elim2, lp.sigma), strategy)


def riley_pair_for(eps: EpsilonSeq) -> RileyPair:
    return riley_recursive(half_sequences(eps))


def a_polynomial(
    knot: TwoBridgeFraction | EpsilonSeq,
    strategy: str = "prs",
) -> APolyResult:
    """Full pipeline: sign sequence, Riley data, longitude pair, resultant."""
    t0 = time.perf_counter()
    if isinstance(knot, TwoBridgeFraction):
        eps = epsilon_from_fraction(knot)
        fraction = knot
    else:
        eps = knot
        fraction = None
    pair = riley_pair_for(eps)
    lp = longitude_pair(pair, eps)
    out = eliminate(lp, strategy)
    out.fraction = fraction
    out.eps = eps
    out.wall_ms = (time.perf_counter() - t0) * 1e3
    return out
