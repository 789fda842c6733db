"""Normalized Alexander polynomials by five independent formulas.

All computations run in the half-power variable u with t = u^2, so that
t^(1/2)-terms of the symmetrized formulas stay exact; public values are
palindromic with Delta(1) = 1 and have integer t-powers only.

The five routes:

  alexander_from_riley  -- the lambda = 0 slice of the Riley polynomial;
  alexander_sigma       -- M^sigma - z * (odd hat-exponent sum);
  alexander_minkus      -- the alternating partial-sum formula;
  alexander_chebyshev   -- the closed form over the beta exponents;
  alexander_fukuhara    -- the nu_k symmetrized quarter-sum.

They must agree exactly; q_recursion_check verifies the three-term
Chebyshev structure of the prefix sums Q_n = Delta_n + Delta_{n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import Laurent, Poly, S_POLY, Var
from .knots import EpsilonSeq, HalfSeq, KnotInputError, half_sequences
from .riley import RileyPair, riley_recursive


class NonIntegralError(ValueError):
    """A formula produced non-integer coefficients: indexing error upstream."""

    code = "NONINTEGRAL"


class SymLaurent:
    """A palindromic Laurent polynomial in t, stored over u with t = u^2.

    >>> SymLaurent.from_t_dict({1: 1, 0: -1, -1: 1})
    SymLaurent('t^-1 - 1 + t')
    """

    __slots__ = ("upoly",)

    def __init__(self, upoly: Laurent):
        self.upoly = upoly

    @classmethod
    def from_t_dict(cls, d: dict[int, int]) -> "SymLaurent":
        return cls(Laurent.from_dict({2 * k: v for k, v in d.items()}))

    def t_items(self) -> list[tuple[int, int]]:
        out = []
        for e, c in self.upoly.items():
            if e % 2:
                raise NonIntegralError(f"half-integer t-power u^{e}")
            out.append((e // 2, c))
        return out

    def at_one(self) -> int:
        return sum(c for _, c in self.upoly.items())

    def is_palindromic(self) -> bool:
        return self.upoly == self.upoly.bar()

    def __eq__(self, other):
        return isinstance(other, SymLaurent) and self.upoly == other.upoly

    def __hash__(self):
        return hash(self.upoly)

    def __str__(self):
        items = self.t_items()
        if not items:
            return "0"
        parts = []
        for k, c in items:
            if k == 0:
                body = str(abs(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"SymLaurent('{self}')"


def _normalize(u: Laurent) -> SymLaurent:
    """Multiply by the unit +-t^k making the value palindromic with 1 at t=1."""
    if not u:
        raise ValueError("zero cannot be an Alexander polynomial")
    center = u.min_exp + u.max_exp
    if center % 4 != 0:
        raise NonIntegralError("cannot center on an integer t-power")
    out = u.shift(-center // 2)
    if out != out.bar():
        raise ValueError("value is not palindromic up to a unit")
    at1 = sum(c for _, c in out.items())
    if at1 == -1:
        out = -out
    elif at1 != 1:
        raise ValueError(f"Delta(1) = {at1}, expected +-1")
    return SymLaurent(out)


def alexander_from_riley(pair: RileyPair) -> SymLaurent:
    """Evaluate f at Ltilde = z^2 (lambda = 0) and read M^2 as t."""
    val = pair.f.evaluate(S_POLY)
    return _normalize(val)


def hat_exponent(eps: EpsilonSeq, i: int) -> int:
    """The single-index hat: -sigma + eps_i + 2*(eps_1 + ... + eps_{i-1})."""
    pre = sum(eps[j] for j in range(i - 1))
    return -eps.sigma + eps[i - 1] + 2 * pre


def alexander_sigma(eps: EpsilonSeq) -> SymLaurent:
    """M^sigma - z * sum over odd i of eps_i M^hat(i), as a t-polynomial."""
    acc = {eps.sigma: 1}
    z = Laurent(-1, (-1, 0, 1))
    for i in range(1, len(eps) + 1, 2):
        term = z.scale(eps[i - 1]).shift(hat_exponent(eps, i))
        for e, c in term.items():
            acc[e] = acc.get(e, 0) - c
    return _normalize(Laurent.from_dict(acc))


def alexander_minkus(eps: EpsilonSeq) -> SymLaurent:
    """Alternating sum of t^(eps_1+...+eps_k), times t^(-sigma/2)."""
    sigma = eps.sigma
    acc: dict[int, int] = {}
    partial = 0
    for k in range(0, len(eps) + 1):
        if k:
            partial += eps[k - 1]
        e = 2 * partial - sigma
        acc[e] = acc.get(e, 0) + (-1 if k % 2 else 1)
    return _normalize(Laurent.from_dict(acc))


def alexander_chebyshev(h: HalfSeq) -> SymLaurent:
    """(-1)^n + sum_i (-1)^(n-i) (t^beta_i + t^-beta_i)."""
    n = h.n
    acc: dict[int, int] = {0: 1 if n % 2 == 0 else -1}
    for i, b in enumerate(h.beta_cheb, start=1):
        s = 1 if (n - i) % 2 == 0 else -1
        for e in (2 * b, -2 * b):
            acc[e] = acc.get(e, 0) + s
    return _normalize(Laurent.from_dict(acc))


def fukuhara_nu(eps: EpsilonSeq) -> list[int]:
    """nu_k = 1 + sum_{i=1..alpha-1} eps_{k+i} under the periodicity
    eps_0 = 1, eps_{alpha+i} = -eps_i."""
    alpha = eps.alpha
    ext = [0] * (2 * alpha)
    ext[0] = 1
    for i in range(1, alpha):
        ext[i] = eps[i - 1]
    for i in range(0, alpha):
        ext[alpha + i] = -ext[i]
    return [1 + sum(ext[k + i] for i in range(1, alpha)) for k in range(1, alpha)]


def alexander_fukuhara(eps: EpsilonSeq) -> SymLaurent:
    """The symmetrized quarter-sum formula; asserts the 1/4's cancel."""
    sigma = eps.sigma
    nu = fukuhara_nu(eps)
    # accumulate 4*Delta in u
    acc: dict[int, int] = {}

    def addm(e: int, c: int):
        acc[e] = acc.get(e, 0) + c

    addm(-sigma, 2)
    addm(sigma, 2)
    for k in range(1, eps.alpha):
        c = (-1 if k % 2 else 1) * eps[k - 1]
        # -c * (u^-1 - u)(u^-nu - u^nu)
        for e, s in ((-1 - nu[k - 1], -1), (-1 + nu[k - 1], 1), (1 - nu[k - 1], 1), (1 + nu[k - 1], -1)):
            addm(e, c * s)
    quad = Laurent.from_dict(acc)
    out = {}
    for e, c in quad.items():
        q, r = divmod(c, 4)
        if r:
            raise NonIntegralError(f"coefficient {c} of u^{e} not divisible by 4")
        out[e] = q
    return _normalize(Laurent.from_dict(out))


# ---------------------------------------------------------------------------
# Chebyshev three-term machinery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChebSpec:
    """g_0 = init_a, g_1 = init_b, g_{k+1} = x g_k - g_{k-1}; value g_n."""

    init_a: Laurent
    init_b: Laurent
    n: int


def chebyshev_eval(spec: ChebSpec, x: Laurent) -> Laurent:
    if spec.n < 0:
        raise ValueError("n must be >= 0")
    a, b = spec.init_a, spec.init_b
    if spec.n == 0:
        return a
    for _ in range(spec.n - 1):
        a, b = b, x * b - a
    return b


def cheb_t(n: int, x: Laurent) -> Laurent:
    return chebyshev_eval(ChebSpec(Laurent.const(2), x, abs(n)), x)


def cheb_s(n: int, x: Laurent) -> Laurent:
    if n < 0:
        return -cheb_s(-n, x)
    return chebyshev_eval(ChebSpec(Laurent.zero(), Laurent.one(), n), x)


def cheb_v(n: int, x: Laurent) -> Laurent:
    return chebyshev_eval(ChebSpec(Laurent.one(), x - Laurent.one(), n), x)


# ---------------------------------------------------------------------------
# the prefix recursion report
# ---------------------------------------------------------------------------


@dataclass
class QCheck:
    name: str
    passed: bool
    detail: str = ""


def q_recursion_check(h: HalfSeq) -> list[QCheck]:
    """Verify Q_n = Delta_n + Delta_{n-1} against the delta-driven
    three-term recursion and the closed Chebyshev value, for all prefixes."""
    checks: list[QCheck] = []
    pair = riley_recursive(h) if h.e else None
    # Delta_k for every prefix, from the Riley history (lambda = 0 slice)
    deltas = [SymLaurent(Laurent.one())]
    if pair is not None:
        for k in range(1, h.n + 1):
            deltas.append(_normalize(pair.f_hist[k].evaluate(S_POLY)))
    tpti = Laurent(-2, (1, 0, 0, 0, 1))  # t + 1/t in u
    qs = [None]
    for k in range(1, h.n + 1):
        qs.append(deltas[k].upoly + deltas[k - 1].upoly)
    ok = all(
        qs[k] == Laurent.from_dict({2 * h.beta_cheb[k - 1]: 1, -2 * h.beta_cheb[k - 1]: 1})
        if h.beta_cheb[k - 1] != 0
        else qs[k] == Laurent.const(2)
        for k in range(1, h.n + 1)
    )
    checks.append(QCheck("q_closed_form", ok))
    ok = all(
        qs[k] == cheb_t(h.beta_cheb[k - 1], tpti) for k in range(1, h.n + 1)
    )
    checks.append(QCheck("q_chebyshev", ok))
    ok = True
    for nn in range(3, h.n + 1):
        d = h.delta[nn - 1]
        alpha_n = tpti if d == 1 else Laurent.zero()
        rhs = alpha_n * qs[nn - 1] - qs[nn - 2].scale(d)
        ok &= qs[nn] == rhs
    checks.append(QCheck("q_three_term", ok))
    # five-way agreement rides along when a full symmetric sequence exists
    if h.e:
        eps = h.to_epsilon()
        vals = {
            "riley": alexander_from_riley(pair),
            "sigma": alexander_sigma(eps),
            "minkus": alexander_minkus(eps),
            "chebyshev": alexander_chebyshev(h),
            "fukuhara": alexander_fukuhara(eps),
        }
        base = vals["riley"]
        for name, v in vals.items():
            if v != base:
                checks.append(QCheck("five_way_agreement", False, name))
                break
        else:
            checks.append(QCheck("five_way_agreement", True))
        checks.append(QCheck("palindromic", base.is_palindromic()))
        checks.append(QCheck("delta_at_one", base.at_one() == 1))
    return checks


def alexander_all_ways(eps: EpsilonSeq) -> dict[str, SymLaurent]:
    """All five formulas for one sequence (they must agree)."""
    h = half_sequences(eps)
    pair = riley_recursive(h)
    return {
        "riley": alexander_from_riley(pair),
        "sigma": alexander_sigma(eps),
        "minkus": alexander_minkus(eps),
        "chebyshev": alexander_chebyshev(h),
        "fukuhara": alexander_fukuhara(eps),
    }
