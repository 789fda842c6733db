"""Two-bridge fractions, sign sequences and the census.

A knot is addressed as a fraction "alpha/beta" with alpha odd and
gcd(alpha, beta) = 1.  Its sign sequence has entries
eps_i = (-1)^floor(i*beta/alpha), which is symmetric (eps_i = eps_{alpha-i})
whenever beta is odd; for an even beta in (0, alpha) the formula is applied
to the odd representative beta + alpha of the same knot.

Sign sequences serialize as strings of '+'/'-'.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


class KnotInputError(ValueError):
    """Invalid knot description, with a machine-readable code."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class TwoBridgeFraction:
    """S(alpha, beta) with alpha odd >= 3, 0 < beta < alpha, coprime."""

    alpha: int
    beta: int

    def __post_init__(self):
        a, b = self.alpha, self.beta
        if a < 3 or a % 2 == 0:
            raise KnotInputError("INVALID_FRACTION", f"alpha must be odd >= 3, got {a}")
        if not (0 < b < a):
            raise KnotInputError("INVALID_FRACTION", f"beta must lie in (0, {a}), got {b}")
        if math.gcd(a, b) != 1:
            raise KnotInputError("INVALID_FRACTION", f"gcd({a}, {b}) != 1")

    def __str__(self):
        return f"{self.alpha}/{self.beta}"


class EpsilonSeq:
    """A symmetric +-1 sequence of even length alpha-1."""

    __slots__ = ("eps",)

    def __init__(self, eps: tuple[int, ...]):
        self.eps = eps

    @property
    def alpha(self) -> int:
        return len(self.eps) + 1

    @property
    def sigma(self) -> int:
        return sum(self.eps)

    def mirror(self) -> "EpsilonSeq":
        return EpsilonSeq(tuple(-e for e in self.eps))

    def half_length(self) -> int:
        return len(self.eps) // 2

    def __len__(self):
        return len(self.eps)

    def __iter__(self):
        return iter(self.eps)

    def __getitem__(self, i):
        return self.eps[i]

    def __eq__(self, other):
        return isinstance(other, EpsilonSeq) and self.eps == other.eps

    def __hash__(self):
        return hash(self.eps)

    def __str__(self):
        return "".join("+" if e > 0 else "-" for e in self.eps)

    def __repr__(self):
        return f"EpsilonSeq('{self}')"

    @classmethod
    def parse(cls, text: str) -> "EpsilonSeq":
        """Parse '+--+' style strings (unicode minus accepted)."""
        vals = []
        for ch in text.strip():
            if ch == "+":
                vals.append(1)
            elif ch in "-−":
                vals.append(-1)
            else:
                raise KnotInputError("NON_UNIT_ENTRY", f"bad sign character {ch!r}")
        return validate_epsilon(vals)


def validate_epsilon(raw) -> EpsilonSeq:
    """Accept a raw +-1 sequence iff it has even length and is symmetric."""
    vals = tuple(raw.eps) if isinstance(raw, EpsilonSeq) else tuple(raw)
    for v in vals:
        if v not in (1, -1):
            raise KnotInputError("NON_UNIT_ENTRY", f"entries must be +-1, got {v!r}")
    if len(vals) == 0 or len(vals) % 2 != 0:
        raise KnotInputError("ODD_LENGTH", f"length must be even and positive, got {len(vals)}")
    n = len(vals) + 1
    for i in range(1, n):
        if vals[i - 1] != vals[n - i - 1]:
            raise KnotInputError("NOT_SYMMETRIC", f"eps_{i} != eps_{n - i}")
    return EpsilonSeq(vals)


def epsilon_from_fraction(fr: TwoBridgeFraction) -> EpsilonSeq:
    """Sign sequence eps_i = (-1)^floor(i*b/alpha) for the odd representative b."""
    a = fr.alpha
    b = fr.beta if fr.beta % 2 == 1 else fr.beta + a
    eps = tuple(-1 if (i * b // a) % 2 else 1 for i in range(1, a))
    return validate_epsilon(eps)


@dataclass(frozen=True)
class HalfSeq:
    """The half sequence e with eps = (e_n, ..., e_1, e_1, ..., e_n),
    its sign-change sequence delta (delta_1 = 1, delta_k = e_{k-1} e_k)
    and the Chebyshev exponents beta_k = sum_{i<=k} delta_1...delta_i."""

    e: tuple[int, ...]
    delta: tuple[int, ...] = field(default=())
    beta_cheb: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.delta and self.e:
            e = self.e
            delta = [1]
            for k in range(1, len(e)):
                delta.append(e[k - 1] * e[k])
            beta = []
            prod = 1
            acc = 0
            for d in delta:
                prod *= d
                acc += prod
                beta.append(acc)
            object.__setattr__(self, "delta", tuple(delta))
            object.__setattr__(self, "beta_cheb", tuple(beta))

    @property
    def n(self) -> int:
        return len(self.e)

    def to_epsilon(self) -> EpsilonSeq:
        return EpsilonSeq(tuple(reversed(self.e)) + self.e)

    def prefix(self, k: int) -> "HalfSeq":
        return HalfSeq(self.e[:k])


def half_sequences(eps: EpsilonSeq) -> HalfSeq:
    """Extract e_k = eps_{n+1-k}; the reconstruction round-trips exactly."""
    n = eps.half_length()
    e = tuple(eps[n - k] for k in range(1, n + 1))
    h = HalfSeq(e)
    assert h.to_epsilon() == eps
    # the closed form beta_i = e_1 (e_1 + ... + e_i) must agree
    acc = 0
    for i, ei in enumerate(e):
        acc += ei
        assert h.beta_cheb[i] == e[0] * acc
    return h


@dataclass(frozen=True)
class EquivalenceReport:
    fraction: TwoBridgeFraction
    orbit: tuple[int, ...]  # {beta, beta^-1 mod alpha}
    mirror_beta: int  # alpha - beta
    amphichiral: bool  # mirror lies in the same orbit


def normalize_fraction(alpha: int, beta_raw: int) -> EquivalenceReport:
    """Reduce beta mod alpha into (0, alpha) and report the equivalence data."""
    if alpha < 3 or alpha % 2 == 0:
        raise KnotInputError("INVALID_FRACTION", f"alpha must be odd >= 3, got {alpha}")
    beta = beta_raw % alpha
    if beta == 0 or math.gcd(alpha, beta) != 1:
        raise KnotInputError("INVALID_FRACTION", f"beta {beta_raw} invalid mod {alpha}")
    inv = pow(beta, -1, alpha)
    orbit = tuple(sorted({beta, inv}))
    mirror = alpha - beta
    return EquivalenceReport(
        fraction=TwoBridgeFraction(alpha, beta),
        orbit=orbit,
        mirror_beta=mirror,
        amphichiral=mirror in orbit,
    )


@dataclass(frozen=True)
class CensusEntry:
    """One knot class: canonical fraction plus its equivalence bookkeeping.

    canonical beta = the smallest odd member of the class folded with its
    mirror {beta, beta^-1, alpha-beta, (alpha-beta)^-1} (mod alpha); beta and
    alpha-beta have opposite parity, so an odd member always exists.
    """

    fraction: TwoBridgeFraction
    orbit: tuple[int, ...]
    mirror_beta: int
    amphichiral: bool

    def __str__(self):
        tag = " (amphichiral)" if self.amphichiral else f" (mirror beta {self.mirror_beta})"
        return f"{self.fraction}{tag}"


def census(max_alpha: int) -> list[CensusEntry]:
    """One entry per knot-and-mirror class for every odd alpha <= max_alpha."""
    out: list[CensusEntry] = []
    for alpha in range(3, max_alpha + 1, 2):
        seen: set[int] = set()
        for beta in range(1, alpha):
            if beta in seen or math.gcd(alpha, beta) != 1:
                continue
            inv = pow(beta, -1, alpha)
            cls = {beta, inv, alpha - beta, (alpha - inv) % alpha}
            seen |= cls
            canonical = min(b for b in cls if b % 2 == 1)
            rep = normalize_fraction(alpha, canonical)
            out.append(
                CensusEntry(
                    fraction=rep.fraction,
                    orbit=rep.orbit,
                    mirror_beta=rep.mirror_beta,
                    amphichiral=rep.amphichiral,
                )
            )
    return out
