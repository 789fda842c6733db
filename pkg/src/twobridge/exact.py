"""Exact arithmetic for the rings used throughout this package.

Everything is built from arbitrary-precision integers; no rounding and no
rational arithmetic anywhere.  The rings are:

  Laurent   -- Z[M, M^-1], dense over a contiguous exponent window.
  LPoly     -- Z[L][M, M^-1], a dense polynomial in L with Laurent
               coefficients (L never appears with negative exponent).
  Poly      -- a dense polynomial in one "main" variable over Laurent or
               LPoly coefficients.  The main variable is tagged (Var) so
               that values living in different variables cannot be mixed
               by accident.
  Bivar     -- Z[L, M], sparse, used for fully cleared end results.
  Mat2      -- 2x2 matrices of Poly sharing one tag.

Laurent multiplication packs the coefficient vector into a single big
integer (one signed limb per coefficient) so that a polynomial product
becomes one Python int multiplication; this is what keeps the resultant
pipeline fast at large alpha.  LPoly multiplication reuses the same trick
through a Kronecker substitution L -> M^T.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence, Union


class ExactError(Exception):
    """Arithmetic-layer error with a machine-readable code."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _tag_mismatch(a, b):
    return ExactError("TAG_MISMATCH", f"cannot mix variables {a} and {b}")


# ---------------------------------------------------------------------------
# Laurent polynomials in M over Z
# ---------------------------------------------------------------------------

_SCHOOLBOOK_CUTOFF = 900  # len(a)*len(b) below this: plain convolution


def _packed_convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact signed convolution via single-big-integer packing."""
    abits = max(abs(c) for c in a).bit_length()
    bbits = max(abs(c) for c in b).bit_length()
    need = abits + bbits + min(len(a), len(b)).bit_length() + 2
    nbytes = (need + 7) // 8
    limb = nbytes * 8
    half = 1 << (limb - 1)

    def pack(cs: Sequence[int]) -> int:
        buf = b"".join((c + half).to_bytes(nbytes, "little") for c in cs)
        u = int.from_bytes(buf, "little")
        ones = ((1 << (limb * len(cs))) - 1) // ((1 << limb) - 1)
        return u - ones * half

    prod = pack(a) * pack(b)
    n_out = len(a) + len(b) - 1
    ones = ((1 << (limb * n_out)) - 1) // ((1 << limb) - 1)
    raw = (prod + ones * half).to_bytes(nbytes * n_out, "little")
    return [
        int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") - half
        for i in range(n_out)
    ]


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) * len(b) <= _SCHOOLBOOK_CUTOFF:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return out
    return _packed_convolve(a, b)


class Laurent:
    """A Laurent polynomial in M with integer coefficients.

    Stored as ``min_exp`` plus the dense coefficient window; the first and
    last stored coefficients are nonzero unless the value is zero, which is
    canonically ``Laurent(0, ())``.

    >>> z = Laurent.term(1, 1) - Laurent.term(1, -1)   # M - 1/M
    >>> z * z
    Laurent('M^-2 - 2 + M^2')
    """

    __slots__ = ("min_exp", "coeffs")

    def __init__(self, min_exp: int, coeffs: Iterable[int], _normalized: bool = False):
        cs = list(coeffs)
        if not _normalized:
            lo = 0
            hi = len(cs)
            while hi > lo and cs[hi - 1] == 0:
                hi -= 1
            while lo < hi and cs[lo] == 0:
                lo += 1
            min_exp += lo
            cs = cs[lo:hi]
            if not cs:
                min_exp = 0
        self.min_exp = min_exp
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Laurent":
        return _L_ZERO

    @classmethod
    def one(cls) -> "Laurent":
        return _L_ONE

    @classmethod
    def const(cls, c: int) -> "Laurent":
        return cls(0, (c,))

    @classmethod
    def term(cls, c: int, e: int) -> "Laurent":
        """The monomial c * M^e."""
        return cls(e, (c,))

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "Laurent":
        if not d:
            return _L_ZERO
        lo = min(d)
        hi = max(d)
        cs = [0] * (hi - lo + 1)
        for e, c in d.items():
            cs[e - lo] = c
        return cls(lo, cs)

    # -- basic queries ------------------------------------------------

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_const(self) -> bool:
        return not self.coeffs or (self.min_exp == 0 and len(self.coeffs) == 1)

    def const_value(self) -> int:
        if not self.coeffs:
            return 0
        if not self.is_const():
            raise ValueError("not a constant")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Laurent)
            and self.min_exp == other.min_exp
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.min_exp, self.coeffs))

    def items(self):
        lo = self.min_exp
        return [(lo + i, c) for i, c in enumerate(self.coeffs) if c]

    def height_l1(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    # -- ring operations ----------------------------------------------

    def __neg__(self) -> "Laurent":
        return Laurent(self.min_exp, [-c for c in self.coeffs], _normalized=True)

    def __add__(self, other: "Laurent") -> "Laurent":
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        cs = [0] * (hi - lo + 1)
        off = self.min_exp - lo
        for i, c in enumerate(self.coeffs):
            cs[off + i] = c
        off = other.min_exp - lo
        for i, c in enumerate(other.coeffs):
            cs[off + i] += c
        return Laurent(lo, cs)

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        if not self.coeffs or not other.coeffs:
            return _L_ZERO
        return Laurent(
            self.min_exp + other.min_exp,
            _convolve(self.coeffs, other.coeffs),
        )

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            raise ValueError("negative power of a non-unit")
        out = _L_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: int) -> "Laurent":
        if c == 0:
            return _L_ZERO
        return Laurent(self.min_exp, [c * x for x in self.coeffs], _normalized=True)

    def shift(self, e: int) -> "Laurent":
        """Multiply by M^e."""
        if not self.coeffs:
            return self
        return Laurent(self.min_exp + e, self.coeffs, _normalized=True)

    def bar(self) -> "Laurent":
        """Substitute M -> 1/M (negate every exponent)."""
        if not self.coeffs:
            return self
        return Laurent(-self.max_exp, tuple(reversed(self.coeffs)), _normalized=True)

    def exact_div(self, d: "Laurent") -> "Laurent":
        """Exact division; raises if d does not divide self."""
        if not d.coeffs:
            raise ZeroDivisionError("division by zero Laurent")
        if not self.coeffs:
            return _L_ZERO
        # divide top-down as ordinary polynomials; track exponent offset
        rem = dict(self.items())
        dlead_e = d.max_exp
        dlead_c = d.coeffs[-1]
        ditems = d.items()
        out: dict[int, int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            q, r = divmod(c, dlead_c)
            if r != 0 or e - dlead_e < self.min_exp - d.min_exp:
                raise ExactError("INEXACT_DIV", "Laurent division is not exact")
            qe = e - dlead_e
            out[qe] = q
            for de, dc in ditems:
                ne = qe + de
                nv = rem.get(ne, 0) - q * dc
                if nv:
                    rem[ne] = nv
                else:
                    rem.pop(ne, None)
        return Laurent.from_dict(out)

    def divisible_by(self, d: "Laurent") -> bool:
        try:
            self.exact_div(d)
            return True
        except ExactError:
            return False

    # -- evaluations and rewrites ---------------------------------------

    def eval_unit(self, m: int, clear: int) -> int:
        """Value of self * M^clear at M = m, which must be an integer."""
        if not self.coeffs:
            return 0
        lo = self.min_exp + clear
        if lo < 0:
            raise ValueError("clearing power too small")
        v = 0
        for c in reversed(self.coeffs):
            v = v * m + c
        return v * m**lo

    def eval_complex(self, m: complex) -> complex:
        v = 0j
        for c in reversed(self.coeffs):
            v = v * m + c
        return v * m**self.min_exp

    def is_symmetric(self) -> bool:
        """True when self(M) == self(1/M)."""
        return self == self.bar()

    def symmetric_to_s(self) -> list[int]:
        """Rewrite a symmetric even Laurent as a polynomial in s = M^2 - 2 + M^-2.

        Returns the coefficient list [c_0, c_1, ...] with self = sum c_j s^j.
        Raises ExactError if self is not in Z[s]; per the underlying theory
        this never happens for Riley-polynomial coefficients.
        """
        s = Laurent(-2, (1, 0, -2, 0, 1), _normalized=True)
        rem = self
        out: dict[int, int] = {}
        while rem:
            e = rem.max_exp
            if e < 0 or e % 2 != 0 or not rem.is_symmetric():
                raise ExactError("NOT_IN_S", "value is not a polynomial in z^2")
            j = e // 2
            c = rem.coeffs[-1]
            out[j] = c
            rem = rem - (s**j).scale(c)
            if rem and rem.max_exp >= e:
                raise ExactError("NOT_IN_S", "s-expansion failed to reduce degree")
        n = max(out) + 1 if out else 0
        cs = [0] * n
        for j, c in out.items():
            cs[j] = c
        return cs

    # -- display --------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                body = str(abs(c))
            else:
                mono = "M" if e == 1 else f"M^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Laurent('{self}')"


_L_ZERO = Laurent(0, (), _normalized=True)
_L_ONE = Laurent(0, (1,), _normalized=True)

# handy constants
M_VAR = Laurent.term(1, 1)
Z_POLY = Laurent(-1, (-1, 0, 1), _normalized=True)  # z = M - 1/M
S_POLY = Laurent(-2, (1, 0, -2, 0, 1), _normalized=True)  # s = z^2
MPMI = Laurent(-1, (1, 0, 1), _normalized=True)  # M + 1/M


# ---------------------------------------------------------------------------
# Z[L] over Laurent coefficients
# ---------------------------------------------------------------------------


class LPoly:
    """A polynomial in L with Laurent coefficients (index = L-degree)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Laurent], _normalized: bool = False):
        cs = list(coeffs)
        if not _normalized:
            while cs and not cs[-1]:
                cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "LPoly":
        return _LP_ZERO

    @classmethod
    def one(cls) -> "LPoly":
        return _LP_ONE

    @classmethod
    def from_laurent(cls, a: Laurent) -> "LPoly":
        return cls((a,)) if a else _LP_ZERO

    @property
    def deg_l(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def coeff(self, k: int) -> Laurent:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _L_ZERO

    def __neg__(self) -> "LPoly":
        return LPoly([-c for c in self.coeffs], _normalized=True)

    def __add__(self, other: "LPoly") -> "LPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return LPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "LPoly") -> "LPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return LPoly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __mul__(self, other: "LPoly") -> "LPoly":
        if not self.coeffs or not other.coeffs:
            return _LP_ZERO
        if len(self.coeffs) == 1:
            a = self.coeffs[0]
            return LPoly([a * c for c in other.coeffs])
        if len(other.coeffs) == 1:
            b = other.coeffs[0]
            return LPoly([c * b for c in self.coeffs])
        return self._mul_kronecker(other)

    def _mul_kronecker(self, other: "LPoly") -> "LPoly":
        """Multiply via L -> M^T for a window T wide enough to avoid overlap."""
        alo = min(c.min_exp for c in self.coeffs if c)
        ahi = max(c.max_exp for c in self.coeffs if c)
        blo = min(c.min_exp for c in other.coeffs if c)
        bhi = max(c.max_exp for c in other.coeffs if c)
        t = (ahi - alo) + (bhi - blo) + 1

        def pack(cs: Sequence[Laurent], lo: int) -> list[int]:
            buf = [0] * ((len(cs) - 1) * t + (ahi - alo) + (bhi - blo) + 1)
            for i, c in enumerate(cs):
                base = i * t - lo
                for e, v in c.items():
                    buf[base + e] = v
            return buf

        pa = pack(self.coeffs, alo)
        pb = pack(other.coeffs, blo)
        prod = _convolve(pa, pb)
        lo = alo + blo
        n_out = len(self.coeffs) + len(other.coeffs) - 1
        out = []
        for i in range(n_out):
            seg = prod[i * t : i * t + t]
            out.append(Laurent(lo, seg))
        return LPoly(out)

    def __pow__(self, n: int) -> "LPoly":
        out = _LP_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale_laurent(self, a: Laurent) -> "LPoly":
        if not a:
            return _LP_ZERO
        return LPoly([c * a for c in self.coeffs])

    def bar(self) -> "LPoly":
        return LPoly([c.bar() for c in self.coeffs], _normalized=True)

    def shift_m(self, e: int) -> "LPoly":
        return LPoly([c.shift(e) for c in self.coeffs], _normalized=True)

    def exact_div(self, d: "LPoly") -> "LPoly":
        if not d:
            raise ZeroDivisionError("division by zero LPoly")
        if not self:
            return _LP_ZERO
        if len(d.coeffs) == 1:
            dl = d.coeffs[0]
            return LPoly([c.exact_div(dl) for c in self.coeffs], _normalized=True)
        rem = list(self.coeffs)
        dl = d.coeffs[-1]
        nd = len(d.coeffs)
        nq = len(rem) - nd + 1
        if nq <= 0:
            raise ExactError("INEXACT_DIV", "LPoly division is not exact")
        q: list[Laurent] = [_L_ZERO] * nq
        for k in range(nq - 1, -1, -1):
            c = rem[k + nd - 1].exact_div(dl)
            q[k] = c
            if c:
                for j, dj in enumerate(d.coeffs):
                    rem[k + j] = rem[k + j] - c * dj
        if any(rem[: nd - 1]):
            raise ExactError("INEXACT_DIV", "LPoly division left a remainder")
        return LPoly(q, _normalized=True)

    def min_m_exp(self) -> int:
        return min(c.min_exp for c in self.coeffs if c)

    def max_m_exp(self) -> int:
        return max(c.max_exp for c in self.coeffs if c)

    def height_l1(self) -> int:
        return sum(c.height_l1() for c in self.coeffs)

    def eval_l_int(self, ell: int) -> Laurent:
        out = _L_ZERO
        for c in reversed(self.coeffs):
            out = out.scale(ell) + c if out else c
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(f"({c})")
            elif i == 1:
                parts.append(f"({c})*L")
            else:
                parts.append(f"({c})*L^{i}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LPoly('{self}')"


_LP_ZERO = LPoly((), _normalized=True)
_LP_ONE = LPoly((_L_ONE,), _normalized=True)

Coeff = Union[Laurent, LPoly]


# ---------------------------------------------------------------------------
# Main-variable polynomials
# ---------------------------------------------------------------------------


class Var(enum.Enum):
    """Tag for the main variable of a Poly."""

    LT = "Ltilde"  # lambda-tilde = tr(rho(x)rho(y)) - 2
    LAM = "lambda"  # lambda = 2 - tr(rho(x)rho(y)^-1)
    L = "L"  # longitude eigenvalue


class Poly:
    """Dense polynomial in one tagged variable over Laurent or LPoly coefficients."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var: Var, coeffs: Iterable[Coeff], _normalized: bool = False):
        cs = list(coeffs)
        if not _normalized:
            while cs and not cs[-1]:
                cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, var: Var) -> "Poly":
        return cls(var, (), _normalized=True)

    @classmethod
    def const(cls, var: Var, c: Coeff) -> "Poly":
        return cls(var, (c,))

    @classmethod
    def variable(cls, var: Var) -> "Poly":
        return cls(var, (_L_ZERO, _L_ONE), _normalized=True)

    @classmethod
    def from_int_coeffs(cls, var: Var, ints: Iterable[int]) -> "Poly":
        return cls(var, [Laurent.const(c) for c in ints])

    # -- queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.var == other.var
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def coeff(self, k: int) -> Coeff:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _L_ZERO if not self.coeffs or isinstance(self.coeffs[0], Laurent) else _LP_ZERO

    @property
    def lc(self) -> Coeff:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other: "Poly"):
        if self.var is not other.var:
            raise _tag_mismatch(self.var, other.var)

    # -- ring operations --------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly(self.var, [-c for c in self.coeffs], _normalized=True)

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.var, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.coeffs:
            return -other
        if not other.coeffs:
            return self
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.var, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.var)
        out = [self.coeffs[0] - self.coeffs[0]] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Poly(self.var, out)

    def scalar_mul(self, c: Coeff) -> "Poly":
        if not c:
            return Poly.zero(self.var)
        return Poly(self.var, [a * c for a in self.coeffs])

    def shift_var(self, k: int) -> "Poly":
        """Multiply by var^k."""
        if not self.coeffs:
            return self
        pad = (_L_ZERO if isinstance(self.coeffs[0], Laurent) else _LP_ZERO,) * k
        return Poly(self.var, pad + self.coeffs, _normalized=True)

    def bar(self) -> "Poly":
        """M -> 1/M on every coefficient."""
        return Poly(self.var, [c.bar() for c in self.coeffs], _normalized=True)

    def derivative(self) -> "Poly":
        if len(self.coeffs) <= 1:
            return Poly.zero(self.var)
        return Poly(
            self.var,
            [c.scale(i) if isinstance(c, Laurent) else c.scale_laurent(Laurent.const(i))
             for i, c in enumerate(self.coeffs)][1:],
        )

    def evaluate(self, value: Coeff) -> Coeff:
        """Horner evaluation of the main variable at a coefficient-ring value."""
        if not self.coeffs:
            return _L_ZERO
        out = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            out = out * value + c
        return out

    def retag(self, var: Var) -> "Poly":
        return Poly(var, self.coeffs, _normalized=True)

    def compose_shift(self, shift: Laurent, new_var: Var) -> "Poly":
        """Substitute main variable = (new variable + shift), exactly.

        With shift = z^2 this converts a Ltilde-polynomial to its
        lambda-form and vice versa (using -z^2).
        """
        out = Poly.zero(new_var)
        x_plus = Poly(new_var, (shift, _L_ONE))
        for c in reversed(self.coeffs):
            out = out * x_plus + Poly.const(new_var, c)
        return out

    def lift_l(self) -> "Poly":
        """Lift Laurent coefficients into LPoly ones (no-op if already lifted)."""
        if not self.coeffs or isinstance(self.coeffs[0], LPoly):
            return self
        return Poly(self.var, [LPoly.from_laurent(c) for c in self.coeffs], _normalized=True)

    def eval_complex(self, m: complex) -> list[complex]:
        """Coefficients specialized at M = m (Laurent coefficients only)."""
        return [c.eval_complex(m) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        name = {"Ltilde": "lt", "lambda": "lam", "L": "L"}[self.var.value]
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(f"({c})")
            elif i == 1:
                parts.append(f"({c})*{name}")
            else:
                parts.append(f"({c})*{name}^{i}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Poly[{self.var.value}]('{self}')"


def poly_one(var: Var) -> Poly:
    return Poly(var, (_L_ONE,), _normalized=True)


# ---------------------------------------------------------------------------
# 2x2 matrices
# ---------------------------------------------------------------------------


class Mat2:
    """A 2x2 matrix of Poly entries sharing one variable tag."""

    __slots__ = ("a11", "a12", "a21", "a22")

    def __init__(self, a11: Poly, a12: Poly, a21: Poly, a22: Poly):
        var = a11.var
        for e in (a12, a21, a22):
            if e.var is not var:
                raise _tag_mismatch(var, e.var)
        self.a11, self.a12, self.a21, self.a22 = a11, a12, a21, a22

    @classmethod
    def identity(cls, var: Var) -> "Mat2":
        one = poly_one(var)
        zero = Poly.zero(var)
        return cls(one, zero, zero, one)

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def det(self) -> Poly:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> Poly:
        return self.a11 + self.a22

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat2)
            and self.a11 == other.a11
            and self.a12 == other.a12
            and self.a21 == other.a21
            and self.a22 == other.a22
        )

    def __repr__(self):
        return f"Mat2({self.a11!r}, {self.a12!r}, {self.a21!r}, {self.a22!r})"


# ---------------------------------------------------------------------------
# Cleared bivariate polynomials in (L, M) over Z
# ---------------------------------------------------------------------------


class Bivar:
    """Sparse integer polynomial in (L, M), both exponents >= 0.

    Canonical term order is L-major then M; no zero coefficients stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], int]):
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def zero(cls) -> "Bivar":
        return cls({})

    @classmethod
    def from_lpoly(cls, p: LPoly) -> tuple["Bivar", int]:
        """Clear M-denominators by the minimal power; returns (poly, shift).

        poly == p * M^shift with all M-exponents >= 0.
        """
        if not p:
            return cls({}), 0
        shift = -p.min_m_exp()
        if shift < 0:
            shift = 0
        terms: dict[tuple[int, int], int] = {}
        for dl, c in enumerate(p.coeffs):
            for e, v in c.items():
                terms[(dl, e + shift)] = v
        return cls(terms), shift

    def to_lpoly(self) -> LPoly:
        if not self.terms:
            return _LP_ZERO
        deg = max(dl for dl, _ in self.terms)
        per: list[dict[int, int]] = [dict() for _ in range(deg + 1)]
        for (dl, dm), v in self.terms.items():
            per[dl][dm] = v
        return LPoly([Laurent.from_dict(d) for d in per])

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Bivar) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __neg__(self) -> "Bivar":
        return Bivar({k: -v for k, v in self.terms.items()})

    def __add__(self, other: "Bivar") -> "Bivar":
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return Bivar(out)

    def __sub__(self, other: "Bivar") -> "Bivar":
        return self + (-other)

    def __mul__(self, other: "Bivar") -> "Bivar":
        out: dict[tuple[int, int], int] = {}
        for (al, am), av in self.terms.items():
            for (bl, bm), bv in other.terms.items():
                k = (al + bl, am + bm)
                nv = out.get(k, 0) + av * bv
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return Bivar(out)

    def scale(self, c: int) -> "Bivar":
        if c == 0:
            return Bivar({})
        return Bivar({k: c * v for k, v in self.terms.items()})

    def deg_l(self) -> int:
        return max((dl for dl, _ in self.terms), default=-1)

    def deg_m(self) -> int:
        return max((dm for _, dm in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """(deg_L, deg_M, coeff) in canonical L-major descending order."""
        return [
            (dl, dm, self.terms[(dl, dm)])
            for dl, dm in sorted(self.terms, reverse=True)
        ]

    def content(self) -> int:
        import math

        g = 0
        for v in self.terms.values():
            g = math.gcd(g, abs(v))
            if g == 1:
                break
        return g

    def common_monomial(self) -> tuple[int, int]:
        if not self.terms:
            return (0, 0)
        return (
            min(dl for dl, _ in self.terms),
            min(dm for _, dm in self.terms),
        )

    def shift_down(self, a: int, b: int) -> "Bivar":
        return Bivar({(dl - a, dm - b): v for (dl, dm), v in self.terms.items()})

    def exact_div_int(self, c: int) -> "Bivar":
        out = {}
        for k, v in self.terms.items():
            q, r = divmod(v, c)
            if r:
                raise ExactError("INEXACT_DIV", "integer content division not exact")
            out[k] = q
        return Bivar(out)

    def mirror_l(self) -> "Bivar":
        """Substitute L -> 1/L and clear: the A-polynomial mirror move."""
        if not self.terms:
            return self
        top = self.deg_l()
        return Bivar({(top - dl, dm): v for (dl, dm), v in self.terms.items()})

    def eval_complex(self, lv: complex, mv: complex) -> complex:
        return sum(v * lv**dl * mv**dm for (dl, dm), v in self.terms.items())

    def max_abs_term(self, lv: complex, mv: complex) -> float:
        return max(
            (abs(v) * abs(lv) ** dl * abs(mv) ** dm for (dl, dm), v in self.terms.items()),
            default=0.0,
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for dl, dm, v in self.sorted_terms():
            body = []
            if abs(v) != 1 or (dl == 0 and dm == 0):
                body.append(str(abs(v)))
            if dl:
                body.append("L" if dl == 1 else f"L^{dl}")
            if dm:
                body.append("M" if dm == 1 else f"M^{dm}")
            parts.append(("- " if v < 0 else "+ ") + "*".join(body))
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Bivar('{self}')"
