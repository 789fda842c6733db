"""Resultants, GCDs and squarefree decomposition over the exact rings.

Two independent resultant strategies are provided:

  "prs"        -- the classical subresultant polynomial-remainder sequence
                  (default; all divisions are exact by subresultant theory
                  and are asserted to be exact).
  "evalinterp" -- evaluate M at integer points 1, -1, 2, -2, ... (skipping
                  points where a leading coefficient vanishes), take integer
                  resultants, and interpolate.  The M-degree window comes
                  from the Sylvester matrix entries' M-spans via a
                  max/min-weight assignment, and the interpolation runs
                  modulo enough 31-bit primes for a Hadamard-style height
                  bound, recombined by CRT.

Both return the resultant exactly (sign included), so their raw outputs are
bit-identical; a fraction-free Sylvester determinant (Bareiss) is kept as a
slow third path for cross-validation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

from .exact import (
    Bivar,
    Coeff,
    ExactError,
    Laurent,
    LPoly,
    Poly,
)

# ---------------------------------------------------------------------------
# generic helpers over a coefficient domain (int, Laurent or LPoly)
# ---------------------------------------------------------------------------

Dom = Union[int, Laurent, LPoly]


def _exact_div(a: Dom, b: Dom) -> Dom:
    if isinstance(a, int):
        q, r = divmod(a, b)
        if r:
            raise ExactError("INEXACT_DIV", "integer division not exact")
        return q
    return a.exact_div(b)


def _zero_like(x: Dom) -> Dom:
    if isinstance(x, int):
        return 0
    return type(x).zero()


def prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b."""
    if not b:
        raise ZeroDivisionError("pseudo-division by zero")
    db = b.degree
    lb = b.lc
    r = a
    e = a.degree - db + 1
    while r and r.degree >= db:
        r = r.scalar_mul(lb) - b.shift_var(r.degree - db).scalar_mul(r.lc)
        e -= 1
    if e > 0:
        r = r.scalar_mul(lb**e)
    return r


def rem_monic(a: Poly, b: Poly) -> Poly:
    """Exact remainder of a mod b when lc(b) is a unit (+-M^k)."""
    db = b.degree
    lb = b.lc
    r = a
    while r and r.degree >= db:
        q = _exact_div(r.lc, lb)
        r = r - b.shift_var(r.degree - db).scalar_mul(q)
    return r


def _poly_div_coeff(a: Poly, c: Dom) -> Poly:
    return Poly(a.var, [_exact_div(x, c) for x in a.coeffs], _normalized=True)


# ---------------------------------------------------------------------------
# subresultant PRS resultant
# ---------------------------------------------------------------------------


def resultant_prs(p: Poly, q: Poly) -> Coeff:
    """Resultant of p and q in their shared main variable, by subresultants."""
    if not p or not q:
        raise ExactError("EMPTY_INPUT", "resultant of a zero polynomial")
    p._check(q)
    m, n = p.degree, q.degree
    if m < n:
        r = resultant_prs(q, p)
        return -r if (m * n) % 2 else r
    if n == 0:
        if m == 0:
            c = q.coeffs[0]
            return _exact_div(c, c)  # one, in the right domain
        return q.coeffs[0] ** m
    s = q.lc ** (m - n)
    a = q
    b = prem(p, -q)
    while True:
        if not b:
            return _zero_like(a.lc)  # nontrivial gcd
        d, e = a.degree, b.degree
        delta = d - e
        if delta > 1:
            c = _poly_div_coeff(b.scalar_mul(b.lc ** (delta - 1)), s ** (delta - 1))
        else:
            c = b
        if e == 0:
            return c.coeffs[0]
        b = _poly_div_coeff(prem(a, -b), s**delta * a.lc)
        a = c
        s = a.lc


# ---------------------------------------------------------------------------
# fraction-free Sylvester determinant (test oracle / reference path)
# ---------------------------------------------------------------------------


def sylvester_matrix(p: Poly, q: Poly) -> list[list[Dom]]:
    """The (m+n) x (m+n) Sylvester matrix, rows in descending coefficients."""
    m, n = p.degree, q.degree
    size = m + n
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    zero = _zero_like(p.lc)
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(pc) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(qc) + [zero] * (size - n - 1 - i))
    return rows


def resultant_sylvester(p: Poly, q: Poly) -> Coeff:
    """Resultant by fraction-free (Bareiss) elimination of the Sylvester matrix."""
    if not p or not q:
        raise ExactError("EMPTY_INPUT", "resultant of a zero polynomial")
    m, n = p.degree, q.degree
    if m == 0 and n == 0:
        return _exact_div(p.coeffs[0], p.coeffs[0])
    rows = sylvester_matrix(p, q)
    size = len(rows)
    sign = 1
    prev = None
    for k in range(size - 1):
        if not rows[k][k]:
            for i in range(k + 1, size):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return _zero_like(rows[0][0])
        piv = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                v = piv * rows[i][j] - rows[i][k] * rows[k][j]
                rows[i][j] = _exact_div(v, prev) if prev is not None else v
            rows[i][k] = _zero_like(piv)
        prev = piv
    det = rows[size - 1][size - 1]
    return -det if sign < 0 else det


# ---------------------------------------------------------------------------
# integer polynomial resultant (hot path of the interpolation strategy)
# ---------------------------------------------------------------------------


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    e = len(a) - 1 - db + 1
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for j, bc in enumerate(b):
            r[shift + j] -= lr * bc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        f = lb**e
        r = [c * f for c in r]
    return r


def int_resultant(a: list[int], b: list[int]) -> int:
    """Resultant of two integer polynomials (ascending coefficient lists)."""
    a = list(a)
    b = list(b)
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a or not b:
        raise ExactError("EMPTY_INPUT", "resultant of a zero polynomial")
    m, n = len(a) - 1, len(b) - 1
    if m < n:
        r = int_resultant(b, a)
        return -r if (m * n) % 2 else r
    if n == 0:
        return b[0] ** m if m else 1
    s = b[-1] ** (m - n)
    A = b
    B = _int_prem(a, [-c for c in b])
    while True:
        while B and B[-1] == 0:
            B.pop()
        if not B:
            return 0
        d, e = len(A) - 1, len(B) - 1
        delta = d - e
        if delta > 1:
            num = B[-1] ** (delta - 1)
            den = s ** (delta - 1)
            C = [_exact_div(c * num, den) for c in B]
        else:
            C = B
        if e == 0:
            return C[0]
        nB = _int_prem(A, [-c for c in B])
        den = s**delta * A[-1]
        B = [_exact_div(c, den) for c in nB]
        A = C
        s = A[-1]


# ---------------------------------------------------------------------------
# evaluation-interpolation resultant
# ---------------------------------------------------------------------------


def _point_sequence():
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for base in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_31bit(count: int) -> list[int]:
    out = []
    n = (1 << 31) - 1
    while len(out) < count:
        if _is_prime(n):
            out.append(n)
        n -= 2
    return out


_PRIME_POOL: list[int] = []


def _get_primes(count: int) -> list[int]:
    if len(_PRIME_POOL) < count:
        _PRIME_POOL[:] = _primes_31bit(count + 8)
    return _PRIME_POOL[:count]


_VANDER_CACHE: dict[tuple[int, ...], tuple[list[list[int]], int]] = {}


def _vander_inverse(nodes: tuple[int, ...]) -> tuple[list[list[int]], int]:
    """Integer matrix W and denominator D with V^-1 = W / D for the
    Vandermonde matrix V[i][j] = nodes[i]**j."""
    got = _VANDER_CACHE.get(nodes)
    if got is not None:
        return got
    k = len(nodes)
    aug = [
        [Fraction(nodes[i] ** j) for j in range(k)]
        + [Fraction(1 if j == i else 0) for j in range(k)]
        for i in range(k)
    ]
    for col in range(k):
        piv = next(i for i in range(col, k) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(k):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    inv = [row[k:] for row in aug]
    den = 1
    for row in inv:
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
    w = [[int(x * den) for x in row] for row in inv]
    _VANDER_CACHE[nodes] = (w, den)
    return w, den


def _assignment_bound(spans: list[list[tuple[int, int] | None]]) -> tuple[int, int] | None:
    """Sharp [min,max] M-exponent window of det via max/min weight matchings."""
    import numpy as np
    from scipy.optimize import linear_sum_assignment

    size = len(spans)
    big = 1 << 40
    hi = np.full((size, size), -big, dtype=np.int64)
    lo = np.full((size, size), big, dtype=np.int64)
    for i in range(size):
        for j in range(size):
            sp = spans[i][j]
            if sp is not None:
                lo[i][j], hi[i][j] = sp
    r, c = linear_sum_assignment(hi, maximize=True)
    top = int(hi[r, c].sum())
    if top < -(big >> 1):
        return None
    r, c = linear_sum_assignment(lo, maximize=False)
    bot = int(lo[r, c].sum())
    if bot > (big >> 1):
        return None
    return bot, top


def _entry_spans(p: Poly, q: Poly) -> list[list[tuple[int, int] | None]]:
    m, n = p.degree, q.degree

    def span(c) -> tuple[int, int] | None:
        if not c:
            return None
        if isinstance(c, Laurent):
            return c.min_exp, c.max_exp
        return c.min_m_exp(), c.max_m_exp()

    pc = [span(c) for c in reversed(p.coeffs)]
    qc = [span(c) for c in reversed(q.coeffs)]
    size = m + n
    rows = []
    for i in range(n):
        rows.append([None] * i + pc + [None] * (size - m - 1 - i))
    for i in range(m):
        rows.append([None] * i + qc + [None] * (size - n - 1 - i))
    return rows


def _height_bits(p: Poly, q: Poly) -> int:
    """Hadamard-style bound on result coefficient bits: prod of row 1-norms."""
    m, n = p.degree, q.degree

    def row_norm(poly: Poly) -> float:
        t = 0
        for c in poly.coeffs:
            t += c.height_l1()
        return max(t, 2)

    bits = n * math.log2(row_norm(p)) + m * math.log2(row_norm(q))
    return int(bits) + 4


def _lagrange_mod_p(xs: list[int], values, p: int):
    """Interpolated coefficients mod p for several value-columns at once.

    xs: nodes; values: numpy int64 array (len(xs), k) already reduced mod p.
    Returns numpy int64 array (len(xs), k): coefficient rows (ascending).
    """
    import numpy as np

    n = len(xs)
    x = np.array([v % p for v in xs], dtype=np.int64)
    # master poly W(t) = prod (t - x_i), ascending coefficients mod p
    w = np.zeros(n + 1, dtype=np.int64)
    w[0] = 1
    for i in range(n):
        shifted = np.zeros(n + 1, dtype=np.int64)
        shifted[1 : i + 2] = w[: i + 1]
        w = (shifted - x[i] * w) % p
    # rows of Q[i] = W / (t - x_i) via synthetic division, vectorized over i
    q = np.zeros((n, n), dtype=np.int64)
    q[:, n - 1] = w[n]
    for k in range(n - 2, -1, -1):
        q[:, k] = (w[k + 1] + x * q[:, k + 1]) % p
    # barycentric weights 1 / W'(x_i) = 1 / Q_i(x_i)
    acc = q[:, n - 1].copy()
    for k in range(n - 2, -1, -1):
        acc = (acc * x + q[:, k]) % p
    inv_wx = np.array([pow(int(v), p - 2, p) for v in acc], dtype=np.int64)
    scaled = values * inv_wx[:, None] % p
    # overflow-safe modular matmul: split the right factor into 16-bit halves
    s_hi = scaled >> 16
    s_lo = scaled & 0xFFFF
    qt = q.T
    return ((qt.dot(s_hi) % p << 16) + qt.dot(s_lo)) % p  # (n coeffs, k cols)


def _crt_balanced(residues: Sequence[int], primes: Sequence[int]) -> int:
    x = 0
    prod = 1
    for r, p in zip(residues, primes):
        # incremental CRT
        t = (r - x) * pow(prod % p, p - 2, p) % p
        x += prod * t
        prod *= p
    if x > prod // 2:
        x -= prod
    return x


def resultant_evalinterp(p: Poly, q: Poly) -> Coeff:
    """Resultant by integer evaluation of M and exact interpolation."""
    if not p or not q:
        raise ExactError("EMPTY_INPUT", "resultant of a zero polynomial")
    p._check(q)
    m, n = p.degree, q.degree
    if m < n:
        r = resultant_evalinterp(q, p)
        return -r if (m * n) % 2 else r
    if n == 0:
        if m == 0:
            c = q.coeffs[0]
            return _exact_div(c, c)
        return q.coeffs[0] ** m

    pure_laurent = isinstance(p.lc, Laurent) and isinstance(q.lc, Laurent)
    pl = p.lift_l()
    ql = q.lift_l()

    # clear M so every exponent is >= 0 and as small as possible
    u = -min(c.min_m_exp() for c in pl.coeffs if c)
    v = -min(c.min_m_exp() for c in ql.coeffs if c)
    pl = Poly(pl.var, [c.shift_m(u) for c in pl.coeffs], _normalized=True)
    ql = Poly(ql.var, [c.shift_m(v) for c in ql.coeffs], _normalized=True)
    back_shift = u * n + v * m

    window = _assignment_bound(_entry_spans(pl, ql))
    zero_out: Coeff = Laurent.zero() if pure_laurent else LPoly.zero()
    if window is None:
        return zero_out
    lo, hi = window
    npoints = hi - lo + 1

    deg_l = n * max((c.deg_l for c in pl.coeffs if c), default=0) + m * max(
        (c.deg_l for c in ql.coeffs if c), default=0
    )

    # gather evaluation points, skipping vanishing leading coefficients
    pts: list[int] = []
    evals: list[tuple[list[list[int]], list[list[int]]]] = []
    gen = _point_sequence()
    while len(pts) < npoints:
        mm = next(gen)
        pe = [[cl.eval_unit(mm, 0) for cl in c.coeffs] for c in pl.coeffs]
        qe = [[cl.eval_unit(mm, 0) for cl in c.coeffs] for c in ql.coeffs]
        if not any(pe[-1]) or not any(qe[-1]):
            continue
        pts.append(mm)
        evals.append((pe, qe))

    # per point: integer resultants over L-nodes, then unmix the L-degrees
    coeff_cols: list[list[int]] = []  # per point, list of deg_l+1 ints
    lseq = [0]
    k = 1
    while len(lseq) < deg_l + 16:
        lseq.extend((k, -k))
        k += 1
    for (pe, qe) in evals:
        nodes = []
        vals = []
        for ell in lseq:
            if len(nodes) == deg_l + 1:
                break
            pa = [sum(cs[i] * ell**i for i in range(len(cs))) for cs in pe]
            qa = [sum(cs[i] * ell**i for i in range(len(cs))) for cs in qe]
            if pa[-1] == 0 or qa[-1] == 0:
                continue
            nodes.append(ell)
            vals.append(int_resultant(pa, qa))
        if len(nodes) < deg_l + 1:
            raise ExactError("EVAL_NODES", "could not find enough L nodes")
        w, den = _vander_inverse(tuple(nodes))
        col = []
        for j in range(deg_l + 1):
            s = sum(w[j][t] * vals[t] for t in range(len(nodes)))
            col.append(_exact_div(s, den))
        coeff_cols.append(col)

    # shift values so the target becomes an ordinary polynomial of degree
    # npoints-1 in m: with exponents in [lo, hi], multiply by m^-lo
    shifted: list[list[int]] = []
    for mm, col in zip(pts, coeff_cols):
        if lo >= 0:
            d = mm**lo
            shifted.append([_exact_div(vj, d) for vj in col])
        else:
            f = mm ** (-lo)
            shifted.append([vj * f for vj in col])

    nprimes = max(2, (_height_bits(pl, ql) + 32) // 30)
    result_laurents = _interpolate_columns(pts, shifted, deg_l + 1, nprimes, lo)

    out = LPoly(result_laurents).shift_m(-back_shift)
    if pure_laurent:
        if out.deg_l > 0:
            raise ExactError("EVAL_INTERP", "unexpected L content in resultant")
        return out.coeff(0)
    return out


def _interpolate_columns(
    pts: list[int], shifted: list[list[int]], ncols: int, nprimes: int, lo: int
) -> list[Laurent]:
    import numpy as np

    npoints = len(pts)
    primes = _get_primes(nprimes)
    per_prime = []
    for p in primes:
        vals = np.empty((npoints, ncols), dtype=np.int64)
        for t in range(npoints):
            row = shifted[t]
            for j in range(ncols):
                vals[t, j] = row[j] % p
        per_prime.append(_lagrange_mod_p(pts, vals, p))
    out = []
    for j in range(ncols):
        d: dict[int, int] = {}
        for e in range(npoints):
            residues = [int(per_prime[i][e, j]) for i in range(nprimes)]
            c = _crt_balanced(residues, primes)
            if c:
                d[e + lo] = c
        out.append(Laurent.from_dict(d))
    return out


# ---------------------------------------------------------------------------
# public resultant entry point
# ---------------------------------------------------------------------------

STRATEGIES = ("prs", "evalinterp")


def resultant(p: Poly, q: Poly, strategy: str = "prs") -> Coeff:
    """Resultant of p, q in their shared main variable.

    The result is free of that variable: a Laurent for Laurent-coefficient
    inputs, an LPoly when either carries the longitude variable.
    """
    if strategy == "prs":
        return resultant_prs(p, q)
    if strategy == "evalinterp":
        return resultant_evalinterp(p, q)
    if strategy == "sylvester":
        return resultant_sylvester(p, q)
    raise ValueError(f"unknown strategy {strategy!r}")


# ---------------------------------------------------------------------------
# GCDs (for squarefree decomposition)
# ---------------------------------------------------------------------------


def _int_list_content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, abs(c))
        if g == 1:
            break
    return g


def _int_list_primitive(a: list[int]) -> list[int]:
    g = _int_list_content(a)
    if g in (0, 1):
        out = list(a)
    else:
        out = [c // g for c in a]
    if out and out[-1] < 0:
        out = [-c for c in out]
    return out


def int_poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """GCD in Z[x] (ascending lists), primitive with positive leading coeff,
    times the integer content gcd.  Subresultant chain: no coefficient blowup."""
    a = [c for c in a]
    b = [c for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a:
        return _int_list_primitive(b) if b else []
    if not b:
        return _int_list_primitive(a)
    g = math.gcd(_int_list_content(a), _int_list_content(b))
    a = _int_list_primitive(a)
    b = _int_list_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        return [g]
    s = b[-1] ** (len(a) - len(b))
    A = b
    B = _int_prem(a, [-c for c in b])
    while True:
        while B and B[-1] == 0:
            B.pop()
        if not B:
            out = _int_list_primitive(A)
            return [c * g for c in out]
        if len(B) == 1:
            return [g]
        delta = len(A) - len(B)
        if delta > 1:
            num = B[-1] ** (delta - 1)
            den = s ** (delta - 1)
            C = [_exact_div(c * num, den) for c in B]
        else:
            C = B
        den = s**delta * A[-1]
        B = [_exact_div(c, den) for c in _int_prem(A, [-c2 for c2 in B])]
        A = C
        s = A[-1]


def laurent_gcd(a: Laurent, b: Laurent) -> Laurent:
    """GCD in Z[M, 1/M] normalized with min_exp 0 and positive lead."""
    if not a:
        return _laurent_canon(b)
    if not b:
        return _laurent_canon(a)
    g = int_poly_gcd(list(a.coeffs), list(b.coeffs))
    return Laurent(0, g)


def _laurent_canon(a: Laurent) -> Laurent:
    if not a:
        return a
    out = Laurent(0, a.coeffs, _normalized=True)
    if out.coeffs[-1] < 0:
        out = -out
    return out


def _lpoly_content(a: LPoly) -> Laurent:
    g = Laurent.zero()
    for c in a.coeffs:
        g = laurent_gcd(g, c)
        if g.is_const() and abs(g.const_value()) == 1:
            break
    return g


def _lpoly_primitive(a: LPoly) -> LPoly:
    if not a:
        return a
    g = _lpoly_content(a)
    out = LPoly([c.exact_div(g) for c in a.coeffs], _normalized=True)
    # normalize the unit: strip the common M-monomial, make top-lead positive
    out = out.shift_m(-out.min_m_exp())
    if out.coeffs[-1].coeffs[-1] < 0:
        out = -out
    return out


def lpoly_gcd(a: LPoly, b: LPoly) -> LPoly:
    """GCD in Z[L][M, 1/M] up to unit, content included, canonical sign.

    Subresultant chain on the content-free parts; two content-free
    polynomials with a constant-in-L remainder are coprime."""
    if not a:
        return _lpoly_primitive(b).scale_laurent(_lpoly_content(b)) if b else b
    if not b:
        return _lpoly_primitive(a).scale_laurent(_lpoly_content(a))
    cont = laurent_gcd(_lpoly_content(a), _lpoly_content(b))
    pa, pb = _lpoly_primitive(a), _lpoly_primitive(b)
    if pa.deg_l < pb.deg_l:
        pa, pb = pb, pa
    if pb.deg_l == 0:
        return LPoly.from_laurent(cont)
    s = pb.coeffs[-1] ** (pa.deg_l - pb.deg_l)
    A = pb
    B = _lp_prem(pa, -pb)
    while True:
        if not B:
            return _lpoly_primitive(A).scale_laurent(cont)
        if B.deg_l == 0:
            return LPoly.from_laurent(cont)
        delta = A.deg_l - B.deg_l
        if delta > 1:
            num = B.coeffs[-1] ** (delta - 1)
            den = s ** (delta - 1)
            C = LPoly([c * num for c in B.coeffs]).exact_div(LPoly.from_laurent(den))
        else:
            C = B
        den = s**delta * A.coeffs[-1]
        B = _lp_prem(A, -B).exact_div(LPoly.from_laurent(den))
        A = C
        s = A.coeffs[-1]


def _lp_prem(a: LPoly, b: LPoly) -> LPoly:
    db = b.deg_l
    lb = b.coeffs[-1]
    r = a
    e = a.deg_l - db + 1
    while r and r.deg_l >= db:
        shift = r.deg_l - db
        lr = r.coeffs[-1]
        rb = LPoly((Laurent.zero(),) * shift + b.coeffs).scale_laurent(lr)
        r = r.scale_laurent(lb) - rb
        e -= 1
    if e > 0:
        r = r.scale_laurent(lb**e)
    return r


# ---------------------------------------------------------------------------
# content / unit normalization and squarefree part of Bivar results
# ---------------------------------------------------------------------------


class UnitReport:
    """The unit removed from a raw bivariate result during normalization."""

    __slots__ = ("content", "mono_l", "mono_m", "sign")

    def __init__(self, content: int, mono_l: int, mono_m: int, sign: int):
        self.content = content
        self.mono_l = mono_l
        self.mono_m = mono_m
        self.sign = sign

    def as_dict(self) -> dict:
        return {
            "content": self.content,
            "monomial_L": self.mono_l,
            "monomial_M": self.mono_m,
            "sign": self.sign,
        }

    def __repr__(self):
        return (
            f"UnitReport(content={self.content}, L^{self.mono_l}, "
            f"M^{self.mono_m}, sign={self.sign})"
        )


def content_and_units(r: Bivar) -> tuple[Bivar, UnitReport]:
    """Divide out integer content and the common L^a M^b monomial, and fix
    the sign so the lexicographically largest (deg_L, deg_M) term is positive."""
    if not r:
        raise ExactError("ZERO_INPUT", "cannot normalize the zero polynomial")
    content = r.content()
    a, b = r.common_monomial()
    out = r.shift_down(a, b).exact_div_int(content)
    top = max(out.terms)
    sign = 1
    if out.terms[top] < 0:
        out = -out
        sign = -1
    return out, UnitReport(content, a, b, sign)


def _bivar_to_lpoly_in(r: Bivar, wrt: str) -> LPoly:
    if wrt == "L":
        return r.to_lpoly()
    flipped = Bivar({(dm, dl): v for (dl, dm), v in r.terms.items()})
    return flipped.to_lpoly()


def _lpoly_to_bivar_in(p: LPoly, wrt: str) -> Bivar:
    bv, shift = Bivar.from_lpoly(p)
    if shift:
        raise ExactError("INEXACT_DIV", "unexpected Laurent content")
    if wrt == "L":
        return bv
    return Bivar({(dm, dl): v for (dl, dm), v in bv.terms.items()})


def _lpoly_derivative(p: LPoly) -> LPoly:
    return LPoly([c.scale(i) for i, c in enumerate(p.coeffs)][1:])


def squarefree_part(r: Bivar, wrt: str = "L") -> tuple[Bivar, list[tuple[Bivar, int]]]:
    """Squarefree part of r with respect to one variable ("L" or "M").

    Returns (squarefree, multiplicity_map) where the map lists the factor
    product for each multiplicity >= 1 that actually occurs, detected by
    successive GCDs f, gcd(f, f'), gcd(gcd, gcd'), ...
    """
    if not r:
        raise ExactError("ZERO_INPUT", "squarefree part of zero")
    r0, _ = content_and_units(r)
    if r0.deg_l() == 0 and r0.deg_m() == 0:
        return r0, []
    if wrt not in ("L", "M"):
        raise ValueError("wrt must be 'L' or 'M'")
    f = _bivar_to_lpoly_in(r0, wrt)

    chain = [f]
    while True:
        cur = chain[-1]
        if cur.deg_l == 0:
            break
        g = lpoly_gcd(cur, _lpoly_derivative(cur))
        g = _lpoly_primitive(g) if g else g
        chain.append(g)
        if g.deg_l == 0:
            break
    # s_k = chain[k] / chain[k+1]: product of factors with multiplicity > k
    s = []
    for k in range(len(chain) - 1):
        s.append(_lpoly_primitive(chain[k].exact_div(chain[k + 1])))
    mult_map: list[tuple[Bivar, int]] = []
    for k in range(len(s)):
        part = s[k].exact_div(s[k + 1]) if k + 1 < len(s) else s[k]
        part = _lpoly_primitive(part)
        if part.deg_l > 0 or part.max_m_exp() > part.min_m_exp():
            bv = _lpoly_to_bivar_in(part, wrt)
            bv, _ = content_and_units(bv)
            mult_map.append((bv, k + 1))
    sf = _lpoly_to_bivar_in(s[0], wrt) if s else r0
    sf, _ = content_and_units(sf)
    return sf, mult_map
