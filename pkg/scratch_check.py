"""Scratch validation of the exact arithmetic core (not part of the package)."""
import random
import sys

sys.path.insert(0, "src")

import sympy as sp

from twobridge.exact import Laurent, LPoly, Poly, Var
from twobridge.resultants import (
    resultant_prs,
    resultant_sylvester,
    resultant_evalinterp,
    int_resultant,
)

random.seed(7)
M, Ls, x = sp.symbols("M L x")


def rand_laurent(span=3, hi=6):
    lo = random.randint(-span, 1)
    n = random.randint(1, span + 1)
    return Laurent(lo, [random.randint(-hi, hi) for _ in range(n)])


def laurent_to_sp(a: Laurent):
    return sum(c * M**e for e, c in a.items())


def lpoly_to_sp(a: LPoly):
    return sum(laurent_to_sp(c) * Ls**i for i, c in enumerate(a.coeffs))


def poly_to_sp(p: Poly):
    out = 0
    for i, c in enumerate(p.coeffs):
        cs = laurent_to_sp(c) if isinstance(c, Laurent) else lpoly_to_sp(c)
        out += cs * x**i
    return out


# 1. Laurent ring ops vs sympy
for _ in range(300):
    a, b = rand_laurent(), rand_laurent()
    assert sp.expand(laurent_to_sp(a * b) - laurent_to_sp(a) * laurent_to_sp(b)) == 0
    assert sp.expand(laurent_to_sp(a + b) - laurent_to_sp(a) - laurent_to_sp(b)) == 0
    if b:
        assert (a * b).exact_div(b) == a
print("laurent ring ok")

# packed vs schoolbook multiplication
from twobridge import exact

for _ in range(60):
    a = Laurent(-5, [random.randint(-10**6, 10**6) for _ in range(random.randint(30, 80))])
    b = Laurent(-2, [random.randint(-10**6, 10**6) for _ in range(random.randint(30, 80))])
    p1 = exact._packed_convolve(a.coeffs, b.coeffs)
    p2 = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        for j, bj in enumerate(b.coeffs):
            p2[i + j] += ai * bj
    assert p1 == p2
print("packed mul ok")

# 2. integer resultant vs sympy
for trial in range(400):
    da = random.randint(0, 6)
    db = random.randint(0, 6)
    a = [random.randint(-8, 8) for _ in range(da)] + [random.choice([-3, -2, -1, 1, 2, 3])]
    b = [random.randint(-8, 8) for _ in range(db)] + [random.choice([-3, -2, -1, 1, 2, 3])]
    mine = int_resultant(a, b)
    pa = sp.Poly(list(reversed(a)), x)
    pb = sp.Poly(list(reversed(b)), x)
    ref = sp.resultant(pa, pb)
    assert mine == ref, (a, b, mine, ref)
# engineered degree gaps (defective PRS)
for trial in range(400):
    d = random.randint(2, 7)
    a = [0] * random.randint(0, 3) + [random.randint(-5, 5) for _ in range(d)] + [random.randint(1, 4)]
    b = [random.choice([-2, 0, 0, 2])] + [0] * random.randint(0, 4) + [random.randint(1, 3)]
    random.shuffle(b)
    if not any(b):
        continue
    mine = int_resultant(a, b)
    ref = sp.resultant(sp.Poly(list(reversed(a)), x), sp.Poly(list(reversed(b)), x))
    assert mine == ref, (a, b, mine, ref)
print("int resultant ok")

# 3. Poly resultants over Laurent: prs vs sylvester vs sympy vs evalinterp
for trial in range(120):
    dp = random.randint(1, 4)
    dq = random.randint(0, 4)
    p = Poly(Var.LT, [rand_laurent(2, 4) for _ in range(dp)] + [Laurent.term(random.choice([-1, 1]), random.randint(0, 1))])
    q = Poly(Var.LT, [rand_laurent(2, 4) for _ in range(dq)] + [rand_laurent(1, 3) + Laurent.one()])
    if not q.coeffs or not q.lc:
        continue
    r1 = resultant_prs(p, q)
    r2 = resultant_sylvester(p, q)
    assert r1 == r2, (trial, str(p), str(q), str(r1), str(r2))
    r3 = resultant_evalinterp(p, q)
    assert r1 == r3, (trial, str(p), str(q), str(r1), str(r3))
    ref = sp.resultant(sp.Poly(poly_to_sp(p) * M**10, x), sp.Poly(poly_to_sp(q) * M**10, x))
    # our result times the clearing factor
    mine = laurent_to_sp(r1) * M**(10 * p.degree + 10 * q.degree)
    assert sp.expand(ref - mine) == 0, (trial, str(p), str(q))
print("laurent-coeff resultants ok")

# 4. with L-carrying coefficients
for trial in range(60):
    dp = random.randint(1, 3)
    dq = random.randint(0, 3)
    p = Poly(Var.LT, [rand_laurent(2, 3) for _ in range(dp)] + [Laurent.const(random.choice([-1, 1]))])
    qc = []
    for _ in range(dq + 1):
        qc.append(LPoly([rand_laurent(2, 3) for _ in range(random.randint(1, 2))]))
    q = Poly(Var.LT, [LPoly.from_laurent(c) if isinstance(c, Laurent) else c for c in qc])
    if not q:
        continue
    r1 = resultant_prs(p.lift_l(), q)
    r2 = resultant_sylvester(p.lift_l(), q)
    assert r1 == r2, trial
    r3 = resultant_evalinterp(p, q)
    assert r1 == r3, (trial, str(r1), str(r3))
print("L-coeff resultants ok")
print("ALL SCRATCH CHECKS PASSED")
