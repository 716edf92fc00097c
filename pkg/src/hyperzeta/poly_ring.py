"""Dense polynomials over R_N and the Bezout pair of a squarefree Q.

A polynomial is a list of ring elements (tuples), constant term first.
Results are trimmed, so ``len(a) - 1`` is the degree and ``[]`` is zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InexactDivision, NonUnitLeadingCoefficient, NotCoprime


def trim(a):
    a = list(a)
    while a and not any(a[-1]):
        a.pop()
    return a


def degree(a):
    """Degree ignoring leading zeros; -1 for the zero polynomial."""
    d = len(a) - 1
    while d >= 0 and not any(a[d]):
        d -= 1
    return d


def from_ints(ctx, coeffs):
    return trim([ctx.from_int(c) for c in coeffs])


def monomial(ctx, k, c=None):
    return [ctx.zero] * k + [ctx.one if c is None else c]


def add(ctx, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ctx.add(out[i], c)
    return trim(out)


def sub(ctx, a, b):
    return add(ctx, a, [ctx.neg(c) for c in b])


def neg(ctx, a):
    return [ctx.neg(c) for c in a]


def scale(ctx, a, c):
    """Multiply every coefficient by the ring element ``c``."""
    return trim([ctx.mul(x, c) for x in a])


def scale_int(ctx, a, c):
    return trim([ctx.scale(x, c) for x in a])


def shift(a, k):
    """Multiply by x^k."""
    if not a:
        return []
    return [(0,) * len(a[0])] * k + list(a)


def mul(ctx, a, b):
    return trim(ctx.poly_mul(trim(a), trim(b)))


def derivative(ctx, a):
    return trim([ctx.scale(c, i) for i, c in enumerate(a)][1:])


def evaluate(ctx, a, x):
    acc = ctx.zero
    for c in reversed(a):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def frobenius(ctx, a, k=1):
    """Apply sigma^k to every coefficient (x is left alone)."""
    return [ctx.frobenius(c, k) for c in a]


def divrem_monic(ctx, a, b):
    """Division by a monic ``b``; returns (quotient, remainder)."""
    db = len(b) - 1
    r = list(a)
    if len(r) <= db:
        return [], trim(r)
    m = ctx.modulus
    n = ctx.n
    q = [ctx.zero] * (len(r) - db)
    if n == 1:
        rr = [c[0] for c in r]
        bb = [c[0] for c in b]
        qq = [0] * (len(r) - db)
        for k in range(len(rr) - 1 - db, -1, -1):
            c = rr[k + db] % m
            qq[k] = c
            if c:
                for j in range(db):
                    rr[k + j] -= c * bb[j]
        return trim([(c,) for c in qq]), trim([(c % m,) for c in rr[:db]])
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        q[k] = c
        if any(c):
            for j in range(db):
                r[k + j] = ctx.sub(r[k + j], ctx.mul(c, b[j]))
    return trim(q), trim(r[:db])


def divrem(ctx, a, b):
    """Division with remainder by ``b`` whose leading coefficient is a unit."""
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[-1]
    if not ctx.is_unit(lead):
        raise NonUnitLeadingCoefficient("leading coefficient of divisor is divisible by p")
    if lead == ctx.one:
        return divrem_monic(ctx, trim(a), b)
    u = ctx.inv(lead)
    q, r = divrem_monic(ctx, trim(a), scale(ctx, b, u))
    return scale(ctx, q, u), r


def exact_div_monic(ctx, a, b):
    q, r = divrem_monic(ctx, trim(a), b)
    if r:
        raise InexactDivision("nonzero remainder in an exact division")
    return q


# ---------------------------------------------------------------------------
# Bezout pair

@dataclass(frozen=True)
class BezoutPair:
    """R, S with R*Q + S*Q' = 1, deg R <= 2g-1 and deg S <= 2g."""

    R: list
    S: list
    Q: list
    dQ: list


def _xgcd_residue(F, a, b):
    """(d, s, t) with s*a + t*b = d = gcd(a, b) over the finite field F."""
    r0, r1 = F.poly_trim(a), F.poly_trim(b)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]

    def sub(u, v):
        u, v = list(u), list(v)
        n = max(len(u), len(v))
        u += [F.zero] * (n - len(u))
        v += [F.zero] * (n - len(v))
        return F.poly_trim([F.sub(x, y) for x, y in zip(u, v)])

    def mul(u, v):
        if not u or not v:
            return []
        out = [F.zero] * (len(u) + len(v) - 1)
        for i, x in enumerate(u):
            for j, y in enumerate(v):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
        return F.poly_trim(out)

    while r1:
        quo, rem = F.poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    return r0, s0, t0


def bezout_precompute(ctx, Q):
    """Bezout pair for monic Q over R_N.

    S is the inverse of Q' modulo Q: computed over the residue field by the
    extended Euclidean algorithm, then Newton-lifted S <- S(2 - Q'S) mod Q
    with the p-adic precision doubling each step.  R = (1 - SQ')/Q exactly.
    """
    Q = trim(Q)
    dQ = derivative(ctx, Q)
    F = ctx.residue
    Qbar = F.poly_trim([ctx.reduce_modp(c) for c in Q])
    dQbar = F.poly_trim([ctx.reduce_modp(c) for c in dQ])
    d, _, t = _xgcd_residue(F, Qbar, dQbar)
    if len(d) != 1:
        raise NotCoprime("Q and Q' have a common factor modulo p")
    inv_d = F.inv(d[0])
    S = trim([ctx.lift(F.mul(c, inv_d)) for c in t])
    two = [ctx.from_int(2)]
    prec = 1
    while prec < ctx.N:
        S = divrem_monic(ctx, mul(ctx, S, sub(ctx, two, mul(ctx, dQ, S))), Q)[1]
        prec *= 2
    R = exact_div_monic(ctx, sub(ctx, [ctx.one], mul(ctx, S, dQ)), Q)
    g = (len(Q) - 2) // 2
    assert degree(R) <= 2 * g - 1 and degree(S) <= 2 * g
    return BezoutPair(R, S, Q, dQ)


def split_by_bezout(ctx, T, pair):
    """Write T = A*Q + B*Q' with deg B <= deg Q - 1.

    B is T*S reduced modulo the monic Q, and A = (T - B*Q')/Q is an exact
    division; a nonzero remainder means the pair is corrupt.
    """
    B = divrem_monic(ctx, mul(ctx, T, pair.S), pair.Q)[1]
    A = exact_div_monic(ctx, sub(ctx, T, mul(ctx, B, pair.dQ)), pair.Q)
    return A, B
