"""Finite sums  sum_k c_k(x) t^k  with t = y^-2 in W(F_q)[x, y, 1/y]/(y^2 - Q).

Negative k stand for positive even powers of y.  A series is *normalized*
when every c_k has degree <= deg Q - 1; the carry rule uses Q t^k = t^(k-1).
An odd overall power of y is left to the caller.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import poly_ring as pr


@dataclass(frozen=True)
class DaggerSeries:
    kmin: int
    coeffs: tuple
    # min p-adic valuation over coefficients dropped by the last truncation
    dropped_valuation: int | None = field(default=None, compare=False)

    @property
    def kmax(self):
        return self.kmin + len(self.coeffs) - 1

    def level(self, k):
        i = k - self.kmin
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return []

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.kmin + i, c

    def is_zero(self):
        return not any(self.coeffs)


ZERO = DaggerSeries(0, ())


def make(levels, kmin=None):
    """Build a series from a {k: poly} mapping."""
    levels = {k: pr.trim(c) for k, c in levels.items()}
    levels = {k: c for k, c in levels.items() if c}
    if not levels:
        return ZERO
    lo = min(levels) if kmin is None else min(kmin, min(levels))
    hi = max(levels)
    return _tidy(lo, [levels.get(k, []) for k in range(lo, hi + 1)])


def constant(ctx, c=None):
    return make({0: [ctx.one if c is None else c]})


def _tidy(kmin, coeffs):
    coeffs = [pr.trim(c) for c in coeffs]
    lo, hi = 0, len(coeffs)
    while lo < hi and not coeffs[lo]:
        lo += 1
    while hi > lo and not coeffs[hi - 1]:
        hi -= 1
    if lo == hi:
        return ZERO
    return DaggerSeries(kmin + lo, tuple(coeffs[lo:hi]))


def add(ctx, a, b):
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    lo, hi = min(a.kmin, b.kmin), max(a.kmax, b.kmax)
    return _tidy(lo, [pr.add(ctx, a.level(k), b.level(k)) for k in range(lo, hi + 1)])


def sub(ctx, a, b):
    return add(ctx, a, scale_int(ctx, b, -1))


def scale(ctx, s, c):
    return _tidy(s.kmin, [pr.scale(ctx, x, c) for x in s.coeffs])


def scale_int(ctx, s, c):
    return _tidy(s.kmin, [pr.scale_int(ctx, x, c) for x in s.coeffs])


def shift(s, k):
    """Multiply by t^k."""
    if s.is_zero():
        return s
    return DaggerSeries(s.kmin + k, s.coeffs)


def mul_poly(ctx, s, a):
    """Multiply every coefficient by the polynomial ``a`` (no normalization)."""
    return _tidy(s.kmin, [pr.mul(ctx, c, a) for c in s.coeffs])


def frobenius(ctx, s, k=1):
    """Apply sigma^k to the scalar coefficients only."""
    return _tidy(s.kmin, [pr.frobenius(ctx, c, k) for c in s.coeffs])


def normalize(ctx, s, Q):
    """Carry every coefficient of degree >= deg Q down one level.

    Levels are processed from the top, so one pass suffices; carries may
    create new levels below ``kmin``.
    """
    if s.is_zero():
        return s
    dQ = len(Q) - 1
    coeffs = [list(c) for c in s.coeffs]
    kmin = s.kmin
    i = len(coeffs) - 1
    while i >= 0:
        c = coeffs[i]
        if len(c) > dQ:
            u, r = pr.divrem_monic(ctx, c, Q)
            coeffs[i] = r
            if u:
                if i == 0:
                    coeffs.insert(0, [])
                    kmin -= 1
                    i += 1
                coeffs[i - 1] = pr.add(ctx, coeffs[i - 1], u)
        i -= 1
    return _tidy(kmin, coeffs)


def is_normalized(s, Q):
    return all(len(c) < len(Q) for c in s.coeffs)


def series_mul(ctx, a, b, Q, J=None):
    """Product of normalized series, normalized and truncated at level J."""
    if a.is_zero() or b.is_zero():
        return ZERO
    da = max(len(c) for c in a.coeffs)
    db = max(len(c) for c in b.coeffs)
    stride = da + db - 1

    def flatten(s):
        out = []
        for c in s.coeffs:
            out.extend(c)
            out.extend([ctx.zero] * (stride - len(c)))
        return out

    prod = ctx.poly_mul(flatten(a), flatten(b))
    nlev = len(a.coeffs) + len(b.coeffs) - 1
    coeffs = [prod[j * stride:(j + 1) * stride] for j in range(nlev)]
    out = normalize(ctx, _tidy(a.kmin + b.kmin, coeffs), Q)
    if J is not None:
        out = truncate(ctx, out, J)
    return out


def truncate(ctx, s, J):
    """Drop levels above J, recording the least valuation among them."""
    if s.is_zero() or s.kmax <= J:
        return DaggerSeries(s.kmin, s.coeffs, dropped_valuation=ctx.N)
    keep = max(J - s.kmin + 1, 0)
    dropped = [x for c in s.coeffs[keep:] for x in c]
    v = min((ctx.valuation(x) for x in dropped), default=ctx.N)
    kept = _tidy(s.kmin, s.coeffs[:keep])
    return DaggerSeries(kept.kmin, kept.coeffs, dropped_valuation=v)


def valuation(ctx, s):
    return min((ctx.valuation(x) for c in s.coeffs for x in c), default=ctx.N)


def tail_valuation_bound(p, i, k=0):
    """Largest m with i > p(2k+1)/2 + p*m, clamped at zero.

    Coefficient i of the expansion of the Frobenius image of A dx/y^(2k+1)
    is divisible by p^m for every such m.
    """
    return max(0, (2 * i - p * (2 * k + 1) - 1) // (2 * p))


def polynomial_part(ctx, s, Q):
    """sum_{k <= 0} c_k Q^(-k), the part of the series with no poles."""
    acc = []
    for k in range(min(s.kmin, 0), 1):
        acc = pr.add(ctx, pr.mul(ctx, acc, Q), s.level(k)) if acc else pr.trim(s.level(k))
    return acc


def pole_part(s):
    return {k: c for k, c in s.items() if k >= 1}


def evaluate(ctx, s, x0, y0_sq_inv):
    """Evaluate at a point with x = x0 and t = y0^-2 given as ``y0_sq_inv``.

    Negative levels need the inverse of ``y0_sq_inv``, which must be a unit.
    """
    acc = ctx.zero
    t_inv = ctx.inv(y0_sq_inv) if s.kmin < 0 else None
    for k, c in s.items():
        tk = ctx.pow(y0_sq_inv, k) if k >= 0 else ctx.pow(t_inv, -k)
        acc = ctx.add(acc, ctx.mul(pr.evaluate(ctx, c, x0), tk))
    return acc
