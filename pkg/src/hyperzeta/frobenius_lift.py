"""Frobenius lift on y:  1/y^sigma = y^-p (1 + (Q^sigma(x^p) - Q(x)^p) t^p)^(-1/2).

The inverse square root is computed by the Newton iteration
z <- (3z - s z^3)/2 starting from z = 1.  Because s = 1 (mod p), each step
doubles the p-adic precision; the level (t-adic) bound grows with it,
since the part of z that survives modulo p^m lives in levels
0 .. L(m-1) where L is the top level of s.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import dagger_series as ds
from . import poly_ring as pr
from .errors import ConvergenceFailure, SanityCheckFailed


@dataclass(frozen=True)
class FrobeniusSeries:
    """z = sum A_i(x) t^i with 1/y^sigma = y^-p z, and the series s it inverts."""

    z: ds.DaggerSeries
    s: ds.DaggerSeries
    p: int
    N: int
    J: int

    @property
    def half_shift(self):
        # y^-p = y^-1 t^((p-1)/2)
        return (self.p - 1) // 2


def sigma_of_poly(ctx, Q):
    """Q^sigma(x^p): sigma on the coefficients and x -> x^p."""
    p = ctx.p
    out = [ctx.zero] * (p * (len(Q) - 1) + 1)
    for i, c in enumerate(Q):
        out[p * i] = ctx.frobenius(c, 1)
    return pr.trim(out)


def poly_pow(ctx, a, e):
    result, base = [ctx.one], a
    while e:
        if e & 1:
            result = pr.mul(ctx, result, base)
        base = pr.mul(ctx, base, base)
        e >>= 1
    return result


def build_s(ctx, Q):
    """The normalized series 1 + (Q^sigma(x^p) - Q(x)^p) t^p."""
    pE = pr.sub(ctx, sigma_of_poly(ctx, Q), poly_pow(ctx, Q, ctx.p))
    tail = ds.normalize(ctx, ds.make({ctx.p: pE}), Q)
    if ds.valuation(ctx, tail) < 1:
        raise SanityCheckFailed("Q^sigma - Q^p is not divisible by p")
    return ds.add(ctx, ds.constant(ctx), tail)


def _newton_step(ctx, z, s, Q):
    z2 = ds.series_mul(ctx, z, z, Q)
    sz3 = ds.series_mul(ctx, ds.series_mul(ctx, s, z2, Q), z, Q)
    return ds.scale_int(ctx, ds.sub(ctx, ds.scale_int(ctx, z, 3), sz3), ctx.inv2)


def inv_sqrt_newton(ctx, s, Q, J, N=None):
    """z with z^2 s = 1 modulo p^N, keeping levels <= J.

    ``s`` must be normalized, start at level 0 with constant term 1 and
    satisfy s = 1 (mod p).
    """
    N = ctx.N if N is None else N
    if s.kmin < 0 or s.level(0)[:1] != [ctx.one] or ds.valuation(ctx, ds.sub(ctx, s, ds.constant(ctx))) < 1:
        raise SanityCheckFailed("inverse square root needs s = 1 mod p")
    top = max(s.kmax, 1)
    exact_J = top * (N - 1)
    z = ds.constant(ctx)
    prec = 1
    steps = 0
    while True:
        prec = min(2 * prec, N)
        new = ds.truncate(ctx, _newton_step(ctx, z, s, Q), min(J, top * (prec - 1)))
        new = ds.DaggerSeries(new.kmin, new.coeffs)
        steps += 1
        if prec == N and new == z:
            break
        z = new
        if steps > 2 * N.bit_length() + 8:
            raise ConvergenceFailure("Newton iteration for 1/sqrt(s) did not stabilise")
    check_J = J if J >= exact_J else J - 2
    w = ds.truncate(ctx, ds.series_mul(ctx, ds.series_mul(ctx, z, z, Q), s, Q), check_J)
    if w != ds.constant(ctx):
        raise ConvergenceFailure("z^2 s != 1 after Newton iteration")
    return z


def compute_inv_y_sigma(ctx, Q, J):
    s = build_s(ctx, Q)
    z = inv_sqrt_newton(ctx, s, Q, J)
    return FrobeniusSeries(z=z, s=s, p=ctx.p, N=ctx.N, J=J)


def check_inv_sqrt(ctx, fs, Q):
    """Exact check of z^2 s = 1 modulo (p^N, t^(J+1))."""
    w = ds.truncate(ctx, ds.series_mul(ctx, ds.series_mul(ctx, fs.z, fs.z, Q), fs.s, Q), fs.J)
    return ds.DaggerSeries(w.kmin, w.coeffs) == ds.constant(ctx)
