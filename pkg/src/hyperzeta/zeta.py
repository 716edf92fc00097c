"""Precision policy, the twisted norm of Frobenius, its characteristic
polynomial, and the passage from p-adic residues to integers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import cohomology_reduce as cr
from . import frobenius_lift as fl
from . import poly_ring as pr
from .errors import (
    FunctionalEquationMismatch,
    NegativeCount,
    NonIntegralReduction,
    PrecisionTooLow,
    SanityCheckFailed,
    WeilBoundViolated,
)
from .finite_field import validate_curve
from .padic_ring import RingCtx, vp_int


def floor_log(p, x):
    """Largest e with p^e <= x (x >= 1)."""
    e, acc = 0, p
    while acc <= x:
        acc *= p
        e += 1
    return e


def ceil_log(p, x):
    """Least e with p^e >= x."""
    e, acc = 0, 1
    while acc < x:
        acc *= p
        e += 1
    return e


def weil_digits(p, n, g):
    """ceil(g n/2 + (2g+1) log_p 2), computed exactly: least K with p^(2K) >= p^(gn) 4^(2g+1)."""
    target = p ** (g * n) * 4 ** (2 * g + 1)
    K = 0
    while p ** (2 * K) < target:
        K += 1
    return K


@dataclass(frozen=True)
class PrecisionProfile:
    """Digits and truncation orders for one run.

    N1     digits needed to pin down a_1..a_g inside the Weil box
    N      working digits
    J      top level kept in the Frobenius series
    delta  N - N1
    scale  power of p by which the reduction is scaled to stay integral;
           also the bound on the denominator of the Frobenius matrix
    loss   digits that the reduction may spoil
    """

    p: int
    n: int
    g: int
    N1: int
    N: int
    J: int
    scale: int
    loss: int

    @property
    def delta(self):
        return self.N - self.N1

    def as_dict(self):
        return {
            "N1": self.N1, "N": self.N, "J": self.J, "delta": self.delta,
            "scale": self.scale, "loss": self.loss,
        }


def make_precision_profile(p, n, g, N1=None):
    h = (p - 1) // 2
    N1_min = weil_digits(p, n, g) + 1
    if N1 is None:
        N1 = N1_min
    elif N1 < N1_min:
        raise PrecisionTooLow(f"N1 = {N1} is below the minimum {N1_min} for p={p}, n={n}, g={g}")
    # highest x-degree in the polynomial part of a Frobenius image
    d_max = 2 * p * g + 2 * g - 1
    e_Q = vp_int(2 * g + 1, p, 64)
    L_deg = floor_log(p, 2 * d_max - 2 * g + 1)
    J_min = p * (N1 + ceil_log(p, 2 * p * N1 + 1) + 1)
    N = N1
    while True:
        J = max(p * (N - 1), J_min)
        K = J + h
        # least valuation of a partially reduced pole term at level k
        mu = min(
            1 + -(-max(0, k - h) // p) - floor_log(p, 2 * k + 1) for k in range(1, K + 1)
        )
        # pole reduction, then degree reduction down from d_max, then the last step at 2g
        scale = max(0, -mu) + L_deg + e_Q
        loss = 2 * floor_log(p, 2 * K + 1) + 2 * L_deg + e_Q
        N_new = N1 + loss + 2 * g * n * scale
        if N_new <= N:
            return PrecisionProfile(p, n, g, N1, N, J, scale, loss)
        N = N_new


# ---------------------------------------------------------------------------
# matrices over R_N: tuples of rows

def mat_mul(ctx, A, B):
    size = len(A)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = ctx.zero
            for k in range(size):
                acc = ctx.add(acc, ctx.mul(A[i][k], B[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_frobenius(ctx, A, k):
    return tuple(tuple(ctx.frobenius(x, k) for x in row) for row in A)


def norm_matrix(ctx, M):
    """M M^sigma ... M^(sigma^(n-1)) by the binary ladder.

    Keeps (P, e) with P = M M^sigma ... M^(sigma^(e-1)) and uses
    P_(a+b) = P_a (P_b)^(sigma^a).
    """
    n = ctx.n
    P, e = M, 1
    for bit in bin(n)[3:]:
        P = mat_mul(ctx, P, mat_frobenius(ctx, P, e))
        e *= 2
        if bit == "1":
            P = mat_mul(ctx, P, mat_frobenius(ctx, M, e))
            e += 1
    return P


def norm_matrix_naive(ctx, M):
    P = M
    for k in range(1, ctx.n):
        P = mat_mul(ctx, P, mat_frobenius(ctx, M, k))
    return P


def charpoly(ctx, A):
    """Coefficients [1, c_1, ..., c_d] of det(T I - A), division free (Berkowitz)."""
    d = len(A)
    if d == 0:
        return [ctx.one]
    C = [ctx.one, ctx.neg(A[0][0])]
    for r in range(1, d):
        row = A[r][:r]
        v = [A[i][r] for i in range(r)]
        toeplitz = [ctx.one, ctx.neg(A[r][r])]
        for _ in range(r):
            dot = ctx.zero
            for a, b in zip(row, v):
                dot = ctx.add(dot, ctx.mul(a, b))
            toeplitz.append(ctx.neg(dot))
            v = [
                _dot(ctx, A[i][:r], v) for i in range(r)
            ]
        new = []
        for i in range(r + 2):
            acc = ctx.zero
            for j in range(max(0, i - len(toeplitz) + 1), min(i, r) + 1):
                acc = ctx.add(acc, ctx.mul(toeplitz[i - j], C[j]))
            new.append(acc)
        C = new
    return C


def _dot(ctx, a, b):
    acc = ctx.zero
    for x, y in zip(a, b):
        acc = ctx.add(acc, ctx.mul(x, y))
    return acc


# ---------------------------------------------------------------------------
# integer coefficients and point counts

def recover_integer_coeffs(b, N1, p, q, g):
    """Integers a_1..a_2g from residues b_1..b_2g modulo p^N1.

    a_1..a_g are the signed residues; the rest follow from the functional
    equation a_(2g-i) = q^(g-i) a_i and are checked against b.
    """
    mod = p**N1
    a = [1]
    for i in range(1, g + 1):
        c = b[i] % mod
        if c > mod // 2:
            c -= mod
        if c * c > comb(2 * g, i) ** 2 * q**i:
            raise WeilBoundViolated(f"|a_{i}| = {abs(c)} exceeds C(2g,i) q^(i/2)")
        a.append(c)
    for i in range(g + 1, 2 * g + 1):
        a.append(q ** (i - g) * a[2 * g - i])
    for i in range(g + 1, 2 * g + 1):
        if (a[i] - b[i]) % mod:
            raise FunctionalEquationMismatch(
                f"a_{i} = q^{i - g} a_{2 * g - i} disagrees with the computed coefficient mod p^{N1}"
            )
    return a[1:]


def power_sums(a, k):
    """s_1..s_k for the roots of T^d + a_1 T^(d-1) + ... + a_d (Newton's identities)."""
    d = len(a)
    coeff = [1] + list(a)
    s = []
    for m in range(1, k + 1):
        acc = m * coeff[m] if m <= d else 0
        for j in range(1, min(m - 1, d) + 1):
            acc += coeff[j] * s[m - j - 1]
        s.append(-acc)
    return s


def point_counts(a, q, k):
    counts = []
    for i, s in enumerate(power_sums(a, k), start=1):
        c = q**i + 1 - s
        if c < 0:
            raise NegativeCount(f"#C(F_q^{i}) = {c} < 0")
        counts.append(c)
    return counts


def weil_root_check(a, q, tol=1e-6):
    """Whether every root of T^2g + a_1 T^(2g-1) + ... has |alpha| = sqrt(q)."""
    roots = np.roots([1] + [float(c) for c in a])
    dev = float(np.max(np.abs(np.abs(roots) - np.sqrt(q)) / np.sqrt(q))) if len(roots) else 0.0
    return dev < tol, dev


# ---------------------------------------------------------------------------
# pipeline

@dataclass
class ZetaResult:
    a: list
    q: int
    g: int
    counts: list
    profile: PrecisionProfile
    timings: dict = field(default_factory=dict)
    report: dict = field(default_factory=dict)

    @property
    def L(self):
        """Coefficients of L(T) = 1 + a_1 T + ... + a_2g T^2g, constant first."""
        return [1] + list(self.a)

    @property
    def charpoly(self):
        """T^2g + a_1 T^(2g-1) + ... + a_2g, leading coefficient first."""
        return [1] + list(self.a)


def lift_curve(ctx, curve):
    return [ctx.lift(c) for c in curve.Qbar]


def compute_zeta(curve, N1=None, counts=1, threads=1):
    validate_curve(curve)
    p, n, g, q = curve.p, curve.n, curve.g, curve.q
    profile = make_precision_profile(p, n, g, N1)
    timings = {}

    t0 = time.perf_counter()
    ctx = RingCtx(p, n, profile.N, list(curve.field.modulus))
    Q = lift_curve(ctx, curve)
    pair = pr.bezout_precompute(ctx, Q)
    timings["setup"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    fs = fl.compute_inv_y_sigma(ctx, Q, profile.J)
    timings["step1"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    M = cr.frobenius_matrix(ctx, fs, pair, profile.scale, threads)
    timings["step2"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    Mn = norm_matrix(ctx, M.entries)
    cp = charpoly(ctx, Mn)
    b = [1] + descale_coeffs(ctx, cp, profile)
    a = recover_integer_coeffs(b, profile.N1, p, q, g)
    timings["step3"] = time.perf_counter() - t0

    ok, dev = weil_root_check(a, q)
    if not ok:
        raise WeilBoundViolated(f"root magnitudes deviate from sqrt(q) by {dev:.3g}")
    report = {
        "frobenius_matrix_valuation": matrix_valuation(ctx, M),
        "root_deviation": dev,
        # b_1..b_2g mod p^N1, straight from the characteristic polynomial
        "residues": b[1:],
    }
    return ZetaResult(a, q, g, point_counts(a, q, counts), profile, timings, report)


def descale_coeffs(ctx, cp, profile):
    """Undo the p^scale on the matrix: coefficient i carries p^(i n scale)."""
    p, n, N1 = ctx.p, ctx.n, profile.N1
    out = []
    for i, c in enumerate(cp[1:], start=1):
        shift = p ** (i * n * profile.scale)
        if any(x % shift for x in c):
            raise NonIntegralReduction(f"char poly coefficient {i} is not p-integral")
        vals = [x // shift for x in c]
        if any(v % p**N1 for v in vals[1:]):
            raise SanityCheckFailed(f"char poly coefficient {i} does not lie in Z_p")
        out.append(vals[0] % p**N1)
    return out


def matrix_valuation(ctx, M):
    """Least p-adic valuation of the true (unscaled) Frobenius matrix."""
    return min(ctx.valuation(x) for row in M.entries for x in row) - M.scale
