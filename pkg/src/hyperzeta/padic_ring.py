"""Truncated unramified extensions R_N = (Z/p^N)[a]/(P(a)).

An element of R_N is a tuple of ``n`` integers in ``[0, p^N)``: its
coordinates in the power basis 1, a, ..., a^(n-1).  ``RingCtx`` carries the
modulus and the images of ``a`` under every power of the Frobenius lift, so
that all operations are pure functions of their arguments.

Polynomials over R_N (lists of elements, constant term first) are
multiplied by Kronecker substitution: both operands are packed into one big
integer, multiplied with Python's native integer product, and unpacked.
"""

from __future__ import annotations

from .errors import NonIntegralReduction, NotAUnit
from .finite_field import FieldCtx, check_characteristic


def vp_int(c, p, cap):
    """p-adic valuation of an integer, capped at ``cap`` (used for zero)."""
    if c == 0:
        return cap
    v = 0
    while c % p == 0 and v < cap:
        c //= p
        v += 1
    return v


class RingCtx:
    """Context for arithmetic in W(F_q)/(p^N).

    ``Pbar`` is the monic irreducible polynomial over F_p (constant term
    first) defining the residue field; its integer lift P has the same
    coefficients in ``[0, p)``.
    """

    def __init__(self, p, n, N, Pbar=None):
        check_characteristic(p)
        if n < 1 or N < 1:
            raise ValueError("extension degree and precision must be positive")
        if Pbar is None:
            if n != 1:
                raise ValueError("a defining polynomial is required for n > 1")
            Pbar = [0, 1]
        Pbar = [c % p for c in Pbar]
        if len(Pbar) != n + 1:
            raise ValueError(f"defining polynomial must have degree {n}")
        self.residue = FieldCtx(p, Pbar)
        self.p, self.n, self.N = p, n, N
        self.modulus = p**N
        self.P = tuple(Pbar)
        self.inv2 = pow(2, -1, self.modulus)
        self.frob_images = tuple(self._frobenius_image(k) for k in range(n))

    def __repr__(self):
        return f"RingCtx(p={self.p}, n={self.n}, N={self.N}, P={list(self.P)})"

    def with_precision(self, N):
        return RingCtx(self.p, self.n, N, list(self.P))

    # -- constructors -------------------------------------------------------

    @property
    def zero(self):
        return (0,) * self.n

    @property
    def one(self):
        return (1,) + (0,) * (self.n - 1)

    def from_int(self, c):
        return (c % self.modulus,) + (0,) * (self.n - 1)

    def gen(self):
        if self.n == 1:
            return ((-self.P[0]) % self.modulus,)
        return (0, 1) + (0,) * (self.n - 2)

    def lift(self, b):
        """Coordinate-wise lift of a residue-field element with digits in [0, p)."""
        return tuple(int(c) % self.p for c in b)

    def reduce_modp(self, a):
        p = self.p
        return tuple(c % p for c in a)

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        m = self.modulus
        return tuple((x + y) % m for x, y in zip(a, b))

    def sub(self, a, b):
        m = self.modulus
        return tuple((x - y) % m for x, y in zip(a, b))

    def neg(self, a):
        m = self.modulus
        return tuple((-x) % m for x in a)

    def scale(self, a, c):
        """Multiply by the integer ``c``."""
        m = self.modulus
        return tuple(x * c % m for x in a)

    def _reduce(self, coeffs):
        """Reduce an integer polynomial in a of degree <= 2n-2 modulo (P, p^N)."""
        n, P, m = self.n, self.P, self.modulus
        if n == 1:
            return (coeffs[0] % m,)
        coeffs = list(coeffs)
        for k in range(len(coeffs) - 1, n - 1, -1):
            c = coeffs[k]
            if c:
                for j in range(n):
                    if P[j]:
                        coeffs[k - n + j] -= c * P[j]
        return tuple(c % m for c in coeffs[:n]) + (0,) * (n - len(coeffs))

    def mul(self, a, b):
        if self.n == 1:
            return (a[0] * b[0] % self.modulus,)
        n = self.n
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return self._reduce(prod)

    def pow(self, a, e):
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def is_zero(self, a):
        return not any(a)

    def is_unit(self, a):
        return any(c % self.p for c in a)

    def valuation(self, a):
        """min over coordinates of v_p, with N standing for zero."""
        p, N = self.p, self.N
        return min(vp_int(c, p, N) for c in a)

    def inv(self, a):
        """Inverse of a unit: invert mod p, then Newton-lift x <- x(2 - a x)."""
        if not self.is_unit(a):
            raise NotAUnit(f"{a} is not a unit in Z/{self.p}^{self.N}")
        x = self.lift(self.residue.inv(self.reduce_modp(a)))
        prec = 1
        two = self.from_int(2)
        while prec < self.N:
            x = self.mul(x, self.sub(two, self.mul(a, x)))
            prec *= 2
        return x

    def div_int(self, a, d):
        """A solution x of d*x = a for a nonzero integer d.

        When p^e exactly divides d, each coordinate of ``a`` must be
        divisible by p^e; the top e digits of x are left at zero.
        """
        p, m = self.p, self.modulus
        e = 0
        while d % p == 0:
            d //= p
            e += 1
        u = pow(d, -1, m)
        if e == 0:
            return tuple(c * u % m for c in a)
        pe = p**e
        if any(c % pe for c in a):
            raise NonIntegralReduction(
                f"division by p^{e} of a value that is not divisible by it"
            )
        return tuple((c // pe) * u % m for c in a)

    def signed(self, c):
        """Representative of an integer residue in (-p^N/2, p^N/2]."""
        c %= self.modulus
        return c - self.modulus if c > self.modulus // 2 else c

    # -- Frobenius ----------------------------------------------------------

    def _eval_coords(self, a, beta):
        """Evaluate the coordinate polynomial of ``a`` at ``beta`` (Horner)."""
        acc = self.zero
        for c in reversed(a):
            acc = self.add(self.mul(acc, beta), self.from_int(c))
        return acc

    def _frobenius_image(self, k):
        """The root of P congruent to a^(p^k) mod p."""
        if self.n == 1:
            return self.gen()
        F = self.residue
        beta = self.lift(F.pow(F.gen(), self.p**k))
        P = [self.from_int(c) for c in self.P]
        dP = [self.from_int(i * c) for i, c in enumerate(self.P)][1:]
        prec = 1
        while prec < self.N:
            val = self._eval_poly(P, beta)
            beta = self.sub(beta, self.mul(val, self.inv(self._eval_poly(dP, beta))))
            prec *= 2
        return beta

    def _eval_poly(self, poly, x):
        acc = self.zero
        for c in reversed(poly):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def frobenius(self, a, k=1):
        """Apply the k-th power of the Frobenius lift to ``a``."""
        k %= self.n
        if k == 0:
            return tuple(a)
        return self._eval_coords(a, self.frob_images[k])

    # -- polynomials over R_N ----------------------------------------------

    def poly_mul(self, a, b):
        """Product of two polynomials over R_N via Kronecker substitution."""
        if not a or not b:
            return []
        n, m = self.n, self.modulus
        width = 2 * n - 1
        terms = min(len(a), len(b)) * n
        nbytes = ((2 * (m - 1).bit_length() + terms.bit_length()) + 8) // 8
        pad = bytes(nbytes * (width - n))

        def pack(poly):
            chunks = []
            for c in poly:
                for x in c:
                    chunks.append(x.to_bytes(nbytes, "little"))
                if pad:
                    chunks.append(pad)
            return int.from_bytes(b"".join(chunks), "little")

        length = len(a) + len(b) - 1
        raw = (pack(a) * pack(b)).to_bytes(nbytes * width * length, "little")
        out = []
        if n == 1:
            for i in range(length):
                out.append((int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") % m,))
            return out
        for i in range(length):
            base = i * width * nbytes
            coeffs = [
                int.from_bytes(raw[base + j * nbytes: base + (j + 1) * nbytes], "little")
                for j in range(width)
            ]
            out.append(self._reduce(coeffs))
        return out
