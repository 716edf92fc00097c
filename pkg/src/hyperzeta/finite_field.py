"""Finite fields F_{p^m}, curve validation and the brute-force point counter.

Field elements are tuples of ``m`` integers in ``[0, p)``, the coordinates
in the power basis of ``F_p[t]/(f)``.  Polynomials over F_p (used for
defining polynomials) are plain lists of ints, constant term first, with no
trailing zeros; the zero polynomial is ``[]``.

The point counter is deliberately naive: it enumerates every abscissa of
``F_{q^i}`` and uses the quadratic character computed by exponentiation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldTooLarge,
    NotMonic,
    NotPrime,
    NotSquarefree,
    ReduciblePolynomial,
    WrongDegree,
)

ORACLE_GUARD = 10**7


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_characteristic(p):
    if p % 2 == 0:
        raise EvenCharacteristic(f"characteristic must be odd, got {p}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


# ---------------------------------------------------------------------------
# polynomials over F_p

def fp_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return fp_trim(out)


def fp_sub(a, b, p):
    return fp_add(a, [(-c) % p for c in b], p)


def fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return fp_trim([c % p for c in out])


def fp_divmod(a, b, p):
    b = fp_trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = fp_trim(a)
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] * inv_lead % p
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] = (r[k + j] - c * y) % p
    return fp_trim(q), fp_trim(r[: len(b) - 1])


def fp_gcd(a, b, p):
    a, b = fp_trim(a), fp_trim(b)
    while b:
        a, b = b, fp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def fp_powmod(base, e, mod, p):
    result = [1]
    base = fp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = fp_divmod(fp_mul(result, base, p), mod, p)[1]
        base = fp_divmod(fp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f, p):
    """Rabin's test: f | x^(p^d) - x and gcd(x^(p^(d/r)) - x, f) = 1 for primes r | d."""
    f = fp_trim(f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    for r in _prime_factors(d):
        h = fp_sub(fp_powmod(x, p ** (d // r), f, p), x, p)
        if len(fp_gcd(h, f, p)) != 1:
            return False
    return not fp_divmod(fp_sub(fp_powmod(x, p**d, f, p), x, p), f, p)[1]


def random_irreducible(p, d, rng=None):
    """Sample monic degree-d polynomials over F_p until one is irreducible."""
    rng = rng if rng is not None else random.Random(0)
    if d == 1:
        return [0, 1]
    while True:
        f = [rng.randrange(p) for _ in range(d)] + [1]
        if is_irreducible(f, p):
            return f


# ---------------------------------------------------------------------------
# F_{p^m}

class FieldCtx:
    """The field F_p[t]/(modulus) with ``modulus`` monic irreducible."""

    def __init__(self, p, modulus, check=True):
        check_characteristic(p)
        modulus = [c % p for c in modulus]
        if fp_trim(modulus) != modulus or modulus[-1] != 1:
            raise NotMonic("defining polynomial must be monic")
        if check and not is_irreducible(modulus, p):
            raise ReduciblePolynomial(f"{modulus} is reducible over F_{p}")
        self.p = p
        self.modulus = tuple(modulus)
        self.n = len(modulus) - 1
        self.size = p**self.n

    def __repr__(self):
        return f"FieldCtx(p={self.p}, modulus={list(self.modulus)})"

    @property
    def zero(self):
        return (0,) * self.n

    @property
    def one(self):
        return (1,) + (0,) * (self.n - 1)

    def from_int(self, c):
        return (c % self.p,) + (0,) * (self.n - 1)

    def gen(self):
        if self.n == 1:
            return ((-self.modulus[0]) % self.p,)
        return (0, 1) + (0,) * (self.n - 2)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, n, f = self.p, self.n, self.modulus
        if n == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(n):
                    prod[k - n + j] -= c * f[j]
        return tuple(c % p for c in prod[:n])

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if not any(a):
            raise DivisionByZero("inverse of zero in a finite field")
        return self.pow(a, self.size - 2)

    def is_zero(self, a):
        return not any(a)

    def elements(self):
        for digits in itertools.product(range(self.p), repeat=self.n):
            yield tuple(reversed(digits))

    def random_element(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.n))

    # polynomials with coefficients in this field: lists, constant first

    def poly_trim(self, a):
        a = list(a)
        while a and not any(a[-1]):
            a.pop()
        return a

    def poly_eval(self, a, x):
        acc = self.zero
        for c in reversed(a):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def poly_derivative(self, a):
        return self.poly_trim(
            [self.mul(self.from_int(i), c) for i, c in enumerate(a)][1:]
        )

    def poly_divmod(self, a, b):
        a, b = self.poly_trim(a), self.poly_trim(b)
        if not b:
            raise DivisionByZero("polynomial division by zero")
        inv_lead = self.inv(b[-1])
        r = list(a)
        q = [self.zero] * max(len(a) - len(b) + 1, 0)
        for k in range(len(a) - len(b), -1, -1):
            c = self.mul(r[k + len(b) - 1], inv_lead)
            q[k] = c
            if any(c):
                for j, y in enumerate(b):
                    r[k + j] = self.sub(r[k + j], self.mul(c, y))
        return self.poly_trim(q), self.poly_trim(r[: len(b) - 1])

    def poly_gcd(self, a, b):
        a, b = self.poly_trim(a), self.poly_trim(b)
        while b:
            a, b = b, self.poly_divmod(a, b)[1]
        if a:
            inv = self.inv(a[-1])
            a = [self.mul(c, inv) for c in a]
        return a

    def quadratic_character(self, a):
        """Legendre symbol of ``a``: 0, +1 or -1, via a^((Q-1)/2)."""
        if not any(a):
            return 0
        r = self.pow(a, (self.size - 1) // 2)
        return 1 if r == self.one else -1


def quadratic_character(a, field):
    return field.quadratic_character(a)


# ---------------------------------------------------------------------------
# curves

@dataclass(frozen=True)
class CurveData:
    """The curve y^2 = Qbar(x) over ``field``, Qbar monic of degree 2g+1."""

    field: FieldCtx
    Qbar: tuple

    @property
    def degree(self):
        return len(self.Qbar) - 1

    @property
    def g(self):
        return (len(self.Qbar) - 2) // 2

    @property
    def p(self):
        return self.field.p

    @property
    def n(self):
        return self.field.n

    @property
    def q(self):
        return self.field.size


def validate_curve(curve):
    F = curve.field
    Q = list(curve.Qbar)
    if not Q or not any(Q[-1]):
        raise WrongDegree("leading coefficient of Q is zero")
    if Q[-1] != F.one:
        raise NotMonic("Q must be monic")
    d = len(Q) - 1
    if d < 3 or d % 2 == 0:
        raise WrongDegree(f"Q must have odd degree 2g+1 >= 3, got {d}")
    if len(F.poly_gcd(Q, F.poly_derivative(Q))) != 1:
        raise NotSquarefree("Q has a repeated root")
    return curve


def random_curve(field, g, rng):
    """A random monic squarefree Qbar of degree 2g+1 over ``field``."""
    while True:
        Q = tuple(field.random_element(rng) for _ in range(2 * g + 1)) + (field.one,)
        curve = CurveData(field, Q)
        try:
            return validate_curve(curve)
        except NotSquarefree:
            continue


def _embed(curve, big):
    """Map Qbar into ``big`` through a root of the small field's modulus."""
    small = curve.field
    if small.n == 1:
        return [big.from_int(c[0]) for c in curve.Qbar]
    modulus = [big.from_int(c) for c in small.modulus]
    theta = next((t for t in big.elements() if big.is_zero(big.poly_eval(modulus, t))), None)
    if theta is None:
        raise ValueError("small field does not embed in the big field")
    powers = [big.one]
    for _ in range(small.n - 1):
        powers.append(big.mul(powers[-1], theta))
    out = []
    for c in curve.Qbar:
        acc = big.zero
        for cj, tj in zip(c, powers):
            acc = big.add(acc, big.mul(big.from_int(cj), tj))
        out.append(acc)
    return out


def count_points_oracle(curve, i=1, guard=ORACLE_GUARD, big_modulus=None):
    """#C(F_{q^i}) for the projective curve, by enumerating every abscissa.

    ``big_modulus`` optionally fixes the degree-(n*i) polynomial defining
    F_{q^i}; by default one is chosen with a seeded generator.
    """
    p, n = curve.p, curve.n
    size = p ** (n * i)
    if size > guard:
        raise FieldTooLarge(f"F_{{{p}^{n * i}}} has {size} elements, guard is {guard}")
    if big_modulus is None:
        big_modulus = random_irreducible(p, n * i, random.Random(0))
    big = FieldCtx(p, big_modulus)
    Q = _embed(curve, big)
    total = 1  # the point at infinity
    for x in big.elements():
        total += 1 + big.quadratic_character(big.poly_eval(Q, x))
    return total
