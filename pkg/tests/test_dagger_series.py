import random

from hypothesis import given
from hypothesis import strategies as st

from hyperzeta import dagger_series as ds
from hyperzeta import poly_ring as pr
from hyperzeta.padic_ring import RingCtx

CTX = RingCtx(5, 1, 4)
Q = [CTX.from_int(c) for c in (1, 1, 0, 1)]  # x^3 + x + 1


def rand_series(rng, lo=-1, hi=4, normalized=True):
    width = 3 if normalized else 6
    return ds.make({
        k: [CTX.from_int(rng.randrange(CTX.modulus)) for _ in range(rng.randrange(0, width + 1))]
        for k in range(lo, hi + 1)
    })


def as_laurent(s):
    """Values at a few x with Q(x) a unit, taking t = 1/Q(x)."""
    out = []
    for x0 in (2, 3, 7, 11):
        x = CTX.from_int(x0)
        Qx = pr.evaluate(CTX, Q, x)
        out.append(ds.evaluate(CTX, s, x, CTX.inv(Qx)))
    return out


def test_normalize_examples():
    one = ds.normalize(CTX, ds.make({1: Q}), Q)
    assert one == ds.constant(CTX)
    x3 = pr.monomial(CTX, 3)
    s = ds.normalize(CTX, ds.make({0: x3}), Q)
    assert s == ds.make({-1: [CTX.one], 0: pr.sub(CTX, x3, Q)})
    n = ds.make({0: [CTX.one, CTX.one], 2: [CTX.zero, CTX.one]})
    assert ds.normalize(CTX, n, Q) == n


def test_series_mul_examples():
    rng = random.Random(0)
    b = rand_series(rng)
    assert ds.series_mul(CTX, ds.constant(CTX), b, Q) == b
    t = ds.make({1: [CTX.one]})
    assert ds.series_mul(CTX, t, t, Q, J=2) == ds.make({2: [CTX.one]})


def test_truncate():
    s = ds.make({0: [CTX.one], 3: [CTX.from_int(25)], 5: [CTX.from_int(5)]})
    assert ds.truncate(CTX, s, 9) == s
    cut = ds.truncate(CTX, s, 3)
    assert cut == ds.make({0: [CTX.one], 3: [CTX.from_int(25)]})
    assert cut.dropped_valuation == 1
    assert ds.truncate(CTX, s, -1).is_zero()


def test_tail_valuation_bound():
    # coefficient i of a degree-p Frobenius image is divisible by p^m once i > p/2 + p m
    assert ds.tail_valuation_bound(5, 2) == 0
    assert ds.tail_valuation_bound(5, 8) == 1
    assert ds.tail_valuation_bound(5, 13) == 2
    assert ds.tail_valuation_bound(3, 1) == 0


@given(st.integers(0, 10**6))
def test_normalize_preserves_value_and_is_idempotent(seed):
    rng = random.Random(seed)
    s = rand_series(rng, normalized=False)
    n = ds.normalize(CTX, s, Q)
    assert ds.is_normalized(n, Q)
    assert ds.normalize(CTX, n, Q) == n
    assert as_laurent(n) == as_laurent(s)


@given(st.integers(0, 10**6))
def test_series_mul_is_associative_and_matches_evaluation(seed):
    rng = random.Random(seed)
    a, b, c = (rand_series(rng) for _ in range(3))
    ab_c = ds.series_mul(CTX, ds.series_mul(CTX, a, b, Q), c, Q)
    a_bc = ds.series_mul(CTX, a, ds.series_mul(CTX, b, c, Q), Q)
    assert ab_c == a_bc
    ev = [CTX.mul(x, y) for x, y in zip(as_laurent(a), as_laurent(b))]
    assert as_laurent(ds.series_mul(CTX, a, b, Q)) == ev


@given(st.integers(0, 10**6))
def test_polynomial_part_plus_pole_part(seed):
    rng = random.Random(seed)
    s = rand_series(rng, lo=-3, hi=2)
    G = ds.polynomial_part(CTX, s, Q)
    poles = ds.make(ds.pole_part(s))
    recombined = ds.add(CTX, ds.normalize(CTX, ds.make({0: G}), Q), poles)
    assert recombined == s
