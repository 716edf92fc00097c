import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperzeta import dagger_series as ds
from hyperzeta import frobenius_lift as fl
from hyperzeta import poly_ring as pr
from hyperzeta.errors import SanityCheckFailed
from hyperzeta.padic_ring import RingCtx
from hyperzeta.zeta import make_precision_profile

from conftest import ints_poly, make_curve, ring_for


def test_build_s_perfect_power_cancels():
    ctx = RingCtx(5, 1, 4)
    s = fl.build_s(ctx, ints_poly(ctx, [0, 0, 0, 1]))
    assert s == ds.constant(ctx)


def test_build_s_worked_example():
    # p = 3, Q = x^3 + 1: Q^sigma(x^3) - Q^3 = -3x^6 - 3x^3 = -3Q^2 + 3Q
    ctx = RingCtx(3, 1, 5)
    s = fl.build_s(ctx, ints_poly(ctx, [1, 0, 0, 1]))
    assert s == ds.make({0: [ctx.one], 1: [ctx.from_int(-3)], 2: [ctx.from_int(3)]})


@pytest.mark.parametrize("p,n,g", [(3, 1, 1), (5, 1, 2), (7, 1, 1), (3, 2, 1), (5, 2, 2)])
def test_build_s_is_one_mod_p(p, n, g):
    for seed in range(4):
        curve = make_curve(p, n, g, seed)
        ctx = ring_for(curve, 5)
        s = fl.build_s(ctx, [ctx.lift(c) for c in curve.Qbar])
        assert ds.valuation(ctx, ds.sub(ctx, s, ds.constant(ctx))) >= 1


def test_inv_sqrt_of_one():
    ctx = RingCtx(5, 1, 4)
    Q = ints_poly(ctx, [1, 1, 0, 1])
    assert fl.inv_sqrt_newton(ctx, ds.constant(ctx), Q, 10) == ds.constant(ctx)


def test_inv_sqrt_toy_binomial_series():
    # s = 1 + 5t mod (25, t^3): z = 1 - (5/2) t + (75/8) t^2 = 1 + 10t
    ctx = RingCtx(5, 1, 2)
    Q = ints_poly(ctx, [1, 1, 0, 1])
    s = ds.make({0: [ctx.one], 1: [ctx.from_int(5)]})
    z = fl.inv_sqrt_newton(ctx, s, Q, 2)
    assert z == ds.make({0: [ctx.one], 1: [ctx.from_int(10)]})
    w = ds.truncate(ctx, ds.series_mul(ctx, ds.series_mul(ctx, z, z, Q), s, Q), 2)
    assert ds.DaggerSeries(w.kmin, w.coeffs) == ds.constant(ctx)


def test_inv_sqrt_rejects_unit_tail():
    ctx = RingCtx(5, 1, 2)
    Q = ints_poly(ctx, [1, 1, 0, 1])
    with pytest.raises(SanityCheckFailed):
        fl.inv_sqrt_newton(ctx, ds.make({0: [ctx.one], 1: [ctx.one]}), Q, 2)


@pytest.mark.parametrize("p,n,g", [(5, 1, 1), (3, 1, 1), (3, 1, 2), (3, 2, 1), (7, 1, 2)])
def test_inv_sqrt_on_real_curves(p, n, g):
    curve = make_curve(p, n, g, 0)
    prof = make_precision_profile(p, n, g)
    ctx = ring_for(curve, prof.N)
    Q = [ctx.lift(c) for c in curve.Qbar]
    fs = fl.compute_inv_y_sigma(ctx, Q, prof.J)
    assert fl.check_inv_sqrt(ctx, fs, Q)
    assert fs.z.kmin == 0 and fs.z.level(0) == [ctx.one]


@pytest.mark.parametrize("p", [3, 5, 7])
def test_coefficient_valuations_grow(p):
    # level j of z is divisible by p^ceil(j/p)
    curve = make_curve(p, 1, 1, 1)
    prof = make_precision_profile(p, 1, 1)
    ctx = ring_for(curve, prof.N)
    fs = fl.compute_inv_y_sigma(ctx, [ctx.lift(c) for c in curve.Qbar], prof.J)
    for j, c in fs.z.items():
        assert min(ctx.valuation(x) for x in c) >= -(-j // p)


def test_y_sigma_squared_is_Q_sigma():
    # (y^sigma)^-2 = y^(-2p) z^2 must equal 1 / Q^sigma(x^p)
    curve = make_curve(5, 2, 1, 3)
    prof = make_precision_profile(5, 2, 1)
    ctx = ring_for(curve, prof.N)
    Q = [ctx.lift(c) for c in curve.Qbar]
    fs = fl.compute_inv_y_sigma(ctx, Q, prof.J)
    z2 = ds.series_mul(ctx, fs.z, fs.z, Q)
    inv_y2 = ds.shift(z2, ctx.p)
    Qs = fl.sigma_of_poly(ctx, Q)
    prod = ds.normalize(ctx, ds.mul_poly(ctx, inv_y2, Qs), Q)
    prod = ds.truncate(ctx, prod, prof.J - 2)
    assert ds.DaggerSeries(prod.kmin, prod.coeffs) == ds.constant(ctx)


def test_mod_p_collapses_to_y_to_minus_p():
    curve = make_curve(5, 1, 1, 2)
    ctx = ring_for(curve, 1)
    fs = fl.compute_inv_y_sigma(ctx, [ctx.lift(c) for c in curve.Qbar], 8)
    assert fs.z == ds.constant(ctx)


@given(st.integers(0, 10**6))
def test_newton_step_fixed_point(seed):
    curve = make_curve(3, 1, 1, seed % 50)
    ctx = ring_for(curve, 6)
    Q = [ctx.lift(c) for c in curve.Qbar]
    fs = fl.compute_inv_y_sigma(ctx, Q, 15)
    again = ds.truncate(ctx, fl._newton_step(ctx, fs.z, fs.s, Q), 15)
    assert ds.DaggerSeries(again.kmin, again.coeffs) == fs.z
