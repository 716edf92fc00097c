import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperzeta.errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldTooLarge,
    NotMonic,
    NotPrime,
    NotSquarefree,
    ReduciblePolynomial,
    WrongDegree,
)
from hyperzeta.finite_field import (
    CurveData,
    FieldCtx,
    count_points_oracle,
    is_irreducible,
    is_prime,
    quadratic_character,
    random_curve,
    random_irreducible,
    validate_curve,
)

from conftest import make_curve, make_field

F5 = FieldCtx(5, [0, 1])
F9 = FieldCtx(3, [1, 0, 1])


def curve_over(F, coeffs):
    return CurveData(F, tuple(F.from_int(c) for c in coeffs))


def test_field_basics():
    assert F5.inv(F5.one) == F5.one
    assert F5.pow(F5.from_int(2), 2) == F5.from_int(4)
    beta = F9.gen()
    assert F9.mul(beta, beta) == (2, 0)
    with pytest.raises(DivisionByZero):
        F5.inv(F5.zero)


def test_characteristic_checks():
    with pytest.raises(EvenCharacteristic):
        FieldCtx(2, [0, 1])
    with pytest.raises(EvenCharacteristic):
        FieldCtx(4, [0, 1])
    with pytest.raises(NotPrime):
        FieldCtx(9, [0, 1])
    assert [k for k in range(30) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_irreducibility():
    # -1 is a nonresidue mod 3 but 2^2 = -1 mod 5
    assert is_irreducible([1, 0, 1], 3)
    assert not is_irreducible([1, 0, 1], 5)
    with pytest.raises(ReduciblePolynomial):
        FieldCtx(5, [1, 0, 1])
    with pytest.raises(NotMonic):
        FieldCtx(5, [1, 0, 2])


@pytest.mark.parametrize("p,d", [(3, 2), (3, 3), (5, 2), (5, 4), (7, 3)])
def test_random_irreducible_has_no_roots_and_is_deterministic(p, d):
    f = random_irreducible(p, d, random.Random(7))
    assert f == random_irreducible(p, d, random.Random(7))
    assert len(f) == d + 1 and f[-1] == 1
    assert all(sum(c * x**i for i, c in enumerate(f)) % p for x in range(p))


@pytest.mark.parametrize("p,n", [(3, 2), (5, 2), (3, 3), (7, 2)])
def test_multiplicative_group_order(p, n):
    F = make_field(p, n)
    elems = list(F.elements())
    assert len(elems) == p**n == len(set(elems))
    for a in elems[1:]:
        assert F.pow(a, F.size - 1) == F.one
        assert F.mul(a, F.inv(a)) == F.one


def test_quadratic_character_examples():
    assert quadratic_character(F5.zero, F5) == 0
    assert quadratic_character(F5.from_int(4), F5) == 1
    assert quadratic_character(F5.from_int(2), F5) == -1


@pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (3, 2), (5, 2), (7, 2)])
def test_quadratic_character_matches_square_table(p, n):
    F = make_field(p, n)
    squares = {F.mul(a, a) for a in F.elements()}
    for a in F.elements():
        expected = 0 if F.is_zero(a) else (1 if a in squares else -1)
        assert F.quadratic_character(a) == expected


def test_validate_curve():
    validate_curve(curve_over(F5, [1, 1, 0, 1]))
    with pytest.raises(NotSquarefree):
        validate_curve(curve_over(F5, [0, 0, 0, 1]))
    with pytest.raises(NotMonic):
        validate_curve(curve_over(F5, [1, 0, 0, 2]))
    with pytest.raises(WrongDegree):
        validate_curve(curve_over(F5, [1, 0, 0, 0, 1]))
    with pytest.raises(WrongDegree):
        validate_curve(curve_over(F5, [1, 1]))


def test_oracle_worked_examples(f5_curve):
    assert count_points_oracle(f5_curve, 1) == 9
    assert count_points_oracle(f5_curve, 2) == 27
    # y^2 = x^5 + 1 over F_3: x = 0, 1, 2 give 2, 0, 1 points, plus infinity
    F3 = FieldCtx(3, [0, 1])
    assert count_points_oracle(curve_over(F3, [1, 0, 0, 0, 0, 1]), 1) == 4


def test_oracle_guard(f5_curve):
    with pytest.raises(FieldTooLarge):
        count_points_oracle(f5_curve, 11)
    with pytest.raises(FieldTooLarge):
        count_points_oracle(f5_curve, 2, guard=24)


def test_oracle_independent_of_big_field_model():
    curve = make_curve(3, 2, 1, 0)
    a = count_points_oracle(curve, 2, big_modulus=random_irreducible(3, 4, random.Random(1)))
    b = count_points_oracle(curve, 2, big_modulus=random_irreducible(3, 4, random.Random(2)))
    assert a == b


@given(st.sampled_from([(3, 1), (5, 1), (7, 1), (3, 2)]), st.integers(1, 2), st.integers(0, 10**6))
def test_oracle_counts_in_hasse_weil_interval(pn, g, seed):
    p, n = pn
    curve = random_curve(make_field(p, n), g, random.Random(seed))
    q = curve.q
    c = count_points_oracle(curve)
    assert (c - q - 1) ** 2 <= 4 * g * g * q


@given(st.integers(0, 10**6))
def test_oracle_parity(seed):
    # without rational roots, affine points pair up as (x, +-y)
    curve = random_curve(F5, 1, random.Random(seed))
    Q = list(curve.Qbar)
    if all(not F5.is_zero(F5.poly_eval(Q, x)) for x in F5.elements()):
        assert count_points_oracle(curve) % 2 == 1
