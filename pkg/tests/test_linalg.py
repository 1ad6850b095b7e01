from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from chipfire.linalg import (
    flcm,
    floor_frac_split,
    frac_part,
    gcd_entries,
    identity,
    is_integer_entry,
    mat_det,
    mat_from_json,
    mat_inverse,
    mat_is_integral,
    mat_mul,
    mat_scale,
    mat_to_json,
    mat_vec,
    parse_rational,
    rational_str,
    vec_add,
    vec_from_json,
    vec_is_integral,
    vec_scale,
    vec_sub,
    vec_to_json,
    xgcd,
)

ints = st.integers(min_value=-50, max_value=50)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def square(n, elems=ints):
    return st.lists(st.lists(elems, min_size=n, max_size=n), min_size=n, max_size=n).map(
        lambda rows: tuple(tuple(r) for r in rows)
    )


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_xgcd_bezout(a, b):
    g, x, y = xgcd(a, b)
    assert g == a * x + b * y
    assert g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


@given(rationals)
def test_floor_frac_scalar(q):
    fl, fr = floor_frac_split((q,))
    assert fl[0] + fr[0] == q
    assert isinstance(fl[0], int)
    assert 0 <= fr[0] < 1


@given(st.lists(rationals, min_size=1, max_size=5))
def test_frac_part_is_periodic(vals):
    v = tuple(vals)
    shifted = vec_add(v, tuple(1 for _ in v))
    assert frac_part(v) == frac_part(shifted)


def test_flcm_on_matrix_and_vector():
    a = ((Fraction(1, 2), 3), (Fraction(5, 6), Fraction(1, 4)))
    assert flcm(a) == 12
    assert flcm((Fraction(2, 3), Fraction(1, 2))) == 6
    assert flcm(((1, 2), (3, 4))) == 1


def test_gcd_entries():
    assert gcd_entries(((4, -6), (10, 0))) == 2
    with pytest.raises(ValueError):
        gcd_entries(((0, 0), (0, 0)))


@given(st.integers(-999, 999), st.integers(1, 999))
def test_rational_str_roundtrip(num, den):
    q = Fraction(num, den)
    assert parse_rational(rational_str(q)) == q


def test_json_roundtrip():
    v = (1, Fraction(-3, 4), 0)
    assert vec_from_json(vec_to_json(v)) == v
    a = ((Fraction(1, 2), 2), (-3, Fraction(7, 5)))
    assert mat_from_json(mat_to_json(a)) == a


@settings(max_examples=60)
@given(square(3))
def test_det_matches_sympy(a):
    assert mat_det(a) == sympy.Matrix(a).det()


@settings(max_examples=40)
@given(square(3, st.integers(-6, 6)))
def test_inverse_matches_sympy(a):
    if mat_det(a) == 0:
        with pytest.raises(ValueError):
            mat_inverse(a)
        return
    inv = mat_inverse(a)
    expected = sympy.Matrix(a).inv()
    for i in range(3):
        for j in range(3):
            assert inv[i][j] == Fraction(*sympy.fraction(expected[i, j]))
    assert mat_mul(a, inv) == identity(3)


@settings(max_examples=40)
@given(square(2), square(2))
def test_mat_mul_matches_sympy(a, b):
    got = mat_mul(a, b)
    expected = sympy.Matrix(a) * sympy.Matrix(b)
    assert got == tuple(tuple(expected[i, j] for j in range(2)) for i in range(2))


@given(square(2), st.lists(ints, min_size=2, max_size=2))
def test_mat_vec_linear(a, xs):
    x = tuple(xs)
    assert mat_vec(a, vec_scale(3, x)) == vec_scale(3, mat_vec(a, x))
    assert vec_sub(mat_vec(a, x), mat_vec(a, x)) == (0, 0)


def test_integrality_predicates():
    # entries are kept normalized: whole values are ints, never Fraction(k, 1)
    assert is_integer_entry(2)
    assert not is_integer_entry(Fraction(1, 2))
    assert vec_is_integral((1, -3))
    assert not vec_is_integral((1, Fraction(1, 3)))
    assert mat_is_integral(identity(2))
    assert not mat_is_integral(((Fraction(1, 2), 0), (0, 1)))


def test_arithmetic_normalizes_whole_results():
    # a Fraction computation that lands on an integer comes back as int
    half = ((Fraction(1, 2), 0), (0, Fraction(1, 2)))
    doubled = mat_scale(2, half)
    assert doubled == identity(2)
    assert all(isinstance(q, int) for row in doubled for q in row)
    s = vec_add((Fraction(1, 2),), (Fraction(1, 2),))
    assert s == (1,) and isinstance(s[0], int)


def test_singular_inverse_message():
    with pytest.raises(ValueError, match="singular"):
        mat_inverse(((1, 2), (2, 4)))
