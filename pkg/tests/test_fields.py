from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfactors.characters import (MultCharacter, char_algebra, char_eval,
                                 char_inverse, char_mul, quadratic_character,
                                 unramified_twist)
from lfactors.fields import (LocalField, SquareClass, UnsupportedFieldError,
                             UnsupportedOperationError, hilbert_symbol,
                             nonsquare_unit, square_class, valuation)

Q3 = LocalField.padic(3)
Q5 = LocalField.padic(5)
Q7 = LocalField.padic(7)
R = LocalField.real()

rationals = st.fractions(min_value=-50, max_value=50).filter(lambda v: v != 0)
padic_fields = st.sampled_from([Q3, Q5, Q7, LocalField.padic(11)])
any_field = st.sampled_from([R, Q3, Q5, Q7, LocalField.padic(11)])


def test_field_validation():
    with pytest.raises(UnsupportedFieldError):
        LocalField.padic(2)
    with pytest.raises(UnsupportedFieldError):
        LocalField.padic(9)
    with pytest.raises(UnsupportedFieldError):
        LocalField.padic(5, 0)
    assert LocalField.padic(3, 2).q == 9


def test_valuation_examples():
    assert valuation(Q5, 50) == 2
    assert valuation(Q3, Fraction(1, 3)) == -1
    assert valuation(Q7, 2) == 0
    with pytest.raises(UnsupportedOperationError):
        valuation(R, 2)


def test_square_class_examples():
    assert square_class(R, -3).name == "-1"
    # 2 is a nonsquare mod 5 (squares mod 5 are {1, 4})
    assert {x * x % 5 for x in range(1, 5)} == {1, 4}
    assert square_class(Q5, 10).name == "up"
    # 3^2 = 2 mod 7
    assert pow(3, 2, 7) == 2
    assert square_class(Q7, 2).name == "1"


@given(any_field, rationals, rationals)
def test_square_class_mod_squares(F, x, y):
    assert square_class(F, x * y * y) == square_class(F, x)


def test_hilbert_examples():
    assert hilbert_symbol(R, -1, -1) == -1
    for F in (R, Q5, Q7):
        assert hilbert_symbol(F, Fraction(7, 3), 1) == 1
    assert hilbert_symbol(Q5, 5, 2) == -1


def brute_conic_mod(p, a, b, k=3):
    """Primitive solvability of z^2 = a x^2 + b y^2 mod p^k (small scan)."""
    mod = p ** k
    squares = {z * z % mod for z in range(mod)}
    for x in range(mod):
        for y in range(mod):
            if x % p == 0 and y % p == 0:
                continue
            if (a * x * x + b * y * y) % mod in squares:
                return True
    return False


@pytest.mark.parametrize("p", [3, 5])
def test_hilbert_against_small_brute_force(p):
    F = LocalField.padic(p)
    units = [1, 2, p - 1, p + 1]
    for ua in units:
        for ub in units:
            for ea in (1, p):
                for eb in (1, p):
                    a, b = ua * ea, ub * eb
                    assert (hilbert_symbol(F, a, b) == 1) == brute_conic_mod(p, a, b)


@given(any_field, rationals, rationals, rationals)
@settings(max_examples=60)
def test_hilbert_bilinearity(F, a, b, c):
    assert hilbert_symbol(F, a, b) == hilbert_symbol(F, b, a)
    assert hilbert_symbol(F, a, b * c) == hilbert_symbol(F, a, b) * hilbert_symbol(F, a, c)
    assert hilbert_symbol(F, a, -a) == 1


def test_quadratic_character_examples():
    sgn = quadratic_character(R, SquareClass(R, "-1"))
    assert char_eval(sgn, -2) == -1
    assert char_eval(sgn, 2) == 1
    triv = quadratic_character(R, SquareClass(R, "1"))
    assert char_eval(triv, -7) == 1
    chi_u = quadratic_character(Q5, SquareClass(Q5, "u"))
    assert chi_u.quad.is_trivial and chi_u.z == -1  # unramified with z = -1
    assert char_eval(chi_u, 5) == -1
    assert char_eval(chi_u, 7) == 1  # units evaluate trivially


def test_char_eval_norm_power():
    chi = MultCharacter.norm_power(Q5, 2)
    assert char_eval(chi, 5) == Fraction(1, 25)
    sgn = MultCharacter.sign(R)
    assert char_eval(sgn, -2) == -1


def test_char_algebra_examples():
    chi_u = quadratic_character(Q5, SquareClass(Q5, "u"))
    assert char_mul(chi_u, chi_u) == MultCharacter.trivial(Q5)
    tw = unramified_twist(MultCharacter.sign(R), 2)
    assert char_inverse(tw).t == -2 and char_inverse(tw).delta == 1
    assert char_algebra(MultCharacter.sign(R), mode="unramified_twist", s0=2) == tw


@given(padic_fields, rationals, st.sampled_from(["1", "u", "p", "up"]),
       st.sampled_from(["1", "u", "p", "up"]))
@settings(max_examples=60)
def test_char_mul_is_pointwise(F, x, c1, c2):
    chi1 = MultCharacter(F, SquareClass(F, c1), -1, Fraction(1))
    chi2 = MultCharacter(F, SquareClass(F, c2))
    lhs = complex(char_eval(char_mul(chi1, chi2), x))
    rhs = complex(char_eval(chi1, x)) * complex(char_eval(chi2, x))
    assert abs(lhs - rhs) <= 1e-12 * abs(rhs)


def test_even_residue_degree_square_classes():
    F9 = LocalField.padic(3, 2)
    # every Q_3-rational unit becomes a square in the residue field F_9
    assert square_class(F9, 2).name == "1"
    assert square_class(F9, 6).name == "p"
    with pytest.raises(UnsupportedOperationError):
        SquareClass(F9, "u").representative()


def test_nonsquare_unit_choice():
    assert nonsquare_unit(Q5) == 2
    assert nonsquare_unit(Q7) == 3
    assert nonsquare_unit(LocalField.padic(11)) == 2
