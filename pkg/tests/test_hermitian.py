import random
from fractions import Fraction

import pytest

from lfactors.fields import LocalField, UnsupportedOperationError
from lfactors.hermitian import (HermitianSpace, MoritaError, discriminant,
                                kottwitz_sign, morita_natural)
from lfactors.quaternion import QuatMatrix, QuaternionAlgebra, matrix_reduced_norm

Q5 = LocalField.padic(5)
R = LocalField.real()
H = QuaternionAlgebra(R, Fraction(-1), Fraction(-1))


def test_space_validation():
    with pytest.raises(ValueError):
        # <i> is not hermitian: (i)* = -i != i
        HermitianSpace.diagonal(H, "hermitian", [H.element(0, 1)])
    with pytest.raises(ValueError):
        HermitianSpace.diagonal(H, "skew", [1])
    HermitianSpace.diagonal(H, "skew", [H.element(0, 1)])  # fine


def test_discriminant_examples():
    V1 = HermitianSpace.diagonal(H, "hermitian", [1])
    assert discriminant(V1).name == "-1"
    Vi = HermitianSpace.diagonal(H, "skew", [H.element(0, 1)])
    assert H.element(0, 1).reduced_norm() == 1
    assert discriminant(Vi).name == "-1"
    assert discriminant(HermitianSpace(H, "hermitian", 0)).name == "1"
    with pytest.raises(UnsupportedOperationError):
        discriminant(HermitianSpace.linear(H, 2))


def test_discriminant_basis_invariance():
    rng = random.Random(9)
    alg = QuaternionAlgebra(Q5, Fraction(2), Fraction(5))
    V = HermitianSpace.diagonal(alg, "hermitian", [1, 2])
    for _ in range(10):
        P = QuatMatrix.from_rows(
            alg, [[alg.element(*(rng.randint(-2, 2) for _ in range(4)))
                   for _ in range(2)] for _ in range(2)])
        if matrix_reduced_norm(P) == 0:
            continue
        moved = HermitianSpace(alg, "hermitian", 2, P.conj_transpose() * V.gram * P)
        assert discriminant(moved) == discriminant(V)


def test_kottwitz_table():
    split = QuaternionAlgebra(Q5, Fraction(-1), Fraction(-1))
    assert kottwitz_sign(HermitianSpace.diagonal(split, "hermitian", [1])) == 1
    assert kottwitz_sign(HermitianSpace.diagonal(H, "hermitian", [1])) == -1
    assert kottwitz_sign(HermitianSpace.diagonal(H, "skew", [H.element(0, 1)])) == 1
    assert kottwitz_sign(HermitianSpace.linear(H, 1)) == -1
    assert kottwitz_sign(HermitianSpace.linear(H, 2)) == 1
    div = QuaternionAlgebra(Q5, Fraction(2), Fraction(5))
    assert kottwitz_sign(HermitianSpace.diagonal(div, "hermitian", [1, 1])) == -1
    assert kottwitz_sign(HermitianSpace.diagonal(
        div, "skew", [div.element(0, 1), div.element(0, 1)])) == -1


def test_morita_types_and_disc():
    alg = QuaternionAlgebra(Q5, Fraction(4), Fraction(3))  # rationally split
    assert alg.is_split
    lin = morita_natural(HermitianSpace.linear(alg, 2))
    assert lin.form_type == "zero" and lin.dim == 4 and lin.gram is None

    herm = morita_natural(HermitianSpace.diagonal(alg, "hermitian", [1]))
    assert herm.form_type == "symplectic" and herm.dim == 2
    assert herm.gram[0][1] == -herm.gram[1][0] and herm.gram[0][0] == 0

    for diag in ([alg.element(0, 1)], [alg.element(0, 1), alg.element(0, 0, 1)],
                 [alg.element(0, 2, 3)]):
        skew = HermitianSpace.diagonal(alg, "skew", diag)
        out = morita_natural(skew)
        assert out.form_type == "symmetric" and out.dim == 2 * skew.n
        assert out.discriminant() == discriminant(skew)


def test_morita_rejects_nonsplit_and_unrational():
    with pytest.raises(MoritaError):
        morita_natural(HermitianSpace.diagonal(H, "hermitian", [1]))
    # split over Q_5 but division over Q: no exact rational splitting
    tricky = QuaternionAlgebra(Q5, Fraction(2), Fraction(-1))
    assert tricky.is_split
    q2_split_over_Q = any(
        (x0 * x0 - 2 * x1 * x1 + x2 * x2 - 2 * x3 * x3) == 0 and (x0, x1, x2, x3) != (0, 0, 0, 0)
        for x0 in range(-2, 3) for x1 in range(-2, 3)
        for x2 in range(-2, 3) for x3 in range(-2, 3))
    assert q2_split_over_Q  # (1,1,1,0) works, so this one is fine rationally
    out = morita_natural(HermitianSpace.diagonal(tricky, "skew", [tricky.element(0, 1)]))
    assert out.form_type == "symmetric"
