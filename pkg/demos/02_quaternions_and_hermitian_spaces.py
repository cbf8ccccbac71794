"""Quaternion algebras, reduced norms, hermitian spaces and the Morita transfer.

The reduced norm of a matrix over (a,b) is computed through the splitting
embedding into 2x2 matrices over Q(sqrt a); an independent oracle is the
determinant of left multiplication on the column module.
"""

from fractions import Fraction

from lfactors import (HermitianSpace, LocalField, QuatMatrix,
                      QuaternionAlgebra, discriminant, kottwitz_sign,
                      matrix_reduced_norm, morita_natural)
from lfactors.quaternion import regular_representation_det

Q5 = LocalField.padic(5)
R = LocalField.real()
H = QuaternionAlgebra(R, Fraction(-1), Fraction(-1))   # Hamilton quaternions
D = QuaternionAlgebra(Q5, Fraction(2), Fraction(5))    # division over Q_5

print("H split over R?", H.is_split, "| (2,5)/Q_5 split?", D.is_split)

x = H.element(1, 1, 1, 1)
print("\nNrd(1+i+j+k) =", x.reduced_norm(), "| Trd(3+2i) =", H.element(3, 2).reduced_trace())

X = QuatMatrix.from_rows(D, [[D.element(1, 2), D.element(0, 0, 1)],
                             [D.element(0, 1, 1), D.element(2)]])
print("\nN(X) =", matrix_reduced_norm(X))
print("oracle det of the regular representation =", regular_representation_det(X),
      "= N(X)^2 =", matrix_reduced_norm(X) ** 2)

print("\n== epsilon-hermitian spaces ==")
V1 = HermitianSpace.diagonal(H, "hermitian", [1])
Vi = HermitianSpace.diagonal(H, "skew", [H.element(0, 1)])
print("disc of the rank-one hermitian space <1>:", discriminant(V1))
print("disc of the skew space <i>:", discriminant(Vi))
print("Kottwitz signs: hermitian n=1:", kottwitz_sign(V1),
      "| skew n=1:", kottwitz_sign(Vi),
      "| linear m=1:", kottwitz_sign(HermitianSpace.linear(H, 1)))

print("\n== Morita transfer over a rationally split algebra ==")
M = QuaternionAlgebra(Q5, Fraction(4), Fraction(3))
herm = morita_natural(HermitianSpace.diagonal(M, "hermitian", [1]))
print("hermitian <1> becomes a", herm.form_type, "form of dimension", herm.dim)
skew = HermitianSpace.diagonal(M, "skew", [M.element(0, 1), M.element(0, 0, 1)])
out = morita_natural(skew)
print("skew <i, j> becomes a", out.form_type, "form of dimension", out.dim,
      "with matching discriminant:", out.discriminant() == discriminant(skew))
