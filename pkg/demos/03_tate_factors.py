"""Tate L-, epsilon- and gamma-factors of characters, with exact rational
forms in X = q^{-s} and the literal Gauss sums behind ramified constants."""

from fractions import Fraction

from lfactors import (AddCharacter, LocalField, MultCharacter, SquareClass,
                      as_rational_in_X, char_inverse, format_expr, gauss_sum,
                      mero_mul, tate_L, tate_eps, tate_gamma)

Q5 = LocalField.padic(5)
psi = AddCharacter.standard(Q5)
triv = MultCharacter.trivial(Q5)

print("L(s, 1) over Q_5:", format_expr(tate_L(triv)), "=",
      as_rational_in_X(tate_L(triv), 5))
print("gamma(s, 1, psi):", format_expr(tate_gamma(triv, psi)))
print("as a rational function of X = 5^{-s}:",
      as_rational_in_X(tate_gamma(triv, psi), 5))

print("\n== functional equation, exactly in X ==")
g = tate_gamma(triv, psi)
prod = mero_mul(g, g.subst(-1, 1))
print("gamma(s) gamma(1-s) =", as_rational_in_X(prod, 5))

print("\n== ramified quadratic characters and Gauss sums ==")
print("Gauss sum for p=5:", gauss_sum(5), "| for p=7:", gauss_sum(7))
chi_p = MultCharacter(Q5, SquareClass(Q5, "p"))
print("epsilon(s, chi_5, psi):", format_expr(tate_eps(chi_p, psi)))
print("gamma(s, chi_5, psi):", format_expr(tate_gamma(chi_p, psi)))
gp = tate_gamma(chi_p, psi)
gd = tate_gamma(char_inverse(chi_p), psi.inverse()).subst(-1, 1)
print("FE for the ramified character:", as_rational_in_X(mero_mul(gp, gd), 5))

print("\n== psi-rescaling ==")
print("gamma(s, 1, psi_5):", format_expr(tate_gamma(triv, psi.rescale(Fraction(5)))))
print("  (the extra factor is chi(a) |a|^{s-1/2} with a = 5)")

R = LocalField.real()
psiR = AddCharacter.standard(R)
print("\n== over R ==")
print("gamma(s, 1, psi):  ", format_expr(tate_gamma(MultCharacter.trivial(R), psiR)))
print("gamma(s, sgn, psi):", format_expr(tate_gamma(MultCharacter.sign(R), psiR)))
