"""Square classes, Hilbert symbols, and the characters they generate.

Local fields here are R or p-adic with odd p.  Every nonzero rational is
classified modulo squares, and the Hilbert symbol (a,b)_F detects whether
z^2 = a x^2 + b y^2 has a nontrivial solution.
"""

from fractions import Fraction

from lfactors import (LocalField, MultCharacter, SquareClass, char_eval,
                      hilbert_symbol, quadratic_character, square_class,
                      valuation)

R = LocalField.real()
Q5 = LocalField.padic(5)
Q7 = LocalField.padic(7)

print("== valuations ==")
print("ord_5(50) =", valuation(Q5, 50))
print("ord_3(1/3) =", valuation(LocalField.padic(3), Fraction(1, 3)))

print("\n== square classes ==")
print("-3 over R:", square_class(R, -3))
print("10 over Q_5:", square_class(Q5, 10), " (2 is a nonsquare unit, 5 the uniformizer)")
print("2 over Q_7:", square_class(Q7, 2), "  (3^2 = 2 mod 7)")

print("\n== Hilbert symbols ==")
print("(-1,-1)_R =", hilbert_symbol(R, -1, -1))
print("(5,2)_5  =", hilbert_symbol(Q5, 5, 2))
print("(a,1)_F  =", hilbert_symbol(Q5, Fraction(7, 3), 1), " (always trivial)")
print("bilinearity: (2, 15)_5 =", hilbert_symbol(Q5, 2, 15),
      "= (2,3)_5 (2,5)_5 =", hilbert_symbol(Q5, 2, 3) * hilbert_symbol(Q5, 2, 5))

print("\n== quadratic characters ==")
sgn = quadratic_character(R, SquareClass(R, "-1"))
print("x -> (x,-1)_R is the sign character: sgn(-2) =", char_eval(sgn, -2))
chi_u = quadratic_character(Q5, SquareClass(Q5, "u"))
print("x -> (x,u)_5 is unramified with value -1 at the uniformizer:",
      "quad part", chi_u.quad.name, "| z =", chi_u.z, "| chi_u(5) =", char_eval(chi_u, 5))
norm2 = MultCharacter.norm_power(Q5, 2)
print("|.|^2 at 5 (normalized absolute value):", char_eval(norm2, 5))
