"""Godement-Jacquet-type gamma factor for characters mu o N of GL_m(D),
in the normalization the doubling measure forces.

The closed form is obtained by eliminating the correction factor between
the two expressions for the degenerate-Whittaker normalizing constant in
the linear case:

    gj(u, mu, psi) = mu(2)^{4m} |2|^{4mu + 4m^2 - 2m}
                     prod_{i=0}^{2m-1} gamma(u + m - 1/2 - i, mu, psi).

Over odd-residue nonarchimedean fields the prefactors are 1 and gj is the
split-case product of Tate gammas; over R it differs from the classical
factor by exactly those powers of |2| and mu(2) (a measure normalization,
kept deliberately).  The derivation is reproduced mechanically from the
normalizing-constant identity in the doubling module's tests.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import AddCharacter, MultCharacter
from .mero import LinForm, MeroExpr, mero_mul
from .tate import _char_value_exact, tate_L, tate_eps, tate_gamma


def _two_power(field, form: LinForm) -> MeroExpr:
    """|2|_F^{form(s)}; trivial over odd-p nonarchimedean fields."""
    if field.is_real:
        return MeroExpr.exp(Fraction(2), form)
    return MeroExpr.one()  # |2| = 1 for odd residue characteristic


def _prefactor(m: int, mu: MultCharacter) -> MeroExpr:
    c = _char_value_exact(mu, Fraction(2))
    const = c ** (4 * m) if not isinstance(c, complex) else c ** (4 * m)
    return mero_mul(MeroExpr.const(const),
                    _two_power(mu.field, LinForm(Fraction(4 * m), Fraction(4 * m * m - 2 * m))))


def _shifts(m: int):
    return [Fraction(2 * m - 1, 2) - i for i in range(2 * m)]  # m - 1/2 - i


def gj_gamma_norm(m: int, mu: MultCharacter, psi: AddCharacter) -> MeroExpr:
    if m < 1:
        raise ValueError("GL block size must be >= 1")
    out = _prefactor(m, mu)
    for shift in _shifts(m):
        out = out * tate_gamma(mu, psi).subst(1, shift)
    return out


def gj_L(m: int, mu: MultCharacter) -> MeroExpr:
    out = MeroExpr.one()
    for shift in _shifts(m):
        out = out * tate_L(mu).subst(1, shift)
    return out


def gj_eps(m: int, mu: MultCharacter, psi: AddCharacter) -> MeroExpr:
    out = _prefactor(m, mu)
    for shift in _shifts(m):
        out = out * tate_eps(mu, psi).subst(1, shift)
    return out
