"""Tate local L-, epsilon- and gamma-factors of multiplicative characters.

Conventions: the base additive character is e^{2 pi i x} over R and the
conductor-O character over Q_p (level 0); psi_a rescales by a, entering
epsilon through chi(a)|a|^{s-1/2}.  Ramified quadratic epsilon constants
are literal Gauss sums over the residue field, snapped to their exact
values in {sqrt p, i sqrt p} after a numerical guard.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from .characters import AddCharacter, MultCharacter, char_inverse
from .exactconst import ExactConst
from .fields import (SquareClass, UnsupportedFieldError, hilbert_pair_class,
                     valuation)
from .mero import LinForm, MeroExpr, mero_mul

# idempotent value cache; concurrent double-computation is harmless
_GAUSS_CACHE: dict[int, ExactConst] = {}


def gauss_sum(p: int) -> ExactConst:
    """The quadratic Gauss sum sum_x (x/p) e^{2 pi i x / p}, computed as the
    literal finite sum and snapped to its exact value (sqrt p or i sqrt p)."""
    if p in _GAUSS_CACHE:
        return _GAUSS_CACHE[p]
    total = 0j
    for x in range(1, p):
        leg = pow(x, (p - 1) // 2, p)
        sign = -1 if leg == p - 1 else 1
        total += sign * cmath.exp(2j * cmath.pi * x / p)
    root = p ** 0.5
    candidates = {
        ExactConst(Fraction(1), 0, frozenset([p])): root,
        ExactConst(Fraction(-1), 0, frozenset([p])): -root,
        ExactConst(Fraction(1), 1, frozenset([p])): root * 1j,
        ExactConst(Fraction(-1), 1, frozenset([p])): -root * 1j,
    }
    best, val = min(candidates.items(), key=lambda kv: abs(total - kv[1]))
    if abs(total - val) > 1e-9 * root:
        raise ArithmeticError(f"Gauss sum for p={p} did not snap to an exact value")
    _GAUSS_CACHE[p] = best
    return best


def _char_value_exact(chi: MultCharacter, x: Fraction) -> ExactConst | complex:
    """chi(x) as an exact constant when possible, else complex."""
    if chi.field.is_real:
        sgn = -1 if (x < 0 and chi.delta) else 1
        if chi.t == 0:
            return ExactConst.of(sgn)
        if isinstance(chi.t, Fraction) and chi.t.denominator in (1, 2):
            return ExactConst.of(sgn) * ExactConst.half_power(abs(Fraction(x)), int(2 * chi.t))
        return sgn * cmath.exp(complex(chi.t) * cmath.log(float(abs(x))))
    ordx = valuation(chi.field, x)
    quad = hilbert_pair_class(chi.field, x, chi.quad)
    base = ExactConst.of(quad)
    q = Fraction(chi.field.q)
    if isinstance(chi.z, Fraction) and isinstance(chi.t, Fraction) \
            and (2 * chi.t * ordx).denominator == 1:
        return base * ExactConst.of(chi.z ** ordx) * ExactConst.half_power(q, int(-2 * chi.t * ordx))
    return base.to_complex() * complex(chi.z) ** ordx * cmath.exp(
        -complex(chi.t) * ordx * cmath.log(chi.field.q))


def tate_L(chi: MultCharacter) -> MeroExpr:
    """L(s, chi): GammaR(s + t + delta) over R; (1 - chi(pi) q^{-s})^{-1}
    unramified nonarch; 1 ramified."""
    if chi.field.is_real:
        return MeroExpr.gamma_r(LinForm(Fraction(1), _plus(chi.t, chi.delta)))
    if chi.is_ramified:
        return MeroExpr.one()
    # value at a uniformizer, with |pi|^t folded into the argument shift
    return MeroExpr.l_atom(chi.field.q, chi.z, LinForm(Fraction(1), chi.t))


def tate_eps(chi: MultCharacter, psi: AddCharacter) -> MeroExpr:
    """epsilon(s, chi, psi_a), as a MeroExpr in s."""
    if chi.field != psi.field:
        raise ValueError("character and additive character over different fields")
    if chi.field.is_real:
        base = MeroExpr.const(ExactConst.i() ** chi.delta)
    elif not chi.is_ramified:
        base = MeroExpr.one()
    else:
        if chi.field.f != 1:
            raise UnsupportedFieldError(
                "ramified epsilon constants need residue degree 1")
        p = chi.field.p
        g = gauss_sum(p)  # = tau(eta, psi(./pi)); |g| = sqrt p
        chi_pi = _char_value_exact(
            MultCharacter(chi.field, chi.quad, chi.z, 0), Fraction(p))
        norm = ExactConst.half_power(Fraction(p), -1)  # 1/sqrt p
        const = g * norm * chi_pi if isinstance(chi_pi, ExactConst) \
            else g.to_complex() * norm.to_complex() * chi_pi
        # q^{(1/2 - s - t)} times the normalized Gauss root number
        base = mero_mul(MeroExpr.const(const),
                        MeroExpr.exp(Fraction(chi.field.q),
                                     LinForm(Fraction(-1), _plus(_neg(chi.t), Fraction(1, 2)))))
    if psi.a == 1:
        return base
    return mero_mul(base, _psi_scale(chi, psi.a))


def _psi_scale(chi: MultCharacter, a: Fraction) -> MeroExpr:
    """chi(a) |a|^{s - 1/2} as a MeroExpr."""
    ca = _char_value_exact(chi, a)
    const = MeroExpr.const(ca)
    if chi.field.is_real:
        absa = abs(Fraction(a))
        if absa == 1:
            return const
        return mero_mul(const, MeroExpr.exp(absa, LinForm(Fraction(1), Fraction(-1, 2))))
    orda = valuation(chi.field, a)
    if orda == 0:
        return const
    # |a| = q^{-ord a}
    return mero_mul(const, MeroExpr.exp(Fraction(chi.field.q),
                                        LinForm(Fraction(-orda), Fraction(orda, 2))))


def tate_gamma(chi: MultCharacter, psi: AddCharacter) -> MeroExpr:
    """gamma(s, chi, psi) = eps(s, chi, psi) L(1-s, chi^{-1}) / L(s, chi)."""
    dual = tate_L(char_inverse(chi)).subst(-1, 1)
    return mero_mul(tate_eps(chi, psi), dual, tate_L(chi).inv())


def eps_at_half(chi: MultCharacter, psi: AddCharacter) -> ExactConst | complex:
    """epsilon(1/2, chi, psi), as a constant."""
    return tate_eps(chi, psi).subst(0, Fraction(1, 2)).constant_value()


def quadratic_char_of_class(d: SquareClass) -> MultCharacter:
    return MultCharacter(d.field, d)


def _plus(x, y):
    if isinstance(x, Fraction) and isinstance(y, (int, Fraction)):
        return x + y
    return complex(x) + complex(y)


def _neg(x):
    return -x if isinstance(x, Fraction) else -complex(x)
