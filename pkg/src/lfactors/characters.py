"""Multiplicative and additive characters of a local field.

A multiplicative character is chi_d * nu * |.|^t where chi_d is quadratic
(attached to a square class), nu is unramified with value z at a
uniformizer, and t is a complex twist.  Over R this degenerates to
sgn^delta * |.|^t.  The nonsquare-unit quadratic class acts on F^x exactly
as the unramified character with z = -1, so constructors fold it into z
and `quad` is kept ramified-or-trivial.

The additive character is the fixed base character (e^{2 pi i x} over R,
the conductor-O character over Q_p) rescaled by a: psi_a(x) = psi(a x).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .fields import (
    LocalField,
    Rational,
    SquareClass,
    as_fraction,
    hilbert_pair_class,
    valuation,
)

ComplexLike = complex | float | int | Fraction


def _exact_or_complex(v: ComplexLike):
    """Keep exact rationals exact; collapse everything else to complex."""
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, float) and v == int(v):
        return Fraction(int(v))
    if isinstance(v, complex) and v.imag == 0 and v.real == int(v.real):
        return Fraction(int(v.real))
    return complex(v)


@dataclass(frozen=True)
class MultCharacter:
    field: LocalField
    quad: SquareClass          # quadratic part; "-1" means sgn over R
    z: ComplexLike = 1         # unramified value at a uniformizer (nonarch)
    t: ComplexLike = 0         # exponent of |.|^t

    def __post_init__(self):
        if self.quad.field != self.field:
            raise ValueError("quadratic part lives over a different field")
        object.__setattr__(self, "z", _exact_or_complex(self.z))
        object.__setattr__(self, "t", _exact_or_complex(self.t))
        if self.field.is_real:
            if self.z != 1:
                raise ValueError("real characters carry no uniformizer value")
        else:
            if self.z == 0:
                raise ValueError("unramified value must be nonzero")
            ubit, pbit = self.quad.bits
            if ubit:  # fold chi_u into the unramified part
                object.__setattr__(self, "z", _exact_or_complex(-self.z))
                name = "p" if pbit else "1"
                object.__setattr__(self, "quad", SquareClass(self.field, name))

    @staticmethod
    def trivial(field: LocalField) -> "MultCharacter":
        return MultCharacter(field, SquareClass(field, "1"))

    @staticmethod
    def sign(field: LocalField) -> "MultCharacter":
        if not field.is_real:
            raise ValueError("sgn is a real character")
        return MultCharacter(field, SquareClass(field, "-1"))

    @staticmethod
    def norm_power(field: LocalField, t: ComplexLike) -> "MultCharacter":
        return MultCharacter(field, SquareClass(field, "1"), 1, t)

    @property
    def delta(self) -> int:
        """Sign exponent over R."""
        if not self.field.is_real:
            raise ValueError("delta is a real-character attribute")
        return 0 if self.quad.is_trivial else 1

    @property
    def is_ramified(self) -> bool:
        return (not self.field.is_real) and self.quad.is_ramified

    @property
    def is_quadratic(self) -> bool:
        """Whether chi^2 = 1."""
        z2 = self.z * self.z == 1 if isinstance(self.z, Fraction) else abs(self.z * self.z - 1) < 1e-12
        t0 = self.t == 0
        return bool(z2 and t0) if not self.field.is_real else bool(t0)

    def __call__(self, x: Rational) -> complex | Fraction:
        return char_eval(self, x)


def quadratic_character(field: LocalField, d: SquareClass) -> MultCharacter:
    """chi_d(x) = (x, d)_F, as a MultCharacter."""
    return MultCharacter(field, d)


def char_eval(chi: MultCharacter, x: Rational):
    """chi(x); exact (a Fraction) whenever z and t permit."""
    xv = as_fraction(x)
    if chi.field.is_real:
        s = -1 if (xv < 0 and chi.delta) else 1
        if chi.t == 0:
            return Fraction(s)
        return s * cmath.exp(complex(chi.t) * cmath.log(float(abs(xv))))
    ord_x = valuation(chi.field, xv)
    quad_val = hilbert_pair_class(chi.field, xv, chi.quad)
    if isinstance(chi.z, Fraction) and isinstance(chi.t, Fraction) and chi.t.denominator == 1:
        # |x|^t = q^{-t ord}, exact for integer t
        return quad_val * chi.z ** ord_x * Fraction(chi.field.q) ** int(-chi.t * ord_x)
    zpow = complex(chi.z) ** ord_x if not isinstance(chi.z, Fraction) else float(chi.z) ** ord_x
    absx = float(chi.field.q) ** (-ord_x)
    return quad_val * zpow * cmath.exp(complex(chi.t) * cmath.log(absx))


def char_mul(a: MultCharacter, b: MultCharacter) -> MultCharacter:
    if a.field != b.field:
        raise ValueError("characters over different fields")
    z = a.z * b.z if not a.field.is_real else 1
    ta = a.t + b.t if isinstance(a.t, Fraction) and isinstance(b.t, Fraction) \
        else complex(a.t) + complex(b.t)
    return MultCharacter(a.field, a.quad * b.quad, z, ta)


def char_inverse(chi: MultCharacter) -> MultCharacter:
    z = 1 if chi.field.is_real else (1 / chi.z if isinstance(chi.z, Fraction) else 1 / complex(chi.z))
    t = -chi.t if isinstance(chi.t, Fraction) else -complex(chi.t)
    return MultCharacter(chi.field, chi.quad, z, t)


def unramified_twist(chi: MultCharacter, s0: ComplexLike) -> MultCharacter:
    """omega |-> omega_{s0} = omega * |.|^{s0}; only t changes."""
    s0 = _exact_or_complex(s0)
    t = chi.t + s0 if isinstance(chi.t, Fraction) and isinstance(s0, Fraction) \
        else complex(chi.t) + complex(s0)
    return MultCharacter(chi.field, chi.quad, chi.z, t)


def char_algebra(chi: MultCharacter, other: MultCharacter | None = None, *,
                 mode: str = "mul", s0: ComplexLike = 0) -> MultCharacter:
    """Dispatcher matching the module contract: mul / inverse / unramified_twist."""
    if mode == "mul":
        if other is None:
            raise ValueError("mul needs a second character")
        return char_mul(chi, other)
    if mode == "inverse":
        return char_inverse(chi)
    if mode == "unramified_twist":
        return unramified_twist(chi, s0)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class AddCharacter:
    """psi_a for the fixed base character of the field."""

    field: LocalField
    a: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))

    @staticmethod
    def standard(field: LocalField) -> "AddCharacter":
        return AddCharacter(field, Fraction(1))

    def rescale(self, b: Rational) -> "AddCharacter":
        """(psi_a)_b = psi_{ab}."""
        return AddCharacter(self.field, self.a * as_fraction(b))

    def inverse(self) -> "AddCharacter":
        """psi^{-1} = psi_{-1}-rescaled."""
        return AddCharacter(self.field, -self.a)

    @property
    def is_standard(self) -> bool:
        return self.a == 1
