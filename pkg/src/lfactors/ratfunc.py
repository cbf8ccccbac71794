"""Rational functions in X = q^{-s} with exact Q(i, sqrt p) coefficients.

Nonarchimedean local factors are rational in q^{-s}; the coefficients the
formulas generate live in the biquadratic field Q(i, sqrt p) (half-integer
argument shifts contribute sqrt q, Gauss sums contribute i and sqrt p).
Inexact inputs (irrational twists) degrade the whole function to complex
coefficients; equality then falls back to numeric sampling.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .exactconst import ExactConst, factor_int


@dataclass(frozen=True)
class QiSqrt:
    """a + b sqrt(p) + (c + d sqrt(p)) i over Q, p an odd prime."""

    p: int
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @staticmethod
    def of(p: int, v) -> "QiSqrt":
        if isinstance(v, QiSqrt):
            if v.p != p:
                raise ValueError("mixed base primes")
            return v
        if isinstance(v, ExactConst):
            return _exact_to_qisqrt(p, v)
        return QiSqrt(p, Fraction(v))

    @property
    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def __add__(self, o: "QiSqrt") -> "QiSqrt":
        return QiSqrt(self.p, self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __neg__(self) -> "QiSqrt":
        return QiSqrt(self.p, -self.a, -self.b, -self.c, -self.d)

    def __sub__(self, o: "QiSqrt") -> "QiSqrt":
        return self + (-o)

    def __mul__(self, o: "QiSqrt") -> "QiSqrt":
        p = self.p
        # real/imag parts in Q(sqrt p): (a, b) + i (c, d)
        def rmul(x1, y1, x2, y2):  # (x1 + y1 sqrt p)(x2 + y2 sqrt p)
            return (x1 * x2 + p * y1 * y2, x1 * y2 + y1 * x2)
        ra, rb = rmul(self.a, self.b, o.a, o.b)
        ia, ib = rmul(self.c, self.d, o.c, o.d)
        ra, rb = ra - ia, rb - ib  # subtract i^2 part
        # cross terms give the imaginary component
        ca, cb = rmul(self.a, self.b, o.c, o.d)
        da, db = rmul(self.c, self.d, o.a, o.b)
        return QiSqrt(p, ra, rb, ca + da, cb + db)

    def conj_i(self) -> "QiSqrt":
        return QiSqrt(self.p, self.a, self.b, -self.c, -self.d)

    def conj_sqrt(self) -> "QiSqrt":
        return QiSqrt(self.p, self.a, -self.b, self.c, -self.d)

    def inverse(self) -> "QiSqrt":
        if self.is_zero:
            raise ZeroDivisionError
        # norm down to Q through the two conjugations
        z1 = self.conj_i()
        w = self * z1  # in Q(sqrt p), imaginary parts cancel
        w2 = w.conj_sqrt()
        n = w * w2  # rational
        assert n.b == 0 and n.c == 0 and n.d == 0
        scale = 1 / n.a
        out = z1 * w2
        return QiSqrt(self.p, out.a * scale, out.b * scale, out.c * scale, out.d * scale)

    def to_complex(self) -> complex:
        r = float(self.a) + float(self.b) * self.p ** 0.5
        im = float(self.c) + float(self.d) * self.p ** 0.5
        return complex(r, im)

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for coef, tag in ((self.a, ""), (self.b, f"*sqrt({self.p})"),
                          (self.c, "*i"), (self.d, f"*i*sqrt({self.p})")):
            if coef:
                terms.append(f"{coef}{tag}")
        return " + ".join(terms).replace("+ -", "- ")


def _exact_to_qisqrt(p: int, v: ExactConst) -> QiSqrt:
    if any(r != p for r in v.roots):
        raise ValueError(f"constant {v} does not lie in Q(i, sqrt {p})")
    has_root = p in v.roots
    re_pair = [Fraction(0), Fraction(0)]
    re_pair[1 if has_root else 0] = v.rat
    out = QiSqrt(p, *re_pair, Fraction(0), Fraction(0))
    i = QiSqrt(p, 0, 0, 1, 0)
    for _ in range(v.ipow):
        out = out * i
    return out


class Poly:
    """Laurent polynomial in X over QiSqrt(p) or complex coefficients."""

    __slots__ = ("p", "coeffs", "exact")

    def __init__(self, p: int, coeffs: dict[int, object], exact: bool = True):
        self.p = p
        self.exact = exact
        clean = {}
        for k, v in coeffs.items():
            v = self._norm(v)
            if not self._is_zero(v):
                clean[k] = v
        self.coeffs = clean

    def _norm(self, v):
        if self.exact:
            return QiSqrt.of(self.p, v) if not isinstance(v, QiSqrt) else v
        if isinstance(v, QiSqrt):
            return v.to_complex()
        if isinstance(v, ExactConst):
            return v.to_complex()
        return complex(v)

    @staticmethod
    def _is_zero(v) -> bool:
        if isinstance(v, QiSqrt):
            return v.is_zero
        return abs(v) == 0

    @staticmethod
    def const(p: int, v, exact: bool = True) -> "Poly":
        return Poly(p, {0: v}, exact)

    @staticmethod
    def monomial(p: int, k: int, v=1, exact: bool = True) -> "Poly":
        return Poly(p, {k: v}, exact)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree_range(self) -> tuple[int, int]:
        ks = self.coeffs.keys()
        return (min(ks), max(ks)) if ks else (0, 0)

    def align(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if self.exact == other.exact:
            return self, other
        return self.to_inexact(), other.to_inexact()

    def to_inexact(self) -> "Poly":
        if not self.exact:
            return self
        return Poly(self.p, {k: v.to_complex() for k, v in self.coeffs.items()}, False)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.align(other)
        out = dict(a.coeffs)
        for k, v in b.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return Poly(a.p, out, a.exact)

    def __neg__(self) -> "Poly":
        return Poly(self.p, {k: -v for k, v in self.coeffs.items()}, self.exact)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.align(other)
        out: dict[int, object] = {}
        for k1, v1 in a.coeffs.items():
            for k2, v2 in b.coeffs.items():
                k = k1 + k2
                prod = v1 * v2
                out[k] = out[k] + prod if k in out else prod
        return Poly(a.p, out, a.exact)

    def shift(self, k: int) -> "Poly":
        return Poly(self.p, {d + k: v for d, v in self.coeffs.items()}, self.exact)

    def scale(self, v) -> "Poly":
        return self * Poly.const(self.p, v, self.exact)

    def eval(self, x: complex) -> complex:
        total = 0j
        for k, v in self.coeffs.items():
            val = v.to_complex() if isinstance(v, QiSqrt) else complex(v)
            total += val * x ** k
        return total

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.align(other)
        if a.exact:
            return a.coeffs == b.coeffs
        keys = set(a.coeffs) | set(b.coeffs)
        scale = max((abs(v) for v in list(a.coeffs.values()) + list(b.coeffs.values())), default=1.0)
        return all(abs(a.coeffs.get(k, 0) - b.coeffs.get(k, 0)) <= 1e-9 * scale for k in keys)

    def __hash__(self):
        return hash(frozenset(self.coeffs.items())) if self.exact else id(self)

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            cs = str(c) if isinstance(c, QiSqrt) else repr(c)
            if ("+" in cs[1:]) or ("-" in cs[1:]) or "*" in cs:
                cs = f"({cs})"
            if k == 0:
                terms.append(cs)
            elif k == 1:
                terms.append(f"{cs}*X" if cs != "1" else "X")
            else:
                terms.append(f"{cs}*X^{k}" if cs != "1" else f"X^{k}")
        return " + ".join(terms)


def _poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Division for honest polynomials (nonnegative exponents, exact coefficients)."""
    assert a.exact and b.exact
    p = a.p
    rem = dict(a.coeffs)
    db = max(b.coeffs)
    lead = b.coeffs[db]
    lead_inv = lead.inverse()
    quo: dict[int, object] = {}
    while rem:
        da = max(rem)
        if da < db:
            break
        factor = rem[da] * lead_inv
        quo[da - db] = factor
        for k, v in b.coeffs.items():
            kk = k + da - db
            cur = rem.get(kk, QiSqrt(p))
            new = cur - factor * v
            if new.is_zero:
                rem.pop(kk, None)
            else:
                rem[kk] = new
    return Poly(p, quo), Poly(p, rem)


def _poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a.is_zero:
        return a
    lead = a.coeffs[max(a.coeffs)]
    return a.scale(lead.inverse())


class RatFunc:
    """num/den of Laurent polynomials, reduced when exact."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        num, den = num.align(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.exact and not num.is_zero:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def const(p: int, v, exact: bool = True) -> "RatFunc":
        return RatFunc(Poly.const(p, v, exact), Poly.const(p, 1, exact))

    @staticmethod
    def one(p: int) -> "RatFunc":
        return RatFunc.const(p, 1)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def inv(self) -> "RatFunc":
        if self.num.is_zero:
            raise ZeroDivisionError
        return RatFunc(self.den, self.num)

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inv() ** (-k)
        out = RatFunc.one(self.num.p)
        for _ in range(k):
            out = out * self
        return out

    def eval(self, x: complex) -> complex:
        return self.num.eval(x) / self.den.eval(x)

    @property
    def is_exact(self) -> bool:
        return self.num.exact

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    @property
    def is_one(self) -> bool:
        return self.num == self.den

    def __str__(self):
        ns, ds = str(self.num), str(self.den)
        if ds == "1":
            return ns
        return f"({ns}) / ({ds})"


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Cancel common factors; normalize so the lowest exponent is 0 and the
    denominator's trailing coefficient is 1."""
    p = num.p
    kn = min(num.coeffs) if num.coeffs else 0
    kd = min(den.coeffs)
    shift = min(kn, kd)
    num, den = num.shift(-shift), den.shift(-shift)
    g = _poly_gcd(num, den)
    if list(g.coeffs.keys()) != [0]:  # nontrivial common factor
        num, _ = _poly_divmod(num, g)
        den, _ = _poly_divmod(den, g)
    low = den.coeffs.get(min(den.coeffs))
    inv = low.inverse()
    return num.scale(inv), den.scale(inv)


def _q_power_exact(q: int, beta) -> ExactConst | complex:
    """q^{-beta}; exact when beta is a half-integer."""
    if isinstance(beta, Fraction) and beta.denominator in (1, 2):
        return ExactConst.half_power(Fraction(q), -int(2 * beta))
    return cmath.exp(-complex(beta) * cmath.log(q))


def _scalar_mul(a, b):
    """Multiply scalars, staying ExactConst while possible."""
    if isinstance(a, ExactConst) and isinstance(b, ExactConst):
        return a * b
    av = a.to_complex() if isinstance(a, ExactConst) else complex(a)
    bv = b.to_complex() if isinstance(b, ExactConst) else complex(b)
    return av * bv


def _scalar_to_coeff(p: int, v):
    """ExactConst/Fraction/complex -> QiSqrt or complex coefficient."""
    if isinstance(v, ExactConst):
        try:
            return QiSqrt.of(p, v)
        except ValueError:
            return v.to_complex()
    if isinstance(v, (int, Fraction)):
        return QiSqrt.of(p, Fraction(v))
    return complex(v)


def as_rational_in_X(expr, q: int) -> RatFunc:
    """Rewrite a purely nonarchimedean expression as a ratio of polynomials
    in X = q^{-s}; exact whenever every constant lies in Q(i, sqrt p)."""
    from .mero import ExpAtom, GammaCAtom, GammaRAtom, LAtom, UnsupportedExpressionError

    fac = factor_int(q)
    if len(fac) != 1:
        raise ValueError(f"residue cardinality {q} is not a prime power")
    p = next(iter(fac))

    scalar = ExactConst.one() if not isinstance(expr.prefactor, complex) else complex(expr.prefactor)
    if isinstance(expr.prefactor, ExactConst):
        scalar = expr.prefactor
    pieces: list[tuple[dict[int, object], int]] = []  # ({exp: coeff}, power)

    for atom, k in expr.atoms:
        if isinstance(atom, (GammaRAtom, GammaCAtom)):
            raise UnsupportedExpressionError("archimedean atom in rational-function form")
        if isinstance(atom, LAtom):
            if atom.q != q:
                raise UnsupportedExpressionError(f"mixed residue cardinalities {atom.q} vs {q}")
            alpha = atom.form.alpha
            if alpha.denominator != 1 or alpha == 0:
                raise UnsupportedExpressionError("L-atom argument must have integer s-slope")
            z = atom.z if not isinstance(atom.z, Fraction) else ExactConst.of(atom.z)
            coeff = _scalar_mul(z if isinstance(z, (ExactConst, complex)) else complex(z),
                                _q_power_exact(q, atom.form.beta))
            # atom = (1 - coeff X^alpha)^{-1}
            pieces.append(({0: 1, int(alpha): _neg(coeff)}, -k))
        else:
            assert isinstance(atom, ExpAtom)
            r = _as_q_power(atom.base, q)
            e = r * atom.form.alpha
            if e.denominator != 1:
                raise UnsupportedExpressionError("exponential atom is not integral in X")
            # base^{alpha s + beta} = q^{r beta} X^{-r alpha}
            scalar = _scalar_mul(scalar, _pow_any(_q_power_exact(q, _times(-r, atom.form.beta)), k))
            pieces.append(({-int(e) * k: 1}, 1))

    exact = isinstance(scalar, ExactConst) and all(
        not isinstance(c, complex) for poly, _ in pieces for c in poly.values())
    num = Poly.const(p, _scalar_to_coeff(p, scalar) if exact else _to_cx(scalar), exact)
    out = RatFunc(num, Poly.const(p, 1, exact))
    for coeffs, power in pieces:
        cc = {kk: (_scalar_to_coeff(p, v) if exact else _to_cx(v)) for kk, v in coeffs.items()}
        out = out * RatFunc(Poly(p, cc, exact), Poly.const(p, 1, exact)) ** power
    return out


def _neg(v):
    return -v if not isinstance(v, ExactConst) else ExactConst(-v.rat, v.ipow, v.roots)


def _to_cx(v) -> complex:
    if isinstance(v, ExactConst):
        return v.to_complex()
    if isinstance(v, QiSqrt):
        return v.to_complex()
    return complex(v)


def _pow_any(v, k: int):
    if isinstance(v, ExactConst):
        return v ** k
    return complex(v) ** k


def _times(r: Fraction, beta):
    if isinstance(beta, Fraction):
        return r * beta
    return complex(r) * complex(beta)


def _as_q_power(b: Fraction, q: int) -> Fraction:
    from .mero import UnsupportedExpressionError
    for r in range(0, 64):
        if Fraction(q) ** r == b:
            return Fraction(r)
        if Fraction(q) ** -r == b:
            return Fraction(-r)
    raise UnsupportedExpressionError(f"base {b} is not a power of {q}")
