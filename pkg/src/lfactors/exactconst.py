"""Exact constant subring: rationals times powers of i times square roots of primes.

Every constant the local-factor formulas produce (Kottwitz signs, central
signs, epsilon constants, Gauss sums) lies in this multiplicative subring.
It is closed under multiplication and inversion; anything else degrades to
a plain complex number, flagged by losing the ExactConst type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def factor_int(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class ExactConst:
    """rat * i^ipow * prod_{p in roots} sqrt(p)."""

    rat: Fraction = Fraction(1)
    ipow: int = 0                      # modulo 4
    roots: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        rat = Fraction(self.rat)
        ipow = self.ipow % 4
        if ipow >= 2:  # canonical form keeps ipow in {0, 1}
            rat, ipow = -rat, ipow - 2
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "ipow", ipow)
        if rat == 0:
            object.__setattr__(self, "ipow", 0)
            object.__setattr__(self, "roots", frozenset())

    @staticmethod
    def one() -> "ExactConst":
        return ExactConst()

    @staticmethod
    def i() -> "ExactConst":
        return ExactConst(Fraction(1), 1)

    @staticmethod
    def of(v) -> "ExactConst":
        if isinstance(v, ExactConst):
            return v
        return ExactConst(Fraction(v))

    @staticmethod
    def half_power(base: Fraction, k: int) -> "ExactConst":
        """base^{k/2} for a positive rational base."""
        base = Fraction(base)
        if base <= 0:
            raise ValueError("positive base required")
        fac = factor_int(base.numerator)
        for p, e in factor_int(base.denominator).items():
            fac[p] = fac.get(p, 0) - e
        rat = Fraction(1)
        roots: set[int] = set()
        for p, e in fac.items():
            n = e * k  # total exponent of p is n/2
            rat *= Fraction(p) ** (n // 2)
            if n % 2:
                roots.add(p)  # leftover sqrt(p); n//2 floored, so this adds +1/2
        return ExactConst(rat, 0, frozenset(roots))

    def __mul__(self, other) -> "ExactConst":
        o = ExactConst.of(other)
        rat = self.rat * o.rat
        for p in self.roots & o.roots:  # sqrt(p)^2 = p
            rat *= p
        return ExactConst(rat, self.ipow + o.ipow, self.roots ^ o.roots)

    __rmul__ = __mul__

    def inverse(self) -> "ExactConst":
        if self.rat == 0:
            raise ZeroDivisionError("inverse of zero constant")
        rat = 1 / self.rat
        for p in self.roots:  # 1/sqrt(p) = sqrt(p)/p
            rat /= p
        return ExactConst(rat, -self.ipow, self.roots)

    def __pow__(self, k: int) -> "ExactConst":
        if k < 0:
            return self.inverse() ** (-k)
        out = ExactConst.one()
        b = self
        while k:
            if k & 1:
                out = out * b
            b = b * b
            k >>= 1
        return out

    def __neg__(self) -> "ExactConst":
        return ExactConst(-self.rat, self.ipow, self.roots)

    @property
    def is_one(self) -> bool:
        return self.rat == 1 and self.ipow == 0 and not self.roots

    @property
    def is_rational(self) -> bool:
        return self.ipow == 0 and not self.roots

    def to_complex(self) -> complex:
        v = complex(self.rat)
        v *= (1j) ** self.ipow
        for p in self.roots:
            v *= p ** 0.5
        return v

    def __eq__(self, other):
        if isinstance(other, ExactConst):
            return (self.rat, self.ipow, self.roots) == (other.rat, other.ipow, other.roots)
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.rat == other
        return NotImplemented

    def __hash__(self):
        return hash((self.rat, self.ipow, self.roots))

    def __str__(self):
        if self.rat == 0:
            return "0"
        rat, ipow = self.rat, self.ipow
        if ipow >= 2:  # i^2 = -1
            rat, ipow = -rat, ipow - 2
        parts = (["i"] if ipow == 1 else []) + [f"sqrt({p})" for p in sorted(self.roots)]
        if not parts:
            return str(rat)
        body = " * ".join(parts)
        if rat == 1:
            return body
        if rat == -1:
            return "-" + body
        return f"{rat} * {body}"
