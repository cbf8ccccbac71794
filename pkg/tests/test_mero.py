import cmath
import json
import math
import random
from fractions import Fraction

import pytest

from lfactors.exactconst import ExactConst
from lfactors.mero import (LinForm, MeroExpr, PoleProximityError,
                           UnsupportedExpressionError, equals_numeric,
                           format_expr, from_json, mero_mul, parse_expr,
                           to_json)
from lfactors.ratfunc import as_rational_in_X


def GR(alpha, beta=0):
    return MeroExpr.gamma_r(LinForm(Fraction(alpha), beta))


def GC(alpha, beta=0):
    return MeroExpr.gamma_c(LinForm(Fraction(alpha), beta))


def test_eval_examples():
    assert abs(GR(1).eval(1) - 1) < 1e-12            # pi^{-1/2} Gamma(1/2) = 1
    assert abs(GC(1).eval(1) - 1 / math.pi) < 1e-12  # 2 (2 pi)^{-1}
    dup = mero_mul(GR(1), GR(1, 1), GC(1).inv())
    rng = random.Random(1)
    for _ in range(10):
        s = complex(rng.uniform(-2, 2), rng.uniform(0.5, 3))
        assert abs(dup.eval(s) - 1) < 1e-10


def test_pole_proximity():
    with pytest.raises(PoleProximityError):
        GR(1).eval(0)
    with pytest.raises(PoleProximityError):
        GC(1).eval(-3 + 1e-12j)
    with pytest.raises(PoleProximityError):
        MeroExpr.l_atom(5, 1, LinForm(Fraction(1), 0)).eval(0)


def test_mul_inv_pow():
    x = mero_mul(GR(1), GC(-1, Fraction(3, 2)))
    assert (x * x.inv()) == MeroExpr.one()
    assert x ** 3 == mero_mul(x, x, x)
    sq = GR(1) * GR(1)
    assert dict(sq.atoms)[next(iter(dict(sq.atoms)))] == 2  # multiplicity 2


def test_exponent_merging():
    xs = mero_mul(*[MeroExpr.exp(5, LinForm(Fraction(-1), 0))] * 3)
    assert format_expr(xs) == "5^(-3s)"
    drop = mero_mul(MeroExpr.exp(5, LinForm(Fraction(1), 1)),
                    MeroExpr.exp(5, LinForm(Fraction(-1), 0)))
    assert format_expr(drop) == "5"  # constant 5^1 folded into the prefactor


def test_subst_examples():
    g = GR(1)
    assert format_expr(g.subst(-1, 1)) == "GammaR(-s+1)"
    e = MeroExpr.exp(5, LinForm(Fraction(-1), 0))
    assert format_expr(e.subst(1, 2)) == "1/25 * 5^(-s)"  # q^{-2} q^{-s}
    assert g.subst(1, 1).subst(1, -1) == g


def test_equals_numeric_examples():
    x = GR(1) * GR(1, 1)
    assert equals_numeric(x, x)
    assert equals_numeric(x, GC(1))          # duplication
    assert not equals_numeric(GR(1), GR(1, 2))


def test_roundtrip_spec_shape():
    x = mero_mul(MeroExpr.const(ExactConst.i()), GC(-1, Fraction(3, 2)),
                 GC(1, Fraction(3, 2)).inv())
    text = format_expr(x)
    assert text == "i * GammaC(-s+3/2) / GammaC(s+3/2)"
    assert parse_expr(text) == x
    assert from_json(json.loads(json.dumps(to_json(x)))) == x


def test_roundtrip_misc():
    exprs = [
        MeroExpr.const(ExactConst(Fraction(-3, 2), 1, frozenset([2, 5]))),
        mero_mul(MeroExpr.l_atom(7, -1, LinForm(Fraction(2), Fraction(-1, 2))),
                 GR(1, Fraction(5, 2)).inv()),
        MeroExpr.exp(3, LinForm(Fraction(-2), complex(0.7, 0))),
        MeroExpr.const(complex(1.25, -2.5)) * GC(1, complex(0.3, 0.1)),
    ]
    for x in exprs:
        assert parse_expr(format_expr(x)) == x
        assert from_json(to_json(x)) == x


def test_as_rational_examples():
    la = MeroExpr.l_atom(5, 1, LinForm(Fraction(1), 0))
    assert str(as_rational_in_X(la, 5)) == "(1) / (1 + -1*X)"
    assert str(as_rational_in_X(MeroExpr.exp(5, LinForm(Fraction(-2), 0)), 5)) == "X^2"
    tate = mero_mul(MeroExpr.l_atom(5, 1, LinForm(Fraction(-1), 1)), la.inv())
    rf = as_rational_in_X(tate, 5)
    rng = random.Random(2)
    for _ in range(5):
        s = complex(rng.uniform(-2, 2), rng.uniform(0.5, 2))
        assert abs(tate.eval(s) - rf.eval(cmath.exp(-s * cmath.log(5)))) < 1e-9
    with pytest.raises(UnsupportedExpressionError):
        as_rational_in_X(GR(1), 5)


def test_simplify_idempotent_and_eval_stable():
    x = mero_mul(GR(1), GR(1).inv(), GC(2, Fraction(1, 2)),
                 MeroExpr.exp(2, LinForm(Fraction(0), Fraction(3, 2))))
    y = MeroExpr(x.prefactor, x.atoms)
    assert x == y
    assert abs(x.eval(0.7 + 1.1j) - y.eval(0.7 + 1.1j)) < 1e-12


def test_mul_commutative_associative_canonical():
    a = GR(1, Fraction(1, 2))
    b = MeroExpr.l_atom(5, -1, LinForm(Fraction(2), Fraction(-1)))
    c = MeroExpr.exp(3, LinForm(Fraction(-1), 0)).inv()
    assert mero_mul(a, b) == mero_mul(b, a)
    assert mero_mul(mero_mul(a, b), c) == mero_mul(a, mero_mul(b, c))


def test_eval_accuracy_on_strip_against_mpmath():
    """>= 1e-12 relative accuracy for |Re s|, |Im s| <= 20."""
    import mpmath
    mpmath.mp.dps = 40
    pts = [complex(19, 19), complex(-19.5, 3.2), complex(0.25, 17.5),
           complex(-7.3, -11.1), complex(12.8, -19.0)]
    for s in pts:
        got = GR(1).eval(s)
        ms = mpmath.mpc(s.real, s.imag)
        want = mpmath.power(mpmath.pi, -ms / 2) * mpmath.gamma(ms / 2)
        rel = abs(got - complex(want)) / abs(complex(want))
        assert rel < 1e-12
        got_c = GC(1).eval(s)
        want_c = 2 * mpmath.power(2 * mpmath.pi, -ms) * mpmath.gamma(ms)
        assert abs(got_c - complex(want_c)) / abs(complex(want_c)) < 1e-12
