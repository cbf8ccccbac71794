"""JSON query documents and their evaluation.

A query names a field, an algebra, a space (or linear block size), a
representation, omega, a psi scale, and the requested outputs.  Results
carry the canonical text, the JSON atom tree, an exact rational-function
form when the data is purely nonarchimedean, numeric values at requested
points, and a metadata block recording the conventions in force.

Numbers in documents: rationals are strings ("3/4"), complex numbers are
[re, im] pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import mero
from .characters import AddCharacter, MultCharacter
from .doubling import (GLChar, Induced, RegularNilpotentData, SkewHermCharR,
                       SpHighestWeight, TrivialRep, central_sign, correction_R,
                       epsilon_factor, gamma_factor, l_factor, normalization_c,
                       rep_space, root_number, t_factor)
from .exactconst import ExactConst
from .fields import LocalField, SquareClass, UnsupportedFieldError
from .hermitian import HermitianSpace
from .mero import MeroExpr, UnsupportedExpressionError, format_expr
from .quaternion import QuatMatrix, QuaternionAlgebra
from .ratfunc import as_rational_in_X
from .spherical import SphericalData, gamma_spherical, spherical_zeta

SCHEMA_VERSION = 1

KNOWN_OUTPUTS = ("gamma", "L", "epsilon", "root_number", "R", "c", "T", "spherical")


class QueryValidationError(ValueError):
    """Malformed or inconsistent query document."""


def _rational(v, what: str) -> Fraction:
    try:
        return Fraction(str(v))
    except (ValueError, ZeroDivisionError) as exc:
        raise QueryValidationError(f"{what}: not a rational: {v!r}") from exc


def _complex(v, what: str):
    if isinstance(v, str):
        return _rational(v, what)
    if isinstance(v, (int, float)):
        return Fraction(str(v)) if isinstance(v, int) else complex(v)
    if isinstance(v, list) and len(v) == 2:
        c = complex(float(v[0]), float(v[1]))
        if c.imag == 0 and float(c.real).is_integer():
            return Fraction(int(c.real))
        return c
    raise QueryValidationError(f"{what}: expected rational string or [re, im], got {v!r}")


def parse_field(doc, what: str = "field") -> LocalField:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise QueryValidationError(f"{what}: expected an object with 'kind'")
    try:
        if doc["kind"] == "real":
            return LocalField.real()
        if doc["kind"] == "nonarch":
            return LocalField.padic(int(doc["p"]), int(doc.get("f", 1)))
    except (UnsupportedFieldError, KeyError, ValueError) as exc:
        raise QueryValidationError(f"{what}: {exc}") from exc
    raise QueryValidationError(f"{what}: unknown kind {doc['kind']!r}")


def parse_character(doc, field: LocalField, what: str = "character") -> MultCharacter:
    if not isinstance(doc, dict):
        raise QueryValidationError(f"{what}: expected an object")
    quad = doc.get("quad", "1")
    try:
        sq = SquareClass(field, str(quad))
    except ValueError as exc:
        raise QueryValidationError(f"{what}: {exc}") from exc
    z = _complex(doc.get("z", "1"), f"{what}.z")
    t = _complex(doc.get("t", "0"), f"{what}.t")
    try:
        return MultCharacter(field, sq, z if not field.is_real else 1, t)
    except ValueError as exc:
        raise QueryValidationError(f"{what}: {exc}") from exc


def parse_algebra(doc, field: LocalField) -> QuaternionAlgebra:
    if not isinstance(doc, dict):
        raise QueryValidationError("algebra: expected an object with a, b")
    return QuaternionAlgebra(field, _rational(doc.get("a", -1), "algebra.a"),
                             _rational(doc.get("b", -1), "algebra.b"))


def _parse_quaternion(alg, v, what):
    if isinstance(v, (str, int, float)):
        return alg.element(_rational(v, what))
    if isinstance(v, list) and len(v) == 4:
        return alg.element(*(_rational(c, what) for c in v))
    raise QueryValidationError(f"{what}: expected rational or [x0,x1,x2,x3]")


def parse_space(doc, alg: QuaternionAlgebra) -> HermitianSpace:
    if not isinstance(doc, dict):
        raise QueryValidationError("space: expected an object")
    if "type" in doc:
        ftype = doc["type"]
    elif "eps" in doc:  # alternate descriptor: eps = +1 hermitian, -1 skew
        try:
            ftype = {1: "hermitian", -1: "skew"}[int(doc["eps"])]
        except (KeyError, ValueError):
            raise QueryValidationError("space: eps must be +1 or -1")
    else:
        raise QueryValidationError("space: expected 'type' or 'eps'")
    try:
        if ftype == "linear":
            return HermitianSpace.linear(alg, int(doc["m"]))
        if ftype in ("hermitian", "skew"):
            if "diag" in doc:
                ents = [_parse_quaternion(alg, v, "space.diag") for v in doc["diag"]]
                return HermitianSpace.diagonal(alg, ftype, ents)
            if "gram" in doc:
                rows = [[_parse_quaternion(alg, v, "space.gram") for v in row]
                        for row in doc["gram"]]
                n = len(rows)
                return HermitianSpace(alg, ftype, n, QuatMatrix.from_rows(alg, rows))
            if int(doc.get("n", -1)) == 0:
                return HermitianSpace(alg, ftype, 0)
            raise QueryValidationError("space: need 'diag', 'gram', or n = 0")
    except QueryValidationError:
        raise
    except (ValueError, KeyError) as exc:
        raise QueryValidationError(f"space: {exc}") from exc
    raise QueryValidationError(f"space: unknown type {ftype!r}")


def parse_rep(doc, field: LocalField, alg: QuaternionAlgebra):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise QueryValidationError("rep: expected an object with 'kind'")
    kind = doc["kind"]
    try:
        if kind == "trivial":
            space = parse_space(doc["space"], alg) if "space" in doc else None
            if space is None:
                raise QueryValidationError("rep: the trivial representation needs its space")
            return TrivialRep(space)
        if kind == "skew_char":
            return SkewHermCharR(int(doc["l"]))
        if kind == "sp_highest_weight":
            lam = tuple(int(v) for v in doc["lambda"])
            return SpHighestWeight(int(doc.get("n", len(lam))), lam)
        if kind == "gl_char":
            return GLChar(int(doc["m"]), parse_character(doc["chi"], field, "rep.chi"))
        if kind == "induced":
            blocks = tuple(GLChar(int(b["m"]), parse_character(b["chi"], field, "rep.blocks.chi"))
                           for b in doc["blocks"])
            return Induced(blocks, parse_rep(doc["kernel"], field, alg))
    except QueryValidationError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise QueryValidationError(f"rep: {exc}") from exc
    raise QueryValidationError(f"rep: unknown kind {kind!r}")


def parse_spherical(doc, field: LocalField) -> SphericalData:
    try:
        disc0 = SquareClass(field, str(doc["disc0"])) if "disc0" in doc else None
        return SphericalData(field, doc["form_type"], int(doc["r"]), int(doc["n0"]),
                             tuple(_complex(t, "spherical.exponents") for t in doc.get("exponents", [])),
                             disc0)
    except QueryValidationError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise QueryValidationError(f"spherical: {exc}") from exc


@dataclass
class QueryDocument:
    field: LocalField
    algebra: QuaternionAlgebra
    rep: object | None
    omega: MultCharacter
    psi: AddCharacter
    outputs: tuple[str, ...]
    eval_points: tuple[complex, ...]
    norm_value: Fraction
    t_scale: Fraction
    spherical: SphericalData | None
    shifted: bool = False

    @staticmethod
    def from_json(doc: dict) -> "QueryDocument":
        if not isinstance(doc, dict):
            raise QueryValidationError("query: expected a JSON object")
        field = parse_field(doc.get("field", {"kind": "real"}))
        alg = parse_algebra(doc.get("algebra", {"a": "-1", "b": "-1"}), field)
        rep = parse_rep(doc["rep"], field, alg) if "rep" in doc else None
        omega = parse_character(doc.get("omega", {}), field, "omega")
        psi_scale = _rational(doc.get("psi_scale", "1"), "psi_scale")
        if psi_scale == 0:
            raise QueryValidationError("psi_scale: must be nonzero")
        outputs = tuple(doc.get("outputs", ["gamma"]))
        for o in outputs:
            if o not in KNOWN_OUTPUTS:
                raise QueryValidationError(
                    f"outputs: unknown {o!r}; known: {', '.join(KNOWN_OUTPUTS)}")
        pts = tuple(complex(float(p[0]), float(p[1])) for p in doc.get("eval_points", []))
        sph = parse_spherical(doc["spherical"], field) if "spherical" in doc else None
        needs_rep = {"gamma", "L", "epsilon", "root_number", "R", "c", "T"}
        if rep is None and needs_rep & set(outputs):
            raise QueryValidationError("rep: required for the requested outputs")
        if "spherical" in outputs and sph is None:
            raise QueryValidationError("spherical: data block required")
        return QueryDocument(
            field, alg, rep, omega, AddCharacter(field, psi_scale),
            outputs, pts,
            _rational(doc.get("norm_value", "1"), "norm_value"),
            _rational(doc.get("t_scale", "2"), "t_scale"),
            sph, bool(doc.get("shifted", False)))


def _expr_payload(expr: MeroExpr, q: QueryDocument) -> dict:
    shown = expr.subst(1, Fraction(1, 2)) if q.shifted else expr
    payload = {
        "text": format_expr(shown),
        "tree": mero.to_json(shown),
        "s_convention": "Gamma-side (s + 1/2)" if q.shifted else "gamma-side",
    }
    if not q.field.is_real:
        try:
            payload["rational_in_X"] = str(as_rational_in_X(shown, q.field.q))
        except (UnsupportedExpressionError, ValueError):
            payload["rational_in_X"] = None
    values = []
    for pt in q.eval_points:
        try:
            v = shown.eval(pt)
            values.append([v.real, v.imag])
        except ArithmeticError:
            values.append(None)
    if q.eval_points:
        payload["values"] = values
    return payload


def _metadata(q: QueryDocument) -> dict:
    meta = {
        "schema": SCHEMA_VERSION,
        "psi": "level-0 standard character" if not q.field.is_real else "e^{2 pi i x}",
        "psi_scale": str(q.psi.a),
        "s_convention": "Gamma-side (s + 1/2)" if q.shifted else "gamma-side",
    }
    if not q.field.is_real:
        from .fields import nonsquare_unit
        if q.field.f % 2:
            meta["nonsquare_unit"] = nonsquare_unit(q.field)
        meta["residue_cardinality"] = q.field.q
    return meta


def run_query(doc: dict) -> dict:
    """Evaluate a query document; raises QueryValidationError or
    UnsupportedPairError for the two failure classes."""
    q = QueryDocument.from_json(doc)
    out: dict = {"schema": SCHEMA_VERSION, "results": {}, "metadata": _metadata(q)}
    A = RegularNilpotentData(q.norm_value)
    for name in q.outputs:
        if name == "gamma":
            out["results"]["gamma"] = _expr_payload(gamma_factor(q.rep, q.omega, q.psi), q)
        elif name == "L":
            out["results"]["L"] = _expr_payload(l_factor(q.rep, q.omega), q)
        elif name == "epsilon":
            out["results"]["epsilon"] = _expr_payload(epsilon_factor(q.rep, q.omega, q.psi), q)
        elif name == "root_number":
            w = root_number(rep_space(q.rep), central_sign(q.rep), q.omega, q.psi)
            if isinstance(w, ExactConst):
                out["results"]["root_number"] = {"exact": str(w),
                                                 "value": [w.to_complex().real, w.to_complex().imag]}
            else:
                out["results"]["root_number"] = {"exact": None, "value": [w.real, w.imag]}
        elif name == "R":
            out["results"]["R"] = _expr_payload(
                correction_R(rep_space(q.rep), q.omega, A, q.psi), q)
        elif name == "c":
            out["results"]["c"] = _expr_payload(
                normalization_c(rep_space(q.rep), q.omega, A, q.psi), q)
        elif name == "T":
            out["results"]["T"] = _expr_payload(
                t_factor(rep_space(q.rep), q.omega, q.t_scale), q)
        elif name == "spherical":
            sz = spherical_zeta(q.spherical)
            out["results"]["spherical"] = {
                "gamma": _expr_payload(gamma_spherical(q.spherical), q),
                "l_product": _expr_payload(sz.l_product, q),
                "d_v": _expr_payload(sz.d_v, q),
                "vol_symbol": sz.vol_symbol,
                "m_assumption": sz.m_assumption,
            }
            if sz.m_assumption is not None:
                out["metadata"]["hermitian_dv_m"] = sz.m_assumption
    return out
