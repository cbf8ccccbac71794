"""Epsilon-hermitian spaces over a quaternion algebra.

A space is (V, h) with Gram matrix R = (h(v_i, v_j)) satisfying
^tR^* = eps R; the linear case (h = 0) carries no Gram matrix.  The
discriminant is the square class of (-1)^n N(R).  The Morita transfer
turns a space over a split algebra into a 2n-dimensional bilinear space
over F (zero / symplectic / symmetric for linear / hermitian / skew).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .fields import (LocalField, SquareClass, UnsupportedOperationError,
                     square_class)
from .quaternion import (QuatMatrix, Quaternion, QuaternionAlgebra,
                         _det_rational, matrix_reduced_norm)

LINEAR = "linear"
HERMITIAN = "hermitian"
SKEW = "skew"


@dataclass(frozen=True)
class HermitianSpace:
    algebra: QuaternionAlgebra
    form_type: str  # linear | hermitian | skew
    n: int
    gram: QuatMatrix | None = None

    def __post_init__(self):
        if self.form_type not in (LINEAR, HERMITIAN, SKEW):
            raise ValueError(f"unknown form type {self.form_type!r}")
        if self.n < 0:
            raise ValueError("dimension must be nonnegative")
        if self.form_type == LINEAR:
            if self.gram is not None:
                raise ValueError("the linear case carries no Gram matrix")
            return
        if self.n == 0:
            return
        if self.gram is None:
            raise ValueError("epsilon-hermitian spaces need a Gram matrix")
        if self.gram.rows != self.n or self.gram.cols != self.n:
            raise ValueError("Gram matrix has wrong dimensions")
        eps = self.eps
        flipped = self.gram.conj_transpose()
        if flipped != (self.gram if eps == 1 else -self.gram):
            raise ValueError("Gram matrix violates ^tR^* = eps R")
        if matrix_reduced_norm(self.gram) == 0:
            raise ValueError("degenerate Gram matrix")

    @property
    def eps(self) -> int:
        if self.form_type == LINEAR:
            raise UnsupportedOperationError("the linear case has no epsilon")
        return 1 if self.form_type == HERMITIAN else -1

    @property
    def field(self) -> LocalField:
        return self.algebra.base

    @staticmethod
    def linear(algebra: QuaternionAlgebra, m: int) -> "HermitianSpace":
        return HermitianSpace(algebra, LINEAR, m)

    @staticmethod
    def diagonal(algebra: QuaternionAlgebra, form_type: str, diag) -> "HermitianSpace":
        """Space with Gram diag(d_1, ..., d_n); entries rationals or quaternions."""
        ents = [d if isinstance(d, Quaternion) else algebra.element(d) for d in diag]
        n = len(ents)
        rows = [[ents[i] if i == j else algebra.element(0) for j in range(n)]
                for i in range(n)]
        return HermitianSpace(algebra, form_type, n, QuatMatrix.from_rows(algebra, rows))


def discriminant(space: HermitianSpace) -> SquareClass:
    """Square class of (-1)^n N(gram); 1 by convention when n = 0."""
    if space.form_type == LINEAR:
        raise UnsupportedOperationError("discriminant of the linear case")
    if space.n == 0:
        return SquareClass(space.field, "1")
    val = Fraction(-1) ** space.n * matrix_reduced_norm(space.gram)
    return square_class(space.field, val)


def kottwitz_sign(space: HermitianSpace) -> int:
    """+1 for split algebras; otherwise the sign attached to (type, n)."""
    if space.algebra.is_split:
        return 1
    n = space.n
    if space.form_type == LINEAR:
        return (-1) ** n
    if space.form_type == SKEW:
        return (-1) ** (n * (n - 1) // 2)
    return (-1) ** (n * (n + 1) // 2)


@dataclass(frozen=True)
class BilinearSpace:
    """Output of the Morita transfer: a bilinear space over F."""

    field: LocalField
    form_type: str  # zero | symplectic | symmetric
    dim: int
    gram: tuple[tuple[Fraction, ...], ...] | None

    def discriminant(self) -> SquareClass:
        if self.form_type != "symmetric":
            raise UnsupportedOperationError("discriminant of a non-symmetric transfer")
        det = _det_rational([list(r) for r in self.gram])
        half = self.dim // 2
        return square_class(self.field, Fraction(-1) ** half * det)


class MoritaError(ValueError):
    """The algebra is not split, or no rational splitting was found."""


def _isotropic_vector(alg: QuaternionAlgebra) -> Quaternion:
    """A nonzero quaternion of reduced norm zero, by bounded height search."""
    if not alg.is_split:
        raise MoritaError("algebra is not split over its base field")
    for height in range(1, 40):
        span = [Fraction(v) for v in range(-height, height + 1)]
        for x0, x1, x2, x3 in itertools.product(span, repeat=4):
            q = alg.element(x0, x1, x2, x3)
            if not q.is_zero and q.reduced_norm() == 0 and max(
                    abs(c) for c in q.coords()) == height:
                return q
    raise MoritaError(
        "no rational norm-zero element found: the algebra splits over the local "
        "field but not over Q, so an exact rational splitting does not exist")


def _split_iso(alg: QuaternionAlgebra):
    """An explicit algebra isomorphism D -> M_2(F): returns (phi, e, m) where
    phi maps quaternions to 2x2 rational matrices, e = phi^{-1}(E11) and
    m = phi^{-1}(E21)."""
    x = _isotropic_vector(alg)
    basis_src = [alg.one() * x, alg.element(0, 1) * x,
                 alg.element(0, 0, 1) * x, alg.element(0, 0, 0, 1) * x]
    # pick two F-independent vectors spanning the left ideal Dx
    ideal_basis = []
    rows: list[list[Fraction]] = []
    for v in basis_src:
        cand = rows + [list(v.coords())]
        if _rank(cand) > len(rows):
            rows = cand
            ideal_basis.append(v)
        if len(ideal_basis) == 2:
            break
    if len(ideal_basis) != 2:
        raise MoritaError("norm-zero element did not generate a 2-dimensional ideal")
    w1, w2 = ideal_basis

    def phi(qt: Quaternion):
        cols = []
        for w in (w1, w2):
            prod = qt * w
            cols.append(_solve_2(w1, w2, prod))
        return [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]

    units = [alg.one()] + list(alg.gens())
    mat = [[None] * 4 for _ in range(4)]  # phi as a 4x4 rational matrix
    for col, u in enumerate(units):
        img = phi(u)
        flat = [img[0][0], img[0][1], img[1][0], img[1][1]]
        for rix in range(4):
            mat[rix][col] = flat[rix]
    e = _solve_4(mat, [Fraction(1), 0, 0, 0], units, alg)
    m = _solve_4(mat, [0, 0, Fraction(1), 0], units, alg)
    return phi, e, m


def _rank(rows) -> int:
    m = [row[:] for row in rows]
    rank = 0
    ncols = len(m[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] * inv
                for c in range(ncols):
                    m[r][c] -= f * m[rank][c]
        rank += 1
    return rank


def _solve_2(w1: Quaternion, w2: Quaternion, target: Quaternion):
    """Coordinates of target in the plane spanned by w1, w2 (exact)."""
    cols = [list(w1.coords()), list(w2.coords())]
    t = list(target.coords())
    # solve the overdetermined 4x2 system; consistent by construction
    for i, j in itertools.combinations(range(4), 2):
        det = cols[0][i] * cols[1][j] - cols[0][j] * cols[1][i]
        if det != 0:
            c1 = (t[i] * cols[1][j] - t[j] * cols[1][i]) / det
            c2 = (cols[0][i] * t[j] - cols[0][j] * t[i]) / det
            return (c1, c2)
    raise MoritaError("degenerate ideal basis")


def _solve_4(mat, rhs, units, alg: QuaternionAlgebra) -> Quaternion:
    m = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    n = 4
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    coords = [m[r][n] for r in range(n)]
    out = alg.element(0)
    for c, u in zip(coords, units):
        out = out + u * c
    return out


def morita_natural(space: HermitianSpace) -> BilinearSpace:
    """Transfer along D = M_2(F): the 2n-dimensional F-space Ve with the
    induced bilinear form (zero / symplectic / symmetric)."""
    alg = space.algebra
    if space.form_type == LINEAR:
        _split_iso(alg)  # raises when not rationally split
        return BilinearSpace(space.field, "zero", 2 * space.n, None)
    phi, e, m = _split_iso(alg)
    estar = e.conj()
    mstar = m.conj()
    n = space.n
    gens = [(idx, g) for idx in range(n) for g in (e, m)]
    gram = []
    for i, gi in gens:
        row = []
        gi_star = estar if gi is e else mstar
        for j, gj in gens:
            hij = space.gram.entries[i][j]
            val = phi(gi_star * hij * gj)
            # h(x e, y e) sits in (1-e) D e, i.e. the (2,1) matrix slot
            row.append(val[1][0])
        gram.append(tuple(row))
    form_type = "symplectic" if space.eps == 1 else "symmetric"
    gram_t = tuple(gram)
    _check_transfer_symmetry(gram_t, form_type)
    return BilinearSpace(space.field, form_type, 2 * n, gram_t)


def _check_transfer_symmetry(gram, form_type):
    dim = len(gram)
    for i in range(dim):
        for j in range(dim):
            want = -gram[j][i] if form_type == "symplectic" else gram[j][i]
            if gram[i][j] != want:
                raise ArithmeticError("Morita transfer produced a form of the wrong type")
