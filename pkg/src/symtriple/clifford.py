"""Clifford algebra of W + W* (dim W = 6) acting on the exterior algebra of W.

Vectors of W + W* are indexed 0..11: index k < 6 is e_{k+1}, index 6 + k is
the dual vector e^{k+1}.  A vector is a dict index -> coefficient or a
length-12 list.  e_i acts by left multiplication, e^i by contraction, and
the quadratic form is q(u + f) = f(u) with polar form q(x, y) = xy + yx.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .exterior import ExtElement, contract, degree, left_mult, masks_of_degree
from .linalg import Echelon, Matrix, vec_add
from .scalar import ONE, ZERO

RANK = 6
NATURAL_DIM = 2 * RANK
HALF = mpq(1, 2)


def exterior_basis(parity=None) -> list:
    """Masks of the exterior algebra ordered by degree, then lexicographically."""
    degrees = range(RANK + 1)
    if parity is not None:
        degrees = [r for r in degrees if r % 2 == parity]
    return [m for r in degrees for m in masks_of_degree(RANK, r)]


FULL_BASIS = exterior_basis()
EVEN_BASIS = exterior_basis(0)
ODD_BASIS = exterior_basis(1)
_POSITION = {m: k for k, m in enumerate(FULL_BASIS)}


def _as_vec(v) -> dict:
    if isinstance(v, dict):
        return {k: mpq(x) for k, x in v.items() if x}
    return {k: mpq(x) for k, x in enumerate(v) if x}


def polar_form(x, y):
    """q(x, y) = q(x + y) - q(x) - q(y)."""
    x, y = _as_vec(x), _as_vec(y)
    s = ZERO
    for k in range(RANK):
        s += x.get(RANK + k, ZERO) * y.get(k, ZERO) + y.get(RANK + k, ZERO) * x.get(k, ZERO)
    return s


def quadratic_form(x):
    x = _as_vec(x)
    return sum((x.get(RANK + k, ZERO) * x.get(k, ZERO) for k in range(RANK)), ZERO)


@lru_cache(maxsize=None)
def _generator_columns(k: int) -> tuple:
    """Columns of the basic operator for index k on the full exterior algebra."""
    cols = []
    for m in FULL_BASIS:
        x = ExtElement(RANK, {m: ONE})
        y = left_mult(k + 1, x) if k < RANK else contract(k - RANK + 1, x)
        cols.append({_POSITION[mm]: c for mm, c in y.terms.items()})
    return tuple(cols)


def clifford_generator(v) -> Matrix:
    """64x64 matrix of the Clifford image of a vector of W + W*."""
    v = _as_vec(v)
    n = len(FULL_BASIS)
    out: dict = {}
    for k, c in v.items():
        for j, col in enumerate(_generator_columns(k)):
            for i, x in col.items():
                key = (i, j)
                nv = out.get(key, ZERO) + c * x
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
    return Matrix(n, n, out)


def natural_sigma(x, y) -> Matrix:
    """12x12 matrix of z -> q(x, z) y - q(y, z) x."""
    x, y = _as_vec(x), _as_vec(y)
    cols = []
    for k in range(NATURAL_DIM):
        z = {k: ONE}
        col = {}
        vec_add(col, y, polar_form(x, z))
        vec_add(col, x, -polar_form(y, z))
        cols.append(col)
    return Matrix.from_columns(cols, NATURAL_DIM)


def so_embedding(x, y) -> Matrix:
    """Operator -1/2 (xy - yx) on the exterior algebra."""
    a, b = clifford_generator(x), clifford_generator(y)
    return ((a @ b) - (b @ a)).scale(-HALF)


@lru_cache(maxsize=None)
def sigma_basis() -> tuple:
    """Pairs (a, b), a < b, whose sigma maps form a basis of so(W + W*, q)."""
    return tuple((a, b) for a in range(NATURAL_DIM) for b in range(a + 1, NATURAL_DIM))


@lru_cache(maxsize=None)
def _sigma_echelon():
    e = Echelon()
    pairs = sigma_basis()
    for k, (a, b) in enumerate(pairs):
        flat = {i * NATURAL_DIM + j: v for (i, j), v in natural_sigma({a: 1}, {b: 1}).to_dict().items()}
        # track the combination in extra coordinates beyond the matrix entries
        flat[NATURAL_DIM ** 2 + k] = ONE
        e.add(flat)
    return e


def sigma_coordinates(sigma: Matrix) -> dict:
    """Coordinates of an element of so(W + W*, q) in the sigma basis."""
    if sigma.shape != (NATURAL_DIM, NATURAL_DIM):
        raise ValueError("expected a 12x12 matrix")
    flat = {i * NATURAL_DIM + j: v for (i, j), v in sigma.to_dict().items()}
    r = _sigma_echelon().reduce(flat)
    if any(k < NATURAL_DIM ** 2 for k in r):
        raise ValueError("matrix is not in so(W + W*, q)")
    # r = flat - sum c_k (sigma_k, e_k) restricted to matrix part is zero, so
    # the tail of r holds -c_k
    return {k - NATURAL_DIM ** 2: -v for k, v in r.items()}


def spin_operator(sigma: Matrix) -> Matrix:
    """64x64 operator of an so(W + W*, q) element through the Clifford algebra."""
    total = Matrix.zeros(len(FULL_BASIS))
    for k, c in sigma_coordinates(sigma).items():
        a, b = sigma_basis()[k]
        total = total + so_embedding({a: 1}, {b: 1}).scale(c)
    return total


def restrict(op: Matrix, basis: list) -> Matrix:
    """Restriction of a 64x64 operator to the span of the given masks."""
    pos = {_POSITION[m]: k for k, m in enumerate(basis)}
    out = {}
    for i, j, v in op.entries():
        if j in pos:
            if i not in pos:
                raise ValueError("operator does not preserve the subspace")
            out[(pos[i], pos[j])] = v
    return Matrix(len(basis), len(basis), out)


@dataclass(frozen=True)
class SpinVector:
    """Element of the even or odd half of the exterior algebra of W."""

    element: ExtElement
    parity: int

    def __post_init__(self):
        if self.element.N != RANK or self.element.dual:
            raise ValueError("spin vectors live in the exterior algebra of a 6-dim space")
        if any(degree(m) % 2 != self.parity for m in self.element.terms):
            raise ValueError("element does not have the declared parity")

    @classmethod
    def even(cls, element: ExtElement):
        return cls(element, 0)


def apply_operator(op: Matrix, x: ExtElement) -> ExtElement:
    vec = {_POSITION[m]: c for m, c in x.terms.items()}
    out = op.apply(vec)
    return ExtElement(RANK, {FULL_BASIS[i]: c for i, c in out.items()})


def half_spin_action(sigma: Matrix, s: SpinVector) -> SpinVector:
    if s.parity != 0:
        raise ValueError("half_spin_action expects an even spin vector")
    return SpinVector(apply_operator(spin_operator(sigma), s.element), 0)
