"""Finite-dimensional Lie algebras given by sparse structure constants."""

from __future__ import annotations

from .linalg import Matrix, vec_add
from .scalar import ZERO


class LieAlgebra:
    """Basis e_0..e_{m-1} with [e_i, e_j] = sum_k c[(i, j)][k] e_k.

    ``brackets`` holds every ordered pair with a nonzero bracket.  ``grading``
    optionally tags each basis index (for example 0 / 1 for even / odd), and
    ``rep`` optionally carries a faithful matrix for each basis element.
    """

    def __init__(self, dim, brackets, grading=None, names=None, rep=None):
        self.dim = dim
        self.brackets = {}
        for (i, j), v in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexError((i, j))
            v = {k: x for k, x in v.items() if x}
            if v:
                self.brackets[(i, j)] = v
        self.grading = tuple(grading) if grading is not None else None
        self.names = tuple(names) if names is not None else None
        self.rep = list(rep) if rep is not None else None
        self._ad = None

    def bracket_basis(self, i, j) -> dict:
        return self.brackets.get((i, j), {})

    def bracket(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                c = self.brackets.get((i, j))
                if c:
                    vec_add(out, c, a * b)
        return out

    def ad_columns(self) -> list:
        """ad_columns()[i][j] = [e_i, e_j] as a sparse vector (column j of ad e_i)."""
        if self._ad is None:
            ad = [dict() for _ in range(self.dim)]
            for (i, j), v in self.brackets.items():
                ad[i][j] = v
            self._ad = ad
        return self._ad

    def ad_matrix(self, i) -> Matrix:
        cols = self.ad_columns()[i]
        return Matrix(self.dim, self.dim, {(k, j): v for j, c in cols.items() for k, v in c.items()})

    def with_constant(self, i, j, k, value) -> "LieAlgebra":
        """Copy with one structure constant overwritten (used for mutation tests)."""
        br = {key: dict(v) for key, v in self.brackets.items()}
        br.setdefault((i, j), {})[k] = value
        return LieAlgebra(self.dim, br, self.grading, self.names, self.rep)

    def is_antisymmetric(self):
        for (i, j), v in self.brackets.items():
            w = self.brackets.get((j, i), {})
            if i == j or any(w.get(k, ZERO) != -x for k, x in v.items()) or len(w) != len(v):
                return False, (i, j)
        return True, None
