"""Exact linear algebra over the rationals.

Sparse vectors are plain ``dict[int, mpq]`` with no zero values; most
routines here accept and return that shape because it is what the model
constructors produce.  :class:`Matrix` wraps either a dense row list
(fewer than 64 columns) or a coordinate dict (64 columns or more).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from gmpy2 import mpq

from .scalar import ONE, ZERO

SPARSE_THRESHOLD = 64


# -- sparse vector helpers ---------------------------------------------------

def vec_add(acc: dict, other: dict, factor=ONE) -> dict:
    """acc += factor * other, in place; returns acc."""
    for k, v in other.items():
        nv = acc.get(k, ZERO) + factor * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


def vec_scale(v: dict, factor) -> dict:
    if not factor:
        return {}
    return {k: factor * x for k, x in v.items()}


def vec_from_list(values) -> dict:
    return {i: mpq(x) for i, x in enumerate(values) if x}


def vec_to_list(v: dict, n: int) -> list:
    out = [ZERO] * n
    for k, x in v.items():
        out[k] = x
    return out


# -- Matrix --------------------------------------------------------------------

class Matrix:
    """Immutable rational matrix; dense below 64 columns, sparse above."""

    __slots__ = ("rows", "cols", "_dense", "_sparse")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative shape")
        self.rows, self.cols = rows, cols
        coo = {}
        if isinstance(entries, dict):
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError((i, j))
                v = mpq(v)
                if v:
                    coo[(i, j)] = v
        elif entries is not None:
            entries = list(entries)
            if len(entries) != rows:
                raise ValueError("row count mismatch")
            for i, row in enumerate(entries):
                row = list(row)
                if len(row) != cols:
                    raise ValueError("column count mismatch")
                for j, v in enumerate(row):
                    v = mpq(v)
                    if v:
                        coo[(i, j)] = v
        if cols >= SPARSE_THRESHOLD:
            self._sparse, self._dense = coo, None
        else:
            dense = [[ZERO] * cols for _ in range(rows)]
            for (i, j), v in coo.items():
                dense[i][j] = v
            self._dense, self._sparse = dense, None

    # construction
    @classmethod
    def zeros(cls, rows, cols=None):
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    @classmethod
    def from_row_dicts(cls, row_dicts, cols):
        return cls(len(row_dicts), cols,
                   {(i, j): v for i, r in enumerate(row_dicts) for j, v in r.items()})

    @classmethod
    def from_columns(cls, columns, rows):
        """Columns given as sparse dicts."""
        return cls(rows, len(columns),
                   {(i, j): v for j, c in enumerate(columns) for i, v in c.items()})

    @classmethod
    def diagonal(cls, values):
        values = list(values)
        return cls(len(values), len(values), {(i, i): v for i, v in enumerate(values)})

    # access
    @property
    def is_sparse(self) -> bool:
        return self._sparse is not None

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        if self._sparse is not None:
            return self._sparse.get((i, j), ZERO)
        return self._dense[i][j]

    def entries(self) -> Iterator[tuple]:
        """Nonzero entries as (i, j, value), row-major."""
        if self._sparse is not None:
            for (i, j) in sorted(self._sparse):
                yield i, j, self._sparse[(i, j)]
        else:
            for i, row in enumerate(self._dense):
                for j, v in enumerate(row):
                    if v:
                        yield i, j, v

    def to_dict(self) -> dict:
        return {(i, j): v for i, j, v in self.entries()}

    def to_dense(self) -> list:
        out = [[ZERO] * self.cols for _ in range(self.rows)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def to_sparse(self) -> dict:
        return self.to_dict()

    def row_dicts(self) -> list:
        out = [dict() for _ in range(self.rows)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def column_dicts(self) -> list:
        out = [dict() for _ in range(self.cols)]
        for i, j, v in self.entries():
            out[j][i] = v
        return out

    def nnz(self) -> int:
        return sum(1 for _ in self.entries())

    # arithmetic
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash((self.shape, frozenset(self.to_dict().items())))

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        acc = self.to_dict()
        vec_add(acc, other.to_dict())
        return Matrix(self.rows, self.cols, acc)

    def __neg__(self):
        return Matrix(self.rows, self.cols, {k: -v for k, v in self.to_dict().items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = mpq(c)
        return Matrix(self.rows, self.cols, {k: c * v for k, v in self.to_dict().items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("inner dimension mismatch")
            right = other.row_dicts()
            out = {}
            for i, k, a in self.entries():
                for j, b in right[k].items():
                    key = (i, j)
                    nv = out.get(key, ZERO) + a * b
                    if nv:
                        out[key] = nv
                    else:
                        out.pop(key, None)
            return Matrix(self.rows, other.cols, out)
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        res = [ZERO] * self.rows
        for i, j, a in self.entries():
            res[i] += a * vec[j]
        return res

    def apply(self, v: dict) -> dict:
        """Apply to a sparse vector."""
        cols = self.column_dicts()
        out = {}
        for j, x in v.items():
            vec_add(out, cols[j], x)
        return out

    def transpose(self):
        return Matrix(self.cols, self.rows, {(j, i): v for i, j, v in self.entries()})

    @property
    def T(self):
        return self.transpose()

    def trace(self):
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), ZERO)

    def is_zero(self) -> bool:
        return not any(True for _ in self.entries())

    def __repr__(self):
        kind = "sparse" if self.is_sparse else "dense"
        return f"Matrix({self.rows}x{self.cols}, {kind}, nnz={self.nnz()})"


# -- row reduction -------------------------------------------------------------

class Echelon:
    """Incrementally maintained reduced row echelon form of sparse rows.

    Each stored row has a pivot coefficient 1 and vanishes at every other
    pivot column, so the coordinates of a vector in the row space are its
    values at the pivot columns.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}
        self._users: dict[int, set] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, v: dict) -> dict:
        r = dict(v)
        for c in [k for k in r if k in self.pivots]:
            f = r.get(c)
            if f:
                vec_add(r, self.pivots[c], -f)
        return r

    def add(self, v: dict) -> bool:
        """Add a row; returns True if the rank grew."""
        r = self.reduce(v)
        if not r:
            return False
        c = min(r)
        inv = ONE / r[c]
        r = {k: x * inv for k, x in r.items()}
        for pc in list(self._users.get(c, ())):
            row = self.pivots[pc]
            f = row.get(c)
            if f:
                self._unlink(pc, row)
                vec_add(row, r, -f)
                self._link(pc, row)
        self.pivots[c] = r
        self._link(c, r)
        return True

    def _link(self, pc, row):
        for k in row:
            if k != pc:
                self._users.setdefault(k, set()).add(pc)

    def _unlink(self, pc, row):
        for k in row:
            s = self._users.get(k)
            if s is not None:
                s.discard(pc)

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def coordinates(self, v: dict) -> dict:
        """Coordinates of v in the stored rows, or raise if v is outside."""
        coords = {c: v[c] for c in self.pivots if c in v}
        if self.reduce(v):
            raise ValueError("vector not in the row space")
        return coords

    def rows(self) -> list:
        return [self.pivots[c] for c in sorted(self.pivots)]


def rref(M: Matrix) -> tuple:
    """Reduced row echelon form: (list of sparse rows, pivot columns)."""
    e = Echelon()
    for r in M.row_dicts():
        if r:
            e.add(r)
    cols = sorted(e.pivots)
    return [e.pivots[c] for c in cols], cols


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def kernel(M: Matrix) -> list:
    """Basis of the right null space, as dense lists of rationals."""
    rows, pivots = rref(M)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * M.cols
        v[f] = ONE
        for p, row in zip(pivots, rows):
            x = row.get(f)
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def sparse_kernel(row_dicts: Iterable[dict], ncols: int) -> list:
    """Null space of a system given by sparse rows, as sparse vectors."""
    e = Echelon()
    for r in row_dicts:
        if r:
            e.add(r)
    free = [c for c in range(ncols) if c not in e.pivots]
    basis = []
    for f in free:
        v = {f: ONE}
        for p, row in e.pivots.items():
            x = row.get(f)
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def inverse(M: Matrix) -> Matrix:
    if M.rows != M.cols:
        raise ValueError("not square")
    n = M.rows
    aug = [dict(r) for r in M.row_dicts()]
    for i in range(n):
        aug[i][n + i] = ONE
    e = Echelon()
    for r in aug:
        e.add(r)
    if sorted(e.pivots)[:n] != list(range(n)) or any(c >= n for c in e.pivots):
        raise ZeroDivisionError("singular matrix")
    return Matrix(n, n, {(i, j - n): v for i in range(n)
                         for j, v in e.pivots[i].items() if j >= n})


def solve(M: Matrix, b) -> list:
    """One solution of M x = b, or raise ValueError if inconsistent."""
    n = M.cols
    e = Echelon()
    for r, bi in zip(M.row_dicts(), b):
        row = dict(r)
        if bi:
            row[n] = mpq(bi)
        if row:
            e.add(row)
    if n in e.pivots:
        raise ValueError("inconsistent system")
    x = [ZERO] * n
    for p, row in e.pivots.items():
        x[p] = row.get(n, ZERO)
    return x


# -- bilinear forms ----------------------------------------------------------

SYMMETRIC = "symmetric"
ALTERNATING = "alternating"


@dataclass(frozen=True)
class BilinearForm:
    dim: int
    gram: Matrix
    symmetry_tag: str

    def __post_init__(self):
        if self.gram.shape != (self.dim, self.dim):
            raise ValueError("gram has the wrong shape")
        if self.symmetry_tag not in (SYMMETRIC, ALTERNATING):
            raise ValueError(f"unknown symmetry tag {self.symmetry_tag!r}")
        g = self.gram.to_dict()
        sign = ONE if self.symmetry_tag == SYMMETRIC else -ONE
        for (i, j), v in g.items():
            if g.get((j, i), ZERO) != sign * v:
                raise ValueError(f"gram is not {self.symmetry_tag} at {(i, j)}")

    def __call__(self, x, y):
        """Evaluate on dense lists or sparse dicts."""
        if isinstance(x, dict):
            return sum((x[i] * v * y[j] for (i, j), v in self.gram.to_dict().items()
                        if i in x and j in y), ZERO)
        return sum((x[i] * v * y[j] for i, j, v in self.gram.entries()), ZERO)

    def is_nondegenerate(self) -> bool:
        return rank(self.gram) == self.dim


def signature(B) -> int:
    """Signature of a symmetric form by exact congruence diagonalization."""
    gram = B.gram if isinstance(B, BilinearForm) else B
    if isinstance(B, BilinearForm) and B.symmetry_tag != SYMMETRIC:
        raise ValueError("signature needs a symmetric form")
    return _signature_counts(gram.to_dict(), gram.rows)[0]


def inertia(B) -> tuple:
    """(positive, negative, zero) counts."""
    gram = B.gram if isinstance(B, BilinearForm) else B
    _, pos, neg = _signature_counts(gram.to_dict(), gram.rows)
    return pos, neg, gram.rows - pos - neg


def _signature_counts(entries: dict, n: int) -> tuple:
    A: dict[int, dict] = {}
    for (i, j), v in entries.items():
        if v:
            A.setdefault(i, {})[j] = mpq(v)
    for i, row in A.items():
        for j, v in row.items():
            if A.get(j, {}).get(i) != v:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0

    def eliminate(p, q, pivot_inv):
        # subtract the Schur complement contribution of the pivot block
        rows = {k: A[k] for k in (p, q) if k is not None}
        for k in rows:
            for other in list(A[k]):
                if other not in rows:
                    A[other].pop(k, None)
        for k in rows:
            A.pop(k)
        touched = set()
        for k, rk in rows.items():
            touched.update(x for x in rk if x not in rows)
        for i in touched:
            for j in touched:
                s = ZERO
                for a, ra in rows.items():
                    ai = ra.get(i)
                    if not ai:
                        continue
                    for b, rb in rows.items():
                        bj = rb.get(j)
                        if bj:
                            w = pivot_inv.get((a, b))
                            if w:
                                s += ai * w * bj
                if s:
                    row = A.setdefault(i, {})
                    nv = row.get(j, ZERO) - s
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)

    while True:
        for k in [k for k, r in A.items() if not r]:
            del A[k]
        if not A:
            break
        best = None
        for k, r in A.items():
            if r.get(k) and (best is None or len(r) < len(A[best])):
                best = k
        if best is not None:
            d = A[best][best]
            if d > 0:
                pos += 1
            else:
                neg += 1
            eliminate(best, None, {(best, best): ONE / d})
        else:
            p = min(A, key=lambda k: len(A[k]))
            q = min(A[p])
            b = A[p][q]
            pos += 1
            neg += 1
            eliminate(p, q, {(p, q): ONE / b, (q, p): ONE / b})
    return pos - neg, pos, neg


def invariant_bilinear_space(rep, symmetry_tag: str) -> tuple:
    """Forms B with d^T B + B d = 0 for every d in ``rep``.

    Returns (dimension, list of gram Matrices)."""
    rep = list(rep)
    if not rep:
        raise ValueError("empty representation")
    n = rep[0].rows
    for d in rep:
        if d.shape != (n, n):
            raise ValueError("rep matrices must be square of equal size")
    if symmetry_tag == ALTERNATING:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif symmetry_tag == SYMMETRIC:
        pairs = [(i, j) for i in range(n) for j in range(i, n)]
    else:
        raise ValueError(f"unknown symmetry tag {symmetry_tag!r}")
    index = {p: k for k, p in enumerate(pairs)}
    alt = symmetry_tag == ALTERNATING

    def var(i, j):
        # unknown index and sign for B[i][j]
        if i == j:
            return (None, ZERO) if alt else (index[(i, i)], ONE)
        if i < j:
            return index[(i, j)], ONE
        return index[(j, i)], (-ONE if alt else ONE)

    e = Echelon()
    for d in rep:
        cols = d.column_dicts()
        rows = d.row_dicts()
        for k, l in pairs:
            eq: dict = {}
            # (d^T B)_{kl} = sum_m d_{mk} B_{ml}
            for m, x in cols[k].items():
                u, s = var(m, l)
                if u is not None and s:
                    vec_add(eq, {u: s * x})
            # (B d)_{kl} = sum_m B_{km} d_{ml}
            for m, x in cols[l].items():
                u, s = var(k, m)
                if u is not None and s:
                    vec_add(eq, {u: s * x})
            if eq:
                e.add(eq)
        del rows
    basis = []
    for f in range(len(pairs)):
        if f in e.pivots:
            continue
        sol = {f: ONE}
        for p, row in e.pivots.items():
            x = row.get(f)
            if x:
                sol[p] = -x
        g = {}
        for u, val in sol.items():
            i, j = pairs[u]
            g[(i, j)] = val
            if i != j:
                g[(j, i)] = -val if alt else val
        basis.append(Matrix(n, n, g))
    return len(basis), basis
