"""Symplectic triple systems: storage, axiom checks, derivations, gradings.

A triple system on Q^n stores its alternating form as a Gram matrix and its
product as a dict ``trip[(i, j, k)] = {l: value}`` meaning
[e_i, e_j, e_k] = sum_l value e_l, with every nonzero basis triple present.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from gmpy2 import mpq

from .lie import LieAlgebra
from .linalg import ALTERNATING, BilinearForm, Echelon, Matrix, inverse, vec_add
from .rng import Lcg
from .scalar import ONE, ZERO

FAMILIES = (
    "special", "orthogonal", "symplectic", "unitarian", "quaternionic",
    "g2", "f4", "e6split", "e6su33", "e6su51",
    "e7split", "e7so102", "e7sostar", "e8split", "e8nonsplit",
)

_PARAMS = {
    "special": ("n",), "symplectic": ("n",), "quaternionic": ("n",),
    "orthogonal": ("p", "q"), "unitarian": ("p", "q"),
}

EXHAUSTIVE_CUTOFF = 14
DEFAULT_SAMPLES = 100_000


@dataclass(frozen=True)
class ModelLabel:
    family: str
    params: tuple = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        params = tuple(sorted(dict(self.params).items()))
        object.__setattr__(self, "params", params)
        names = _PARAMS.get(self.family, ())
        if tuple(k for k, _ in params) != tuple(sorted(names)):
            raise ValueError(f"{self.family} takes parameters {names}, got {dict(params)}")
        p = dict(params)
        if any(not isinstance(v, int) or v < 0 for v in p.values()):
            raise ValueError("parameters must be non-negative integers")
        if self.family in ("special", "symplectic", "quaternionic") and p["n"] < 1:
            raise ValueError("n must be at least 1")
        if self.family == "orthogonal" and p["p"] + p["q"] < 3:
            raise ValueError("orthogonal type needs p + q >= 3")
        if self.family == "unitarian" and p["p"] + p["q"] < 1:
            raise ValueError("unitarian type needs p + q >= 1")

    @classmethod
    def of(cls, family, **params):
        return cls(family, tuple(params.items()))

    def param(self, name):
        return dict(self.params)[name]

    def __str__(self):
        if not self.params:
            return self.family
        return self.family + "(" + ",".join(f"{k}={v}" for k, v in self.params) + ")"


@dataclass(frozen=True)
class Z4Grading:
    """Basis indices of degree 1 and degree 3 (mod 4)."""

    deg1: tuple
    deg3: tuple

    def __post_init__(self):
        object.__setattr__(self, "deg1", tuple(sorted(self.deg1)))
        object.__setattr__(self, "deg3", tuple(sorted(self.deg3)))
        if set(self.deg1) & set(self.deg3):
            raise ValueError("grading parts overlap")

    def degree_map(self, n) -> list:
        if sorted(self.deg1 + self.deg3) != list(range(n)):
            raise ValueError("grading does not partition the basis")
        deg = [0] * n
        for i in self.deg1:
            deg[i] = 1
        for i in self.deg3:
            deg[i] = 3
        return deg

    def sign_map(self, n) -> Matrix:
        deg = self.degree_map(n)
        return Matrix.diagonal([ONE if d == 1 else -ONE for d in deg])


def _clean_trip(trip) -> dict:
    out = {}
    for key, vec in trip.items():
        v = {l: mpq(x) for l, x in vec.items() if x}
        if v:
            out[tuple(key)] = v
    return out


class TripleSystem:
    """Immutable symplectic triple system candidate over Q."""

    def __init__(self, n, omega, trip, label=None):
        if isinstance(omega, Matrix):
            omega = BilinearForm(n, omega, ALTERNATING)
        if omega.dim != n or omega.symmetry_tag != ALTERNATING:
            raise ValueError("omega must be an alternating form of dimension n")
        self.n = n
        self.omega = omega
        self.trip = _clean_trip(trip)
        for (i, j, k), v in self.trip.items():
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n) or any(not 0 <= l < n for l in v):
                raise IndexError(f"triple index out of range at {(i, j, k)}")
        self.label = label
        self._omega_rows = None
        self._dcols = None

    # structure access
    @property
    def omega_rows(self) -> list:
        if self._omega_rows is None:
            self._omega_rows = self.omega.gram.row_dicts()
        return self._omega_rows

    def form(self, x: dict, y: dict):
        rows = self.omega_rows
        s = ZERO
        for i, a in x.items():
            r = rows[i]
            for j, b in y.items():
                w = r.get(j)
                if w:
                    s += a * w * b
        return s

    def dcols(self) -> dict:
        """{(i, j): {k: [e_i, e_j, e_k]}} for nonzero d_{e_i, e_j}."""
        if self._dcols is None:
            d: dict = {}
            for (i, j, k), v in self.trip.items():
                d.setdefault((i, j), {})[k] = v
            self._dcols = d
        return self._dcols

    def product(self, x: dict, y: dict, z: dict) -> dict:
        out: dict = {}
        dc = self.dcols()
        for i, a in x.items():
            for j, b in y.items():
                cols = dc.get((i, j))
                if not cols:
                    continue
                ab = a * b
                for k, c in z.items():
                    v = cols.get(k)
                    if v:
                        vec_add(out, v, ab * c)
        return out

    def d_columns(self, x: dict, y: dict) -> dict:
        """Columns of d_{x,y} as {k: vector}."""
        out: dict = {}
        dc = self.dcols()
        for i, a in x.items():
            for j, b in y.items():
                cols = dc.get((i, j))
                if not cols:
                    continue
                ab = a * b
                for k, v in cols.items():
                    col = out.setdefault(k, {})
                    vec_add(col, v, ab)
                    if not col:
                        del out[k]
        return out

    def __eq__(self, other):
        if not isinstance(other, TripleSystem):
            return NotImplemented
        return (self.n == other.n and self.omega.gram == other.omega.gram
                and self.trip == other.trip)

    def __hash__(self):
        return hash((self.n, len(self.trip)))

    def __repr__(self):
        return f"TripleSystem(n={self.n}, label={self.label}, nnz={sum(len(v) for v in self.trip.values())})"


def as_vector(x, n=None) -> dict:
    if isinstance(x, dict):
        return {k: mpq(v) for k, v in x.items() if v}
    return {k: mpq(v) for k, v in enumerate(x) if v}


def d_map(T: TripleSystem, x, y) -> Matrix:
    cols = T.d_columns(as_vector(x), as_vector(y))
    return Matrix(T.n, T.n, {(l, k): v for k, col in cols.items() for l, v in col.items()})


def basis_vector(i) -> dict:
    return {i: ONE}


# -- axioms ----------------------------------------------------------------------

@dataclass
class AxiomReport:
    passed: bool
    mode: str
    seed: int | None
    samples: int
    checks: dict = field(default_factory=dict)
    counterexample: tuple | None = None

    def summary(self) -> str:
        parts = [f"{name}: {'ok' if ok else 'FAIL'} ({count} checks)" for name, (ok, count) in self.checks.items()]
        head = "PASS" if self.passed else f"FAIL at {self.counterexample}"
        return head + "; " + "; ".join(parts)


def _form_rhs(T, x, y, z):
    """(x|z)y - (x|y)z + 2(y|z)x for sparse vectors."""
    out: dict = {}
    vec_add(out, y, T.form(x, z))
    vec_add(out, z, -T.form(x, y))
    vec_add(out, x, 2 * T.form(y, z))
    return out


def _vec_sub(a, b):
    out = dict(a)
    vec_add(out, b, -ONE)
    return out


def _check_symmetry(T):
    n, count = T.n, 0
    for (i, j, k), v in T.trip.items():
        count += 1
        if T.trip.get((j, i, k)) != v:
            return False, count, ("symmetry", (i, j, k))
    return True, count, None


def _check_form_identity(T):
    n, count = T.n, 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                count += 1
                lhs = _vec_sub(T.trip.get((i, j, k), {}), T.trip.get((i, k, j), {}))
                if lhs != _form_rhs(T, {i: ONE}, {j: ONE}, {k: ONE}):
                    return False, count, ("form_identity", (i, j, k))
    return True, count, None


def _check_invariance(T):
    # ([x,y,u]|v) + (u|[x,y,v]) = 0  <=>  D^T W + W D = 0 for every basis d_{x,y}
    n, count = T.n, 0
    rows = T.omega_rows
    for (i, j), cols in T.dcols().items():
        count += 1
        for u, du in cols.items():
            for v in range(n):
                s = ZERO
                for l, a in du.items():
                    w = rows[l].get(v)
                    if w:
                        s += a * w
                dv = cols.get(v, {})
                ru = rows[u]
                for l, a in dv.items():
                    w = ru.get(l)
                    if w:
                        s += w * a
                if s:
                    return False, count, ("invariance", (i, j, u, v))
    return True, count, None


def _derivation_residual(T, x, y, u, v, w) -> dict:
    inner = T.product(u, v, w)
    out = T.product(x, y, inner)
    vec_add(out, T.product(T.product(x, y, u), v, w), -ONE)
    vec_add(out, T.product(u, T.product(x, y, v), w), -ONE)
    vec_add(out, T.product(u, v, T.product(x, y, w)), -ONE)
    return out


def _compose(a: dict, b: dict) -> dict:
    """Columns of A @ B where both are given as {col: vector}."""
    out = {}
    for k, col in b.items():
        acc: dict = {}
        for l, x in col.items():
            c = a.get(l)
            if c:
                vec_add(acc, c, x)
        if acc:
            out[k] = acc
    return out


def _cols_sub(a: dict, b: dict) -> dict:
    out = {k: dict(v) for k, v in a.items()}
    for k, col in b.items():
        acc = out.setdefault(k, {})
        vec_add(acc, col, -ONE)
        if not acc:
            del out[k]
    return out


def _check_derivation_python(T):
    """Matrix identity [D_xy, D_uv] = D_{[x,y,u],v} + D_{u,[x,y,v]} on basis pairs."""
    n, count = T.n, 0
    dc = T.dcols()
    for x in range(n):
        for y in range(x, n):
            D = dc.get((x, y), {})
            for u in range(n):
                for v in range(u, n):
                    count += 1
                    if not D:
                        continue
                    E = dc.get((u, v), {})
                    lhs = _cols_sub(_compose(D, E), _compose(E, D))
                    rhs = T.d_columns(D.get(u, {}), {v: ONE})
                    second = T.d_columns({u: ONE}, D.get(v, {}))
                    rhs = _cols_sub(rhs, {k: {l: -a for l, a in c.items()} for k, c in second.items()})
                    if lhs != rhs:
                        return False, count, ("derivation", (x, y, u, v))
    return True, count, None


def _check_derivation_integer(T):
    """Same identity with exact int64 sparse products (scaled by a common denominator)."""
    import numpy as np
    from scipy import sparse

    n = T.n
    den = 1
    for v in T.trip.values():
        for x in v.values():
            den = math.lcm(den, int(x.denominator))
    entries = []
    biggest = 0
    for (i, j, k), v in T.trip.items():
        for l, x in v.items():
            val = int(x * den)
            biggest = max(biggest, abs(val))
            entries.append((i, j, k, l, val))
    # every accumulated sum has at most 2 n products of two scaled entries
    if biggest and 2 * n * biggest * biggest >= 2 ** 62:
        return None
    if not entries:
        return True, n * n * n * n, None
    arr = np.array(entries, dtype=np.int64)
    i, j, k, l, val = arr.T
    n2, n3 = n * n, n * n * n
    # first[(a,b)] is the scaled matrix D_ab with entry (l, k)
    by_pair = {}
    order = np.lexsort((k, l, j, i))
    arr = arr[order]
    i, j, k, l, val = arr.T
    bounds = np.flatnonzero(np.diff(i * n + j)) + 1
    starts = np.concatenate(([0], bounds))
    ends = np.concatenate((bounds, [len(arr)]))
    for s, e in zip(starts, ends):
        by_pair[(int(i[s]), int(j[s]))] = sparse.csr_matrix(
            (val[s:e], (l[s:e], k[s:e])), shape=(n, n), dtype=np.int64)
    # tensor[k_, (v, l, m)] = D_{k_ v}[l, m]
    tensor = sparse.csr_matrix((val, (i, j * n2 + l * n + k)), shape=(n, n3), dtype=np.int64)
    # wide[l, (u, v, m)] = D_uv[l, m] and tall[(u, v, l), m] = D_uv[l, m]
    wide = sparse.csr_matrix((val, (l, i * n2 + j * n + k)), shape=(n, n3), dtype=np.int64)
    tall = sparse.csr_matrix((val, (i * n2 + j * n + l, k)), shape=(n3, n), dtype=np.int64)
    count = 0
    for x in range(n):
        for y in range(x, n):
            count += n * (n + 1) // 2
            D = by_pair.get((x, y))
            if D is None:
                continue
            Dd = sparse.csr_matrix(D, dtype=np.int64)
            # lhs1[l, (u, v, m)] = (D D_uv)[l, m]
            lhs1 = (Dd @ wide).tocoo()
            lhs2 = (tall @ Dd).tocoo()
            B = (Dd.T @ tensor).tocoo()
            # flatten to key (u, v, l, m) -> value
            keys = []
            vals = []
            uu, rest = np.divmod(lhs1.col, n2)
            vv, mm = np.divmod(rest, n)
            keys.append(((uu * n + vv) * n + lhs1.row) * n + mm)
            vals.append(lhs1.data * den)
            uv, ll = np.divmod(lhs2.row, n)
            keys.append(uv * n2 + ll * n + lhs2.col)
            vals.append(-lhs2.data * den)
            # B[u, (v, l, m)] feeds D_{D u, v}; its transpose in (u, v) feeds D_{u, D v}
            vv, rest = np.divmod(B.col, n2)
            keys.append(B.row * n3 + B.col)
            vals.append(-B.data)
            keys.append(vv * n3 + B.row * n2 + rest)
            vals.append(-B.data)
            allk = np.concatenate(keys)
            allv = np.concatenate(vals)
            # restrict to u <= v to match the pair enumeration
            uk, rem = np.divmod(allk, n3)
            vk = rem // n2
            mask = uk <= vk
            total = sparse.coo_matrix((allv[mask], (np.zeros(mask.sum(), dtype=np.int64), allk[mask])),
                                      shape=(1, n ** 4)).tocsr()
            total.sum_duplicates()
            total.eliminate_zeros()
            if total.nnz:
                bad = int(total.indices[0])
                u, rem = divmod(bad, n3)
                v = rem // n2
                return False, count, ("derivation", (x, y, u, v))
    return True, count, None


def _random_vector(rng: Lcg, n: int, support: int) -> dict:
    v = {}
    for _ in range(support):
        num = rng.randint(-6, 6)
        if num:
            v[rng.randrange(n)] = mpq(num, rng.randint(1, 4))
    return v or {rng.randrange(n): ONE}


def _check_derivation_sampled(T, seed, count, support=2):
    rng = Lcg(seed)
    n = T.n
    for s in range(count):
        x, y, u, v, w = (_random_vector(rng, n, support) for _ in range(5))
        if _derivation_residual(T, x, y, u, v, w):
            return False, s + 1, ("derivation", ("sample", s, x, y, u, v, w))
    return True, count, None


def check_axioms(T: TripleSystem, mode: str = "auto", seed: int = 1, count: int = DEFAULT_SAMPLES) -> AxiomReport:
    """Verify the four defining identities with exact arithmetic.

    mode ``exhaustive``: the derivation identity on every basis quintuple,
    evaluated as the matrix identity on all basis quadruples.
    mode ``sampled``: ``count`` seeded random rational quintuples.
    mode ``auto``: exhaustive up to dimension 14; above that both the
    quadruple matrix identity and the seeded sample.
    The other three identities are always checked on every basis tuple.
    """
    if mode not in ("auto", "exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    checks = {}
    counter = None

    def record(name, result):
        nonlocal counter
        ok, cnt, ce = result
        checks[name] = (ok, cnt)
        if not ok and counter is None:
            counter = ce
        return ok

    nondeg = T.omega.is_nondegenerate()
    checks["nondegenerate"] = (nondeg, 1)
    if not nondeg:
        counter = ("nondegenerate", None)
    record("symmetry", _check_symmetry(T))
    record("form_identity", _check_form_identity(T))
    record("invariance", _check_invariance(T))
    samples = 0
    if mode == "exhaustive" or (mode == "auto"):
        if T.n <= EXHAUSTIVE_CUTOFF:
            res = _check_derivation_python(T)
        else:
            res = _check_derivation_integer(T) or _check_derivation_python(T)
        record("derivation_basis", res)
    if mode == "sampled" or (mode == "auto" and T.n > EXHAUSTIVE_CUTOFF):
        res = _check_derivation_sampled(T, seed, count)
        samples = res[1]
        record("derivation_sampled", res)
    passed = all(ok for ok, _ in checks.values())
    used_seed = seed if "derivation_sampled" in checks else None
    return AxiomReport(passed, mode, used_seed, samples, checks, counter)


# -- inner derivations ------------------------------------------------------------

def _flat(cols: dict, n: int) -> dict:
    return {l * n + k: v for k, col in cols.items() for l, v in col.items()}


def _unflat(vec: dict, n: int) -> Matrix:
    return Matrix(n, n, {divmod(key, n): v for key, v in vec.items()})


def inder_span(T: TripleSystem) -> LieAlgebra:
    """Basis of span{d_{x,y}} in reduced echelon form, with its bracket."""
    n = T.n
    ech = Echelon()
    for (i, j), cols in sorted(T.dcols().items()):
        if i <= j:
            ech.add(_flat(cols, n))
    pivots = sorted(ech.pivots)
    rows = [ech.pivots[p] for p in pivots]
    # column form of each basis element for composition
    colforms = []
    for r in rows:
        cols: dict = {}
        for key, v in r.items():
            l, k = divmod(key, n)
            cols.setdefault(k, {})[l] = v
        colforms.append(cols)
    brackets = {}
    m = len(rows)
    for a in range(m):
        for b in range(a + 1, m):
            comm = _cols_sub(_compose(colforms[a], colforms[b]), _compose(colforms[b], colforms[a]))
            flat = _flat(comm, n)
            if not flat:
                continue
            coords = {}
            for idx, p in enumerate(pivots):
                x = flat.get(p)
                if x:
                    coords[idx] = x
            check = {}
            for idx, x in coords.items():
                vec_add(check, rows[idx], x)
            if check != flat:
                raise ValueError("inner derivations are not closed under the bracket")
            brackets[(a, b)] = coords
            brackets[(b, a)] = {k: -v for k, v in coords.items()}
    L = LieAlgebra(m, brackets, rep=[_unflat(r, n) for r in rows])
    L.pivots = pivots
    return L


def inder_coordinates(inder: LieAlgebra, cols: dict, n: int) -> dict:
    """Coordinates of an endomorphism (given by columns) in an inder_span basis."""
    flat = _flat(cols, n)
    return {idx: flat[p] for idx, p in enumerate(inder.pivots) if p in flat}


# -- shifts, isomorphisms, gradings ------------------------------------------

def shift(T: TripleSystem, alpha=-1) -> TripleSystem:
    alpha = mpq(alpha)
    if not alpha:
        raise ValueError("shift needs a nonzero scalar")
    omega = T.omega.gram.scale(alpha)
    trip = {key: {l: alpha * x for l, x in v.items()} for key, v in T.trip.items()}
    return TripleSystem(T.n, omega, trip, T.label)


def _matrix_columns(f: Matrix) -> list:
    return f.column_dicts()


def apply_isomorphism(T: TripleSystem, f: Matrix) -> TripleSystem:
    """Structure transported along f, so that f: T -> result is an isomorphism."""
    n = T.n
    g = inverse(f)
    gcols = _matrix_columns(g)
    fcols = _matrix_columns(f)
    omega = (g.transpose() @ T.omega.gram) @ g
    trip = {}
    for a in range(n):
        for b in range(n):
            D = T.d_columns(gcols[a], gcols[b])
            if not D:
                continue
            for c in range(n):
                inner: dict = {}
                for k, x in gcols[c].items():
                    col = D.get(k)
                    if col:
                        vec_add(inner, col, x)
                out: dict = {}
                for l, x in inner.items():
                    vec_add(out, fcols[l], x)
                if out:
                    trip[(a, b, c)] = out
    return TripleSystem(n, omega, trip, T.label)


def is_isomorphism(T: TripleSystem, T2: TripleSystem, f: Matrix) -> bool:
    if T.n != T2.n or f.shape != (T.n, T.n):
        return False
    if (f.transpose() @ T2.omega.gram) @ f != T.omega.gram:
        return False
    fcols = _matrix_columns(f)
    n = T.n
    for i in range(n):
        for j in range(n):
            D2 = T2.d_columns(fcols[i], fcols[j])
            D = T.dcols().get((i, j), {})
            for k in range(n):
                left: dict = {}
                for l, x in D.get(k, {}).items():
                    vec_add(left, fcols[l], x)
                right: dict = {}
                for kk, x in fcols[k].items():
                    col = D2.get(kk)
                    if col:
                        vec_add(right, col, x)
                if left != right:
                    return False
    return True


def grading_violation(T: TripleSystem, g: Z4Grading):
    """First basis tuple breaking homogeneity, or None."""
    try:
        deg = g.degree_map(T.n)
    except ValueError:
        return ("partition", None)
    for (i, j), v in T.omega.gram.to_dict().items():
        if (deg[i] + deg[j]) % 4:
            return ("omega", (i, j))
    for (i, j, k), v in T.trip.items():
        target = (deg[i] + deg[j] + deg[k]) % 4
        for l in v:
            if deg[l] != target:
                return ("trip", (i, j, k, l))
    return None


def check_z4_grading(T: TripleSystem, g: Z4Grading) -> bool:
    return grading_violation(T, g) is None


# -- calibration -----------------------------------------------------------------

def calibrate_alpha(omega: Matrix, d_family: Callable, n: int | None = None, probe=None):
    """Scalar alpha with d_{x,y}.z - d_{x,z}.y = alpha((x|z)y - (x|y)z + 2(y|z)x).

    ``d_family(i, j)`` returns the columns {k: vector} of d_{e_i, e_j}.  The
    value is read off a probe triple and then verified on every basis triple.
    """
    gram = omega.gram if isinstance(omega, BilinearForm) else omega
    n = gram.rows if n is None else n
    rows = gram.row_dicts()
    cache: dict = {}

    def d(i, j):
        if (i, j) not in cache:
            cache[(i, j)] = d_family(i, j)
        return cache[(i, j)]

    def sides(i, j, k):
        lhs = dict(d(i, j).get(k, {}))
        vec_add(lhs, d(i, k).get(j, {}), -ONE)
        rhs: dict = {}
        vec_add(rhs, {j: ONE}, rows[i].get(k, ZERO))
        vec_add(rhs, {k: ONE}, -rows[i].get(j, ZERO))
        vec_add(rhs, {i: ONE}, 2 * rows[j].get(k, ZERO))
        return lhs, rhs

    alpha = None
    triples = ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
    if probe is not None:
        triples = iter([tuple(probe)] + list(triples))
    for i, j, k in triples:
        lhs, rhs = sides(i, j, k)
        if alpha is None:
            if not rhs:
                if lhs:
                    raise ValueError(f"no alpha fits the basis triple {(i, j, k)}")
                continue
            key = next(iter(rhs))
            alpha = lhs.get(key, ZERO) / rhs[key]
            if not alpha:
                raise ValueError("the d-family vanishes where the form does not")
        if lhs != {l: alpha * x for l, x in rhs.items()}:
            raise ValueError(f"inconsistent alpha at basis triple {(i, j, k)}")
    if alpha is None:
        raise ValueError("form is zero; alpha undefined")
    return alpha
