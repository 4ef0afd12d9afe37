"""The Z/2-graded Lie algebra sp(V) + inder(T) + V (x) T of a triple system, its Killing form
and the expected classification data.

Basis order: h, e, f; the inder_span basis; e1 (x) x_i; e2 (x) x_i.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

from gmpy2 import mpq

from .lie import LieAlgebra
from .linalg import SYMMETRIC, BilinearForm, Matrix, inertia, vec_add
from .rng import Lcg
from .scalar import ONE, ZERO
from .sts import ModelLabel, TripleSystem, inder_coordinates, inder_span

JACOBI_EXHAUSTIVE_CUTOFF = 52
JACOBI_SAMPLES = 100_000

H, E, F = 0, 1, 2
# sp(V) on V = span(e1, e2): (element, vector index) -> {vector index: coefficient}
_SP_ON_V = {
    (H, 0): {0: ONE}, (H, 1): {1: -ONE},
    (E, 1): {0: ONE},
    (F, 0): {1: ONE},
}
# gamma_{a,b} in the h, e, f basis
_GAMMA = {(0, 0): {E: 2 * ONE}, (1, 1): {F: -2 * ONE}, (0, 1): {H: -ONE}, (1, 0): {H: -ONE}}
# <e_a | e_b>
_SYMPLECTIC_V = {(0, 1): ONE, (1, 0): -ONE}


def worker_count() -> int:
    """Worker cap read from STS_THREADS (default 1)."""
    try:
        return max(1, int(os.environ.get("STS_THREADS", "1")))
    except ValueError:
        return 1


@dataclass
class Envelope:
    algebra: LieAlgebra
    triple: TripleSystem
    inder: LieAlgebra

    @property
    def inder_dim(self):
        return self.inder.dim

    @property
    def n(self):
        return self.triple.n

    def odd_index(self, a, i):
        """Index of e_{a+1} (x) x_i."""
        return 3 + self.inder.dim + a * self.triple.n + i

    def blocks(self):
        m_in = self.inder.dim
        return (range(0, 3), range(3, 3 + m_in), range(3 + m_in, self.algebra.dim))


def build_envelope(T: TripleSystem) -> Envelope:
    """Standard enveloping Lie algebra of T; raises if d_{x,y} leaves the inder span."""
    inder = inder_span(T)
    n, m_in = T.n, inder.dim
    off = 3
    odd = 3 + m_in
    dim = odd + 2 * n
    br: dict = {}

    def put(i, j, v):
        v = {k: x for k, x in v.items() if x}
        if v:
            br[(i, j)] = v
            br[(j, i)] = {k: -x for k, x in v.items()}

    put(H, E, {E: 2 * ONE})
    put(H, F, {F: -2 * ONE})
    put(E, F, {H: ONE})
    for (s, a), img in _SP_ON_V.items():
        for i in range(n):
            put(s, odd + a * n + i, {odd + b * n + i: c for b, c in img.items()})
    for (a, b), v in inder.brackets.items():
        br[(off + a, off + b)] = {off + k: x for k, x in v.items()}
    for d, mat in enumerate(inder.rep):
        cols = mat.column_dicts()
        for i in range(n):
            for a in range(2):
                put(off + d, odd + a * n + i, {odd + a * n + l: x for l, x in cols[i].items()})
    rows = T.omega_rows
    dcols = T.dcols()
    rep_flat = [mat.to_dict() for mat in inder.rep]
    coords_cache = {}
    for i in range(n):
        for j in range(n):
            key = (min(i, j), max(i, j))
            if key not in coords_cache:
                cols = dcols.get(key, {})
                coords = inder_coordinates(inder, cols, n)
                check: dict = {}
                for idx, x in coords.items():
                    vec_add(check, rep_flat[idx], x)
                if check != {(r, c): v for c, col in cols.items() for r, v in col.items()}:
                    raise ValueError(f"d_{{{i},{j}}} is not in the inner derivation span")
                coords_cache[key] = coords
            coords = coords_cache[key]
            form = rows[i].get(j, ZERO)
            for a in range(2):
                for b in range(2):
                    out: dict = {}
                    if form:
                        vec_add(out, _GAMMA[(a, b)], form)
                    pair = _SYMPLECTIC_V.get((a, b))
                    if pair:
                        vec_add(out, {off + k: x for k, x in coords.items()}, pair)
                    out = {k: x for k, x in out.items() if x}
                    if out:
                        br[(odd + a * n + i, odd + b * n + j)] = out
    grading = [0] * odd + [1] * (2 * n)
    names = ["h", "e", "f"] + [f"d{k}" for k in range(m_in)] + \
        [f"e{a + 1}x{i}" for a in range(2) for i in range(n)]
    L = LieAlgebra(dim, br, grading=grading, names=names)
    ok, pair = L.is_antisymmetric()
    if not ok:
        raise ValueError(f"envelope bracket is not antisymmetric at {pair}")
    return Envelope(L, T, inder)


# -- Jacobi ------------------------------------------------------------------------

@dataclass
class JacobiReport:
    passed: bool
    mode: str
    checked: int
    seed: int | None = None
    counterexample: tuple | None = None

    def summary(self):
        head = "PASS" if self.passed else f"FAIL at basis triple {self.counterexample}"
        extra = f", seed {self.seed}" if self.seed is not None else ""
        return f"{head} ({self.mode}, {self.checked} triples{extra})"


def jacobiator(L: LieAlgebra, i, j, k) -> dict:
    ad = L.ad_columns()
    out: dict = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        inner = ad[a].get(b)
        if inner:
            for l, x in inner.items():
                v = ad[l].get(c)
                if v:
                    vec_add(out, v, x)
    return out


def check_jacobi(L: LieAlgebra, mode="auto", seed=1, count=JACOBI_SAMPLES) -> JacobiReport:
    """Jacobi identity on basis triples; exhaustive up to dimension 52 in auto mode."""
    if mode not in ("auto", "exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    ok, pair = L.is_antisymmetric()
    if not ok:
        return JacobiReport(False, "antisymmetry", 0, None, pair)
    m = L.dim
    if mode == "exhaustive" or (mode == "auto" and m <= JACOBI_EXHAUSTIVE_CUTOFF):
        checked = 0
        for i in range(m):
            for j in range(i + 1, m):
                for k in range(j + 1, m):
                    checked += 1
                    if jacobiator(L, i, j, k):
                        return JacobiReport(False, "exhaustive", checked, None, (i, j, k))
        return JacobiReport(True, "exhaustive", checked)
    rng = Lcg(seed)
    for s in range(count):
        i, j, k = rng.randrange(m), rng.randrange(m), rng.randrange(m)
        if jacobiator(L, i, j, k):
            return JacobiReport(False, "sampled", s + 1, seed, (i, j, k))
    return JacobiReport(True, "sampled", count, seed)


# -- Killing form ----------------------------------------------------------------------

def _killing_gram_integer(L: LieAlgebra):
    """tr(ad x ad y) with scipy int64 products after clearing denominators, or None on overflow risk."""
    import numpy as np
    from scipy import sparse

    m = L.dim
    den = 1
    for v in L.brackets.values():
        for x in v.values():
            den = math.lcm(den, int(x.denominator))
    rows, cols, vals = [], [], []
    biggest = 0
    for (i, j), v in L.brackets.items():
        for k, x in v.items():
            val = int(x * den)
            biggest = max(biggest, abs(val))
            rows.append(i)
            cols.append(k * m + j)  # (ad e_i)[k, j]
            vals.append(val)
    if biggest and m * m * biggest * biggest >= 2 ** 62:
        return None
    X = sparse.csr_matrix((np.array(vals, dtype=np.int64), (rows, cols)), shape=(m, m * m), dtype=np.int64)
    # Y[j, (k, l)] = (ad e_j)[l, k], so (X Y^T)[i, j] = sum_{k,l} (ad e_i)[k,l] (ad e_j)[l,k]
    perm_cols = [(c % m) * m + c // m for c in cols]
    Y = sparse.csr_matrix((np.array(vals, dtype=np.int64), (rows, perm_cols)), shape=(m, m * m), dtype=np.int64)
    K = (X @ Y.T).tocoo()
    scale = mpq(1, den * den)
    return {(int(r), int(c)): mpq(int(v)) * scale for r, c, v in zip(K.row, K.col, K.data) if v}


def _killing_gram_python(L: LieAlgebra):
    m = L.dim
    ad = L.ad_columns()
    # entries of ad e_i as {(k, j): value}
    mats = [{(k, j): x for j, col in ad[i].items() for k, x in col.items()} for i in range(m)]
    by_row = []
    for M in mats:
        d: dict = {}
        for (k, j), x in M.items():
            d.setdefault(k, {})[j] = x
        by_row.append(d)
    out = {}
    for i in range(m):
        for j in range(i, m):
            s = ZERO
            Bj = by_row[j]
            for (k, l), x in mats[i].items():
                y = Bj.get(l, {}).get(k)
                if y:
                    s += x * y
            if s:
                out[(i, j)] = s
                out[(j, i)] = s
    return out


def killing_gram(L: LieAlgebra) -> Matrix:
    g = _killing_gram_integer(L)
    if g is None:
        g = _killing_gram_python(L)
    return Matrix(L.dim, L.dim, g)


@dataclass
class KillingReport:
    gram: BilinearForm
    signature_g: int
    signature_sp: int
    signature_inder: int
    signature_odd: int
    nondegenerate: bool
    even_odd_orthogonal: bool
    sp_inder_orthogonal: bool
    odd_factor: mpq | None
    kappa_hh: mpq
    extras: dict = field(default_factory=dict)


def _restrict(gram: dict, idx) -> Matrix:
    pos = {g: k for k, g in enumerate(idx)}
    return Matrix(len(idx), len(idx), {(pos[i], pos[j]): v for (i, j), v in gram.items() if i in pos and j in pos})


def killing(env: Envelope) -> KillingReport:
    L = env.algebra
    K = killing_gram(L)
    g = K.to_dict()
    sp, ind, odd = (list(b) for b in env.blocks())
    block = {}
    for b, idx in enumerate((sp, ind, odd)):
        for i in idx:
            block[i] = b
    even_odd = all((block[i] == 2) == (block[j] == 2) for (i, j) in g)
    sp_inder = not any({block[i], block[j]} == {0, 1} for (i, j) in g)
    counts = [inertia(_restrict(g, idx)) for idx in (sp, ind, odd)]
    sigs = [p - q for p, q, _ in counts]
    nondeg = even_odd and sp_inder and all(z == 0 for _, _, z in counts)
    return KillingReport(
        gram=BilinearForm(L.dim, K, SYMMETRIC),
        signature_g=sum(sigs) if even_odd and sp_inder else _signature_whole(g, L.dim),
        signature_sp=sigs[0],
        signature_inder=sigs[1],
        signature_odd=sigs[2],
        nondegenerate=nondeg,
        even_odd_orthogonal=even_odd,
        sp_inder_orthogonal=sp_inder,
        odd_factor=_odd_factor(env, g),
        kappa_hh=g.get((H, H), ZERO),
    )


def _signature_whole(g, m):
    p, q, _ = inertia(Matrix(m, m, g))
    return p - q


def _odd_factor(env: Envelope, g: dict):
    """lambda with kappa(a (x) x, b (x) y) = lambda <a|b> (x|y), or None if no such lambda."""
    n = env.n
    rows = env.triple.omega_rows
    lam = None
    for a in range(2):
        for b in range(2):
            pair = _SYMPLECTIC_V.get((a, b), ZERO)
            for i in range(n):
                for j in range(n):
                    k = g.get((env.odd_index(a, i), env.odd_index(b, j)), ZERO)
                    expect = pair * rows[i].get(j, ZERO)
                    if not expect:
                        if k:
                            return None
                        continue
                    if lam is None:
                        lam = k / expect
                    if k != lam * expect:
                        return None
    return lam


# -- classification ------------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationRow:
    label: ModelLabel
    envelope_name: str
    inder_name: str
    envelope_dim: int
    inder_dim: int
    signature_g: int
    signature_inder: int
    simple_inder: bool


def _row(label, g_name, i_name, dim_t, inder_dim, sig_g, simple):
    return ClassificationRow(label, g_name, i_name, 3 + inder_dim + 2 * dim_t, inder_dim, sig_g, sig_g - 1, simple)


_EXCEPTIONAL = {
    # family: (envelope, inder, dim T, dim inder, envelope signature)
    "g2": ("g2,2", "sl2(R)", 4, 3, 2),
    "f4": ("f4,4", "sp6(R)", 14, 21, 4),
    "e6split": ("e6,6", "sl6(R)", 20, 35, 6),
    "e6su33": ("e6,2", "su3,3", 20, 35, 2),
    "e6su51": ("e6,-14", "su5,1", 20, 35, -14),
    "e7split": ("e7,7", "so6,6(R)", 32, 66, 7),
    "e7sostar": ("e7,-5", "so*12", 32, 66, -5),
    "e7so102": ("e7,-25", "so10,2(R)", 32, 66, -25),
    "e8split": ("e8,8", "e7,7", 56, 133, 8),
    "e8nonsplit": ("e8,-24", "e7,-25", 56, 133, -24),
}


def classification_row(label: ModelLabel) -> ClassificationRow:
    """Expected envelope and inner derivation algebras with their Killing signatures.

    signature_inder is the signature of the envelope's Killing form restricted
    to the inder block; for simple inder it equals that of inder's own Killing form.
    """
    fam = label.family
    if fam in _EXCEPTIONAL:
        g_name, i_name, dim_t, m_in, sig = _EXCEPTIONAL[fam]
        return _row(label, g_name, i_name, dim_t, m_in, sig, True)
    if fam == "symplectic":
        n = label.param("n")
        return _row(label, f"sp{2 * n + 2}(R)", f"sp{2 * n}(R)", 2 * n, n * (2 * n + 1), n + 1, True)
    if fam == "special":
        n = label.param("n")
        return _row(label, f"sl{n + 2}(R)", f"gl{n}(R)", 2 * n, n * n, n + 1, False)
    if fam == "orthogonal":
        p, q = label.param("p"), label.param("q")
        a, b = p + 2, q + 2
        m = p + q
        sig = a * b - a * (a - 1) // 2 - b * (b - 1) // 2
        return _row(label, f"so{a},{b}(R)", f"so{p},{q}(R)+sl2(R)", 2 * m, m * (m - 1) // 2 + 3, sig, False)
    if fam == "unitarian":
        p, q = label.param("p"), label.param("q")
        m = p + q
        return _row(label, f"su{p + 1},{q + 1}", f"u{p},{q}", 2 * m, m * m, 1 - (p - q) ** 2, False)
    if fam == "quaternionic":
        n = label.param("n")
        return _row(label, f"so*{2 * n + 4}", f"so*{2 * n}+su2", 4 * n, 3 + n * (2 * n - 1), -(n + 2), False)
    raise ValueError(f"no classification row for {label}")


@dataclass
class ComputedRow:
    expected: ClassificationRow
    envelope_dim: int
    inder_dim: int
    signature_g: int
    signature_inder: int
    signature_odd: int

    @property
    def match(self) -> bool:
        e = self.expected
        return (self.envelope_dim, self.inder_dim, self.signature_g, self.signature_inder, self.signature_odd) == \
            (e.envelope_dim, e.inder_dim, e.signature_g, e.signature_inder, 0)


def computed_row(label: ModelLabel, env: Envelope, report: KillingReport) -> ComputedRow:
    return ComputedRow(classification_row(label), env.algebra.dim, env.inder_dim,
                       report.signature_g, report.signature_inder, report.signature_odd)
