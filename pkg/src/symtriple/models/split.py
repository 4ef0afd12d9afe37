"""Split exceptional models of dimension 14, 20 and 32 built by the trace solver."""

from __future__ import annotations

from functools import lru_cache

from ..clifford import EVEN_BASIS, natural_sigma, restrict, sigma_basis, so_embedding
from ..exterior import ExtElement, ba_form, degree, indices_of, masks_of_degree, merge_sign
from ..linalg import ALTERNATING, BilinearForm, Echelon, Matrix, sparse_kernel
from ..scalar import ONE, ZERO
from ..sts import ModelLabel, TripleSystem, Z4Grading, calibrate_alpha
from .tracesolve import coordinates_in, exterior_action, solve_d_family, trace_gram

RANK = 6
MASKS3 = masks_of_degree(RANK, 3)


def _top_pairing(I, J):
    """det(e_I ^ e_J) in a 6-dimensional space."""
    if I & J or (I | J) != (1 << RANK) - 1:
        return ZERO
    return ONE if merge_sign(I, J) > 0 else -ONE


def _check_alpha(T: TripleSystem, probe=None):
    alpha = calibrate_alpha(T.omega, lambda i, j: T.dcols().get((i, j), {}), T.n, probe)
    if alpha != 1:
        raise ValueError(f"{T.label}: calibration gave alpha = {alpha}, expected 1")
    return alpha


# -- F4: kernel inside the third exterior power of a symplectic 6-space ------

def _symplectic_w(i, j):
    """b_a on W with basis u1,u2,u3,v1,v2,v3 (0-based), b_a(u_i, v_i) = 1."""
    if j == i + 3 and i < 3:
        return ONE
    if i == j + 3 and j < 3:
        return -ONE
    return ZERO


@lru_cache(maxsize=None)
def f4_space():
    """(kernel basis as sparse vectors over MASKS3 positions, free columns)."""
    rows = [dict() for _ in range(RANK)]
    for c, mk in enumerate(MASKS3):
        a, b, d = (i - 1 for i in indices_of(mk))
        for (x1, x2, x3) in ((a, b, d), (b, d, a), (d, a, b)):
            v = _symplectic_w(x1, x2)
            if v:
                rows[x3][c] = rows[x3].get(c, ZERO) + v
    basis = sparse_kernel(rows, len(MASKS3))
    free = [c for c in range(len(MASKS3)) if c not in _pivots(rows)]
    return basis, free


def _pivots(rows):
    e = Echelon()
    for r in rows:
        r = {k: v for k, v in r.items() if v}
        if r:
            e.add(r)
    return set(e.pivots)


def sp6_basis() -> list:
    """gamma_{e_a, e_b}: w -> b_a(e_a, w) e_b + b_a(e_b, w) e_a for a <= b."""
    out = []
    for a in range(RANK):
        for b in range(a, RANK):
            ent = {}
            for w in range(RANK):
                for src, dst in ((a, b), (b, a)):
                    v = _symplectic_w(src, w)
                    if v:
                        ent[(dst, w)] = ent.get((dst, w), ZERO) + v
            out.append(Matrix(RANK, RANK, {k: v for k, v in ent.items() if v}))
    return out


def _restrict_to_kernel(A: Matrix, basis, free) -> Matrix:
    cols = []
    for v in basis:
        img = A.apply(v)
        cols.append(coordinates_in(basis, free, img))
    return Matrix.from_columns(cols, len(basis))


def build_f4() -> TripleSystem:
    basis, free = f4_space()
    n = len(basis)
    gens = sp6_basis()
    rep = [_restrict_to_kernel(exterior_action(g, RANK, MASKS3), basis, free) for g in gens]
    gram = {}
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            s = ZERO
            for p, a in x.items():
                for q, b in y.items():
                    s += a * b * _top_pairing(MASKS3[p], MASKS3[q])
            if s:
                gram[(i, j)] = s
    omega = Matrix(n, n, gram)
    trip = solve_d_family(rep, trace_gram(gens), omega, -2)
    T = TripleSystem(n, BilinearForm(n, omega, ALTERNATING), trip, ModelLabel("f4"))
    _check_alpha(T)
    return T


def f4_element(masks_coeffs: dict) -> dict:
    """T-coordinates of a combination of wedge monomials, given as {mask: coeff}."""
    basis, free = f4_space()
    pos = {mk: c for c, mk in enumerate(MASKS3)}
    vec = {pos[mk]: ONE * v for mk, v in masks_coeffs.items()}
    return coordinates_in(basis, free, vec)


def f4_grading() -> Z4Grading:
    basis, _ = f4_space()
    deg1, deg3 = [], []
    for i, v in enumerate(basis):
        degs = {(2 * degree(MASKS3[p] & 0b111) - 3) % 4 for p in v}
        if len(degs) != 1:
            raise ValueError("kernel basis vector is not weight-homogeneous")
        (deg1 if degs.pop() == 1 else deg3).append(i)
    return Z4Grading(tuple(deg1), tuple(deg3))


# -- E6: third exterior power of a 6-space under sl6 -------------------------

def sl_basis(N) -> list:
    """E_ab (a != b) followed by E_aa - E_{a+1,a+1}."""
    out = []
    for a in range(N):
        for b in range(N):
            if a != b:
                out.append(Matrix(N, N, {(a, b): ONE}))
    for a in range(N - 1):
        out.append(Matrix(N, N, {(a, a): ONE, (a + 1, a + 1): -ONE}))
    return out


def e6_omega() -> Matrix:
    n = len(MASKS3)
    g = {}
    for i, I in enumerate(MASKS3):
        for j, J in enumerate(MASKS3):
            v = _top_pairing(I, J)
            if v:
                g[(i, j)] = v
    return Matrix(n, n, g)


def build_e6_split() -> TripleSystem:
    gens = sl_basis(RANK)
    rep = [exterior_action(g, RANK, MASKS3) for g in gens]
    omega = e6_omega()
    n = len(MASKS3)
    trip = solve_d_family(rep, trace_gram(gens), omega, -2)
    T = TripleSystem(n, BilinearForm(n, omega, ALTERNATING), trip, ModelLabel("e6split"))
    _check_alpha(T)
    return T


def e6_weight(mask) -> int:
    return degree(mask & 0b000111) - degree(mask & 0b111000)


def e6_grading() -> Z4Grading:
    deg1 = tuple(i for i, mk in enumerate(MASKS3) if e6_weight(mk) in (-3, 1))
    deg3 = tuple(i for i, mk in enumerate(MASKS3) if e6_weight(mk) in (-1, 3))
    return Z4Grading(deg1, deg3)


# -- E7: even half-spin module of so(W + W*) ---------------------------------

@lru_cache(maxsize=None)
def so12_data():
    """(natural 12x12 matrices, half-spin 32x32 matrices) for the sigma basis."""
    natural, spin = [], []
    for a, b in sigma_basis():
        natural.append(natural_sigma({a: 1}, {b: 1}))
        spin.append(restrict(so_embedding({a: 1}, {b: 1}), EVEN_BASIS))
    return natural, spin


def e7_omega() -> Matrix:
    n = len(EVEN_BASIS)
    g = {}
    for i, I in enumerate(EVEN_BASIS):
        for j, J in enumerate(EVEN_BASIS):
            v = ba_form(ExtElement(RANK, {I: ONE}), ExtElement(RANK, {J: ONE}))
            if v:
                g[(i, j)] = v
    return Matrix(n, n, g)


def build_e7_split() -> TripleSystem:
    natural, spin = so12_data()
    omega = e7_omega()
    n = len(EVEN_BASIS)
    trip = solve_d_family(spin, trace_gram(natural), omega, -4)
    T = TripleSystem(n, BilinearForm(n, omega, ALTERNATING), trip, ModelLabel("e7split"))
    _check_alpha(T)
    return T


def e7_grading() -> Z4Grading:
    deg1 = tuple(i for i, mk in enumerate(EVEN_BASIS) if degree(mk) in (0, 4))
    deg3 = tuple(i for i, mk in enumerate(EVEN_BASIS) if degree(mk) in (2, 6))
    return Z4Grading(deg1, deg3)


