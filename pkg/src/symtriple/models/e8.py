"""The 56-dimensional model: T = L2(U) + L2(U*) under L = sl(U) + L4(U), dim U = 8.

T is indexed by the 28 masks of degree 2 (e_J, lexicographic), followed by
the same 28 masks read as dual monomials e^J.  The acting algebra basis is
sl_basis(8) (63 elements) followed by the 70 masks of degree 4.
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq

from ..exterior import complement, masks_of_degree, merge_sign
from ..lie import LieAlgebra
from ..linalg import ALTERNATING, BilinearForm, Matrix, inverse, vec_add
from ..scalar import ONE, ZERO
from ..sts import ModelLabel, TripleSystem, Z4Grading
from .split import _check_alpha, sl_basis
from .tracesolve import exterior_action, solve_d_family, trace_gram

DIM_U = 8
FULL = (1 << DIM_U) - 1
MASKS2 = masks_of_degree(DIM_U, 2)
MASKS4 = masks_of_degree(DIM_U, 4)
POS2 = {m: k for k, m in enumerate(MASKS2)}
POS4 = {m: k for k, m in enumerate(MASKS4)}
HALF_T = len(MASKS2)
T_DIM = 2 * HALF_T
SL_DIM = DIM_U * DIM_U - 1
L_DIM = SL_DIM + len(MASKS4)


def _sgn(I, J) -> int:
    return merge_sign(I, J)


def wedge4_on_primal(I, J):
    """e_I . e_J for |I| = 4, |J| = 2: (mask of the dual result, sign) or None."""
    if I & J:
        return None
    K = I | J
    C = complement(K, DIM_U)
    return C, _sgn(I, J) * _sgn(K, C)


def wedge4_on_dual(I, J):
    """e_I . e^J for |I| = 4, |J| = 2: (mask of the primal result, sign) or None."""
    if J & ~I:
        return None
    Ib = complement(I, DIM_U)
    M = I & ~J
    return M, _sgn(I, Ib) * _sgn(Ib, J) * _sgn(Ib | J, M)


def wedge_pairing(I, J):
    """det(e_I ^ e_J) over U."""
    if I & J or (I | J) != FULL:
        return 0
    return _sgn(I, J)


@lru_cache(maxsize=None)
def sl8():
    return sl_basis(DIM_U)


def _sl_coordinates(A: Matrix) -> dict:
    """Coordinates of a traceless 8x8 matrix in sl_basis(8)."""
    out = {}
    idx = 0
    for a in range(DIM_U):
        for b in range(DIM_U):
            if a != b:
                v = A[a, b]
                if v:
                    out[idx] = v
                idx += 1
    running = ZERO
    for a in range(DIM_U - 1):
        running += A[a, a]
        if running:
            out[idx + a] = running
    if running + A[DIM_U - 1, DIM_U - 1]:
        raise ValueError("matrix is not traceless")
    return out


@lru_cache(maxsize=None)
def _sl_action_on_l4():
    return [exterior_action(f, DIM_U, MASKS4) for f in sl8()]


@lru_cache(maxsize=None)
def l_gram() -> Matrix:
    """(.|.)_L: trace form on sl(U), wedge pairing on L4(U), blocks orthogonal."""
    g = trace_gram(sl8()).to_dict()
    for i, I in enumerate(MASKS4):
        for j, J in enumerate(MASKS4):
            v = wedge_pairing(I, J)
            if v:
                g[(SL_DIM + i, SL_DIM + j)] = mpq(v)
    return Matrix(L_DIM, L_DIM, g)


@lru_cache(maxsize=None)
def _sl_gram_inverse():
    return inverse(trace_gram(sl8())).row_dicts()


def _l4_bracket(i, j) -> dict:
    """[e_I, e_J] in sl(U) from trace(f [x, y]) = (f.x | y)."""
    acts = _sl_action_on_l4()
    J = MASKS4[j]
    rhs = {}
    for a, act in enumerate(acts):
        s = ZERO
        for r, c, v in act.entries():
            if c == i:
                w = wedge_pairing(MASKS4[r], J)
                if w:
                    s += v * w
        if s:
            rhs[a] = s
    ginv = _sl_gram_inverse()
    out: dict = {}
    for a, r in rhs.items():
        vec_add(out, ginv[a], r)
    return out


@lru_cache(maxsize=None)
def e7_algebra() -> LieAlgebra:
    """L = sl(U) + L4(U) with its Z/2-graded bracket."""
    gens = sl8()
    acts = _sl_action_on_l4()
    br = {}
    for a in range(SL_DIM):
        for b in range(SL_DIM):
            if a != b:
                c = _sl_coordinates(gens[a] @ gens[b] - gens[b] @ gens[a])
                if c:
                    br[(a, b)] = c
        cols = acts[a].column_dicts()
        for i in range(len(MASKS4)):
            v = {SL_DIM + r: x for r, x in cols[i].items()}
            if v:
                br[(a, SL_DIM + i)] = v
                br[(SL_DIM + i, a)] = {k: -x for k, x in v.items()}
    for i in range(len(MASKS4)):
        for j in range(len(MASKS4)):
            if i != j:
                v = _l4_bracket(i, j)
                if v:
                    br[(SL_DIM + i, SL_DIM + j)] = v
    return LieAlgebra(L_DIM, br)


def _dual_sl_action(A: Matrix) -> Matrix:
    """Action on L2(U*) of an element of sl(U): derivation extension of -A^T."""
    return exterior_action(A.transpose().scale(-ONE), DIM_U, MASKS2, dual=True)


def l_action_matrix(k: int) -> Matrix:
    """56x56 matrix of the k-th basis element of L on T."""
    ent = {}
    if k < SL_DIM:
        A = sl8()[k]
        for r, c, v in exterior_action(A, DIM_U, MASKS2).entries():
            ent[(r, c)] = v
        for r, c, v in _dual_sl_action(A).entries():
            ent[(HALF_T + r, HALF_T + c)] = v
        return Matrix(T_DIM, T_DIM, ent)
    I = MASKS4[k - SL_DIM]
    for c, J in enumerate(MASKS2):
        res = wedge4_on_primal(I, J)
        if res:
            ent[(HALF_T + POS2[res[0]], c)] = ONE * res[1]
        res = wedge4_on_dual(I, J)
        if res:
            ent[(POS2[res[0]], HALF_T + c)] = ONE * res[1]
    return Matrix(T_DIM, T_DIM, ent)


@lru_cache(maxsize=None)
def l_rep() -> tuple:
    return tuple(l_action_matrix(k) for k in range(L_DIM))


def e8_omega() -> Matrix:
    g = {}
    for k in range(HALF_T):
        g[(k, HALF_T + k)] = ONE
        g[(HALF_T + k, k)] = -ONE
    return Matrix(T_DIM, T_DIM, g)


def e8_trip() -> dict:
    return solve_d_family(list(l_rep()), l_gram(), e8_omega(), -2)


def build_e8_split() -> TripleSystem:
    T = TripleSystem(T_DIM, BilinearForm(T_DIM, e8_omega(), ALTERNATING), e8_trip(), ModelLabel("e8split"))
    _check_alpha(T)
    return T


def e8_grading() -> Z4Grading:
    return Z4Grading(tuple(range(HALF_T)), tuple(range(HALF_T, T_DIM)))


def primal(*idx) -> int:
    """T index of e_{ij}."""
    return POS2[sum(1 << (i - 1) for i in idx)]


def dual(*idx) -> int:
    """T index of e^{ij}."""
    return HALF_T + primal(*idx)
