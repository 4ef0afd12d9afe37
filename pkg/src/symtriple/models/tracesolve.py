"""Recover d_{x,y} from trace(f d_{x,y}) = k (f.x|y) over an acting Lie algebra.

With a basis f_a of the acting algebra, Gram G_ab = (f_a|f_b) and action
matrices rho_a on T, the solution is

    d_{e_i,e_j} = sum_a k (rho_a^T W)_{ij} * sum_b Ginv_{ab} rho_b,

where W is the Gram matrix of the alternating form on T.
"""

from __future__ import annotations

from ..exterior import ExtElement, masks_of_degree, wedge
from ..linalg import Matrix, inverse, vec_add
from ..scalar import ONE, ZERO


def trace_gram(mats) -> Matrix:
    """Gram matrix of trace(AB) on a list of square matrices."""
    m = len(mats)
    rows = [A.row_dicts() for A in mats]
    cols = [A.column_dicts() for A in mats]
    g = {}
    for a in range(m):
        for b in range(a, m):
            # trace(AB) = sum_i sum_l A_il B_li
            s = ZERO
            for i, row in enumerate(rows[a]):
                col = cols[b][i]
                for l, x in row.items():
                    y = col.get(l)
                    if y:
                        s += x * y
            if s:
                g[(a, b)] = s
                g[(b, a)] = s
    return Matrix(m, m, g)


def solve_d_family(rep, gram: Matrix, omega: Matrix, k) -> dict:
    """Triple product tensor {(i, j, l): {out: value}} from the trace equations."""
    m = len(rep)
    n = omega.rows
    ginv = inverse(gram).row_dicts()
    # dual action matrices as {(row, col): value}
    dual = []
    for a in range(m):
        acc: dict = {}
        for b, c in ginv[a].items():
            for i, j, v in rep[b].entries():
                key = (i, j)
                nv = acc.get(key, ZERO) + c * v
                if nv:
                    acc[key] = nv
                else:
                    acc.pop(key, None)
        dual.append(acc)
    wrows = omega.row_dicts()
    trip: dict = {}
    for a in range(m):
        if not dual[a]:
            continue
        # N_a = k rho_a^T W, entry (i, j) = k sum_l rho_a[l, i] W[l, j]
        N: dict = {}
        for l, i, v in rep[a].entries():
            for j, w in wrows[l].items():
                key = (i, j)
                nv = N.get(key, ZERO) + k * v * w
                if nv:
                    N[key] = nv
                else:
                    N.pop(key, None)
        for (i, j), c in N.items():
            for (out, col), v in dual[a].items():
                vec = trip.setdefault((i, j, col), {})
                vec_add(vec, {out: v}, c)
    return {key: v for key, v in trip.items() if v}


def exterior_action(A: Matrix, N: int, masks, dual=False) -> Matrix:
    """Matrix of the derivation extension of A (N x N, acting on the ground
    space) to the span of the given masks, columns and rows in ``masks`` order."""
    pos = {mk: r for r, mk in enumerate(masks)}
    cols_A = A.column_dicts()
    entries = {}
    for c, mk in enumerate(masks):
        idx = [i for i in range(N) if mk >> i & 1]
        total = ExtElement(N, {}, dual)
        for s, i in enumerate(idx):
            img = ExtElement(N, {1 << r: v for r, v in cols_A[i].items()}, dual)
            left = ExtElement(N, {sum(1 << t for t in idx[:s]): ONE}, dual)
            right = ExtElement(N, {sum(1 << t for t in idx[s + 1:]): ONE}, dual)
            total = total + wedge(wedge(left, img), right)
        for mm, v in total.terms.items():
            if mm not in pos:
                raise ValueError("action leaves the chosen subspace")
            entries[(pos[mm], c)] = v
    return Matrix(len(masks), len(masks), entries)


def degree_masks(N, r):
    return masks_of_degree(N, r)


def coordinates_in(basis_vectors, free_columns, vec: dict) -> dict:
    """Coordinates of vec in a kernel basis whose i-th vector is 1 at free_columns[i]
    and 0 at the other free columns; verifies membership."""
    coords = {i: vec[f] for i, f in enumerate(free_columns) if f in vec}
    check: dict = {}
    for i, c in coords.items():
        vec_add(check, basis_vectors[i], c)
    if check != {k: v for k, v in vec.items() if v}:
        raise ValueError("vector is not in the subspace")
    return coords
