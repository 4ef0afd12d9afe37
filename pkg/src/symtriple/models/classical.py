"""The five classical families: special, symplectic, orthogonal, unitarian, quaternionic."""

from __future__ import annotations

from gmpy2 import mpq

from ..linalg import vec_add
from ..scalar import I, ONE, ZERO, GaussianRational, RationalQuaternion, QI, QJ, QK
from ..sts import ModelLabel, TripleSystem, Z4Grading
from .common import system_from_functions

HALF = mpq(1, 2)


def _need(cond, msg):
    if not cond:
        raise ValueError(msg)


def build_special(n: int) -> TripleSystem:
    """T = W + W*, dim W = n; indices 0..n-1 are w_r and n..2n-1 the dual basis."""
    _need(isinstance(n, int) and n >= 1, "special type needs n >= 1")

    def pair(f, x):  # f(x) for a dual index f and a vector index x
        return ONE if f - n == x else ZERO

    def form(i, j):
        if i >= n > j:
            return pair(i, j)
        if j >= n > i:
            return -pair(j, i)
        return ZERO

    def product(i, j, k):
        out: dict = {}
        if (i < n) == (j < n):
            return out
        x, f = (i, j) if i < n else (j, i)
        if k < n:
            # [x,f,y] = f(x) y + 2 f(y) x
            vec_add(out, {k: ONE}, pair(f, x))
            vec_add(out, {x: ONE}, 2 * pair(f, k))
        else:
            # [f,x,g] = -f(x) g - 2 g(x) f
            vec_add(out, {k: ONE}, -pair(f, x))
            vec_add(out, {f: ONE}, -2 * pair(k, x))
        return out

    return system_from_functions(2 * n, form, product, ModelLabel.of("special", n=n))


def build_symplectic(n: int) -> TripleSystem:
    """dim 2n with basis p_1..p_n, q_1..q_n and (p_r|q_r) = 1."""
    _need(isinstance(n, int) and n >= 1, "symplectic type needs n >= 1")

    def form(i, j):
        if j == i + n and i < n:
            return ONE
        if i == j + n and j < n:
            return -ONE
        return ZERO

    def product(i, j, k):
        out: dict = {}
        vec_add(out, {j: ONE}, form(i, k))
        vec_add(out, {i: ONE}, form(j, k))
        return out

    return system_from_functions(2 * n, form, product, ModelLabel.of("symplectic", n=n))


def build_orthogonal(p: int, q: int) -> TripleSystem:
    """T = V (x) W with W of signature (p, q); index a*m + r is a_a (x) w_r."""
    _need(p >= 0 and q >= 0 and p + q >= 3, "orthogonal type needs p + q >= 3")
    m = p + q
    b = [ONE] * p + [-ONE] * q
    sym = [[ZERO, ONE], [-ONE, ZERO]]  # <u|v> = 1

    def split(i):
        return divmod(i, m)

    def bw(x, y):
        return b[x] if x == y else ZERO

    def form(i, j):
        (a, x), (c, y) = split(i), split(j)
        return HALF * sym[a][c] * bw(x, y)

    def product(i, j, k):
        (u, x), (v, y), (w, z) = split(i), split(j), split(k)
        out: dict = {}
        c = HALF * bw(x, y)
        if c:
            vec_add(out, {v * m + z: ONE}, c * sym[u][w])
            vec_add(out, {u * m + z: ONE}, c * sym[v][w])
        c = sym[u][v]
        if c:
            vec_add(out, {w * m + y: ONE}, c * bw(x, z))
            vec_add(out, {w * m + x: ONE}, -c * bw(y, z))
        return out

    return system_from_functions(2 * m, form, product, ModelLabel.of("orthogonal", p=p, q=q))


# -- complex and quaternionic models, realified -------------------------------

def _complex_basis(n):
    """Real basis (w_1, i w_1, w_2, i w_2, ...) as complex coordinate vectors."""
    out = []
    for r in range(n):
        for unit in (GaussianRational(1), I):
            v = [GaussianRational()] * n
            v[r] = unit
            out.append(v)
    return out


def _realify_sparse(v) -> dict:
    out = {}
    for r, z in enumerate(v):
        if z.re:
            out[2 * r] = z.re
        if z.im:
            out[2 * r + 1] = z.im
    return out


def build_unitarian(p: int, q: int) -> TripleSystem:
    """Complex W with hermitian h = diag(1 x p, -1 x q), realified."""
    _need(p >= 0 and q >= 0 and p + q >= 1, "unitarian type needs p + q >= 1")
    n = p + q
    s = [ONE] * p + [-ONE] * q
    basis = _complex_basis(n)

    def h(x, y):
        return sum((s[r] * x[r] * y[r].conj() for r in range(n)), GaussianRational())

    def form(i, j):
        return h(basis[i], basis[j]).im

    def product(i, j, k):
        x, y, z = basis[i], basis[j], basis[k]
        hzx, hzy, re_xy = h(z, x), h(z, y), h(x, y).re
        v = [I * (hzx * y[r] + hzy * x[r] + re_xy * z[r]) for r in range(n)]
        return _realify_sparse(v)

    return system_from_functions(2 * n, form, product, ModelLabel.of("unitarian", p=p, q=q))


_QUNITS = (RationalQuaternion(1), QI, QJ, QK)


def build_quaternionic(n: int) -> TripleSystem:
    """Right H-module W with skew-hermitian h(u_r, u_r) = i, realified."""
    _need(isinstance(n, int) and n >= 1, "quaternionic type needs n >= 1")
    zero = RationalQuaternion()
    basis = []
    for r in range(n):
        for unit in _QUNITS:
            v = [zero] * n
            v[r] = unit
            basis.append(v)

    def h(x, y):
        return sum((x[r].conj() * QI * y[r] for r in range(n)), zero)

    def form(i, j):
        return h(basis[i], basis[j]).a

    def product(i, j, k):
        x, y, z = basis[i], basis[j], basis[k]
        hyz, hxz, hxy = h(y, z), h(x, z), h(x, y)
        v = [x[r] * hyz + y[r] * hxz + z[r] * (hxy - hxy.a) for r in range(n)]
        out = {}
        for r, qv in enumerate(v):
            for c, val in enumerate(qv.coeffs):
                if val:
                    out[4 * r + c] = val
        return out

    return system_from_functions(4 * n, form, product, ModelLabel.of("quaternionic", n=n))


# -- gradings ------------------------------------------------------------------

def special_grading(n):
    return Z4Grading(tuple(range(n)), tuple(range(n, 2 * n)))


def symplectic_grading(n):
    return Z4Grading(tuple(range(n)), tuple(range(n, 2 * n)))


def orthogonal_grading(p, q):
    m = p + q
    return Z4Grading(tuple(range(m)), tuple(range(m, 2 * m)))


def unitarian_grading(p, q):
    n = p + q
    return Z4Grading(tuple(range(0, 2 * n, 2)), tuple(range(1, 2 * n, 2)))


def quaternionic_grading(n):
    deg1 = tuple(4 * r + c for r in range(n) for c in (0, 2))
    deg3 = tuple(4 * r + c for r in range(n) for c in (1, 3))
    return Z4Grading(deg1, deg3)
