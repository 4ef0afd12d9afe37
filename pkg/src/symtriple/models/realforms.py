"""Real forms of the complex exceptional models as fixed points of conjugate-linear involutions.

A complex system with rational structure constants is realified on the
interleaved basis (e_0, i e_0, e_1, i e_1, ...).  A conjugate-linear map
z -> A conj(z) with rational A becomes the Q-linear block map
[[A, 0], [0, -A]] in those coordinates, and the real form is its fixed space
with form and product multiplied by a twist (1 or i).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from gmpy2 import mpq

from ..clifford import EVEN_BASIS, clifford_generator, natural_sigma, restrict, spin_operator
from ..exterior import complement, degree, indices_of, mask_of, merge_sign
from ..linalg import ALTERNATING, BilinearForm, Echelon, Matrix, sparse_kernel, vec_add
from ..scalar import ONE, ZERO, GaussianRational
from ..sts import ModelLabel, TripleSystem, Z4Grading
from .e8 import HALF_T, MASKS2, T_DIM, build_e8_split
from .split import MASKS3, build_e6_split, build_e7_split

HALF = mpq(1, 2)


def _cmul(re, im, p, q):
    """(p + iq) times the realified vector (re, im) given as two dicts."""
    out_re: dict = {}
    out_im: dict = {}
    vec_add(out_re, re, p)
    vec_add(out_re, im, -q)
    vec_add(out_im, im, p)
    vec_add(out_im, re, q)
    return out_re, out_im


def split_parts(vec: dict):
    """Interleaved realified vector -> (real part, imaginary part) over the complex basis."""
    re, im = {}, {}
    for k, v in vec.items():
        (im if k & 1 else re)[k >> 1] = v
    return re, im


def join_parts(re: dict, im: dict) -> dict:
    out = {2 * k: v for k, v in re.items() if v}
    out.update({2 * k + 1: v for k, v in im.items() if v})
    return out


def realify_operator(M: Matrix) -> Matrix:
    """Complex-linear extension of a rational matrix on the interleaved basis."""
    ent = {}
    for i, j, v in M.entries():
        ent[(2 * i, 2 * j)] = v
        ent[(2 * i + 1, 2 * j + 1)] = v
    return Matrix(2 * M.rows, 2 * M.cols, ent)


def conjugation_matrix(A: Matrix) -> Matrix:
    """Realified z -> A conj(z)."""
    ent = {}
    for i, j, v in A.entries():
        ent[(2 * i, 2 * j)] = v
        ent[(2 * i + 1, 2 * j + 1)] = -v
    return Matrix(2 * A.rows, 2 * A.cols, ent)


class RealForm:
    """Fixed space of z -> A conj(z) inside a complex system, with a twisted structure.

    ``basis`` holds realified vectors (length 2n, interleaved).  ``system`` is
    the resulting real triple system in the coordinates of that basis.
    """

    def __init__(self, complex_T: TripleSystem, A: Matrix, twist, label, refine=None):
        n = complex_T.n
        if (A @ A) != Matrix.identity(n):
            raise ValueError(f"{label}: the conjugate-linear map is not an involution")
        self.complex = complex_T
        self.A = A
        self.twist = GaussianRational.coerce(twist)
        gamma = conjugation_matrix(A) - Matrix.identity(2 * n)
        basis = sparse_kernel(gamma.row_dicts(), 2 * n)
        if refine is not None:
            basis = refine(basis)
        if len(basis) != n:
            raise ValueError(f"{label}: fixed space has dimension {len(basis)}, expected {n}")
        self.basis = basis
        self._ech = Echelon()
        for a, v in enumerate(basis):
            tracked = dict(v)
            tracked[2 * n + a] = ONE
            self._ech.add(tracked)
        self.system = self._transport(label)

    def coordinates(self, vec: dict) -> dict:
        """Coordinates of a realified vector in the fixed-space basis."""
        n2 = 2 * self.complex.n
        r = self._ech.reduce({k: v for k, v in vec.items() if v})
        if any(k < n2 for k in r):
            raise ValueError("vector is not fixed by the involution")
        return {k - n2: -v for k, v in r.items()}

    def embed(self, coords: dict) -> dict:
        out: dict = {}
        for a, c in coords.items():
            vec_add(out, self.basis[a], c)
        return out

    def complex_form(self, x: dict, y: dict) -> GaussianRational:
        """Complex bilinear form of two realified vectors."""
        rows = self.complex.omega_rows
        xr, xi = split_parts(x)
        yr, yi = split_parts(y)
        re = im = ZERO
        for part_x, part_y, sgn_re, which in ((xr, yr, 1, 0), (xi, yi, -1, 0), (xr, yi, 1, 1), (xi, yr, 1, 1)):
            s = ZERO
            for i, a in part_x.items():
                row = rows[i]
                for j, b in part_y.items():
                    w = row.get(j)
                    if w:
                        s += a * b * w
            if which:
                im += s
            else:
                re += sgn_re * s
        return GaussianRational(re, im)

    def _d_operator(self, x: dict, y: dict):
        """Complex d_{x,y} as a pair of real column-dict matrices (re, im)."""
        dcols = self.complex.dcols()
        xr, xi = split_parts(x)
        yr, yi = split_parts(y)
        coeffs: dict = {}
        for xs, ys, is_im, sgn in ((xr, yr, 0, 1), (xi, yi, 0, -1), (xr, yi, 1, 1), (xi, yr, 1, 1)):
            for i, a in xs.items():
                for j, b in ys.items():
                    key = (i, j, is_im)
                    coeffs[key] = coeffs.get(key, ZERO) + sgn * a * b
        dre: dict = {}
        dim: dict = {}
        for (i, j, is_im), c in coeffs.items():
            if not c:
                continue
            target = dim if is_im else dre
            for k, col in dcols.get((i, j), {}).items():
                vec_add(target.setdefault(k, {}), col, c)
        return dre, dim

    @staticmethod
    def _apply(cols: dict, vec: dict) -> dict:
        out: dict = {}
        for k, x in vec.items():
            col = cols.get(k)
            if col:
                vec_add(out, col, x)
        return out

    def _transport(self, label) -> TripleSystem:
        n = len(self.basis)
        tw = self.twist
        gram = {}
        for a in range(n):
            for b in range(a + 1, n):
                v = tw * self.complex_form(self.basis[a], self.basis[b])
                if v.im:
                    raise ValueError(f"{label}: twisted form is not real on the fixed space")
                if v.re:
                    gram[(a, b)] = v.re
                    gram[(b, a)] = -v.re
        parts = [split_parts(v) for v in self.basis]
        trip = {}
        for a in range(n):
            for b in range(a, n):
                dre, dim = self._d_operator(self.basis[a], self.basis[b])
                if not dre and not dim:
                    continue
                for c, (zr, zi) in enumerate(parts):
                    re = self._apply(dre, zr)
                    vec_add(re, self._apply(dim, zi), -ONE)
                    im = self._apply(dre, zi)
                    vec_add(im, self._apply(dim, zr))
                    re, im = _cmul(re, im, tw.re, tw.im)
                    out = self.coordinates(join_parts(re, im))
                    if out:
                        trip[(a, b, c)] = out
                        trip[(b, a, c)] = out
        return TripleSystem(n, BilinearForm(n, Matrix(n, n, gram), ALTERNATING), trip, label)

    def grading_from(self, degree_of) -> Z4Grading:
        """Grading from a degree function on realified indices; basis vectors must be homogeneous."""
        deg1, deg3 = [], []
        for a, v in enumerate(self.basis):
            degs = {degree_of(k) for k in v}
            if len(degs) != 1:
                raise ValueError("fixed-space basis vector is not homogeneous")
            (deg1 if degs.pop() == 1 else deg3).append(a)
        return Z4Grading(tuple(deg1), tuple(deg3))


# -- E6: third exterior power with a hermitian form of signature (p, 6 - p) --------

E6_RANK = 6


def e6_gamma_matrix(p: int) -> Matrix:
    """Matrix A of Gamma(z) = A conj(z) on the basis MASKS3."""
    neg = mask_of(range(p + 1, E6_RANK + 1))
    pos = {m: k for k, m in enumerate(MASKS3)}
    ent = {}
    for c, I in enumerate(MASKS3):
        Ib = complement(I, E6_RANK)
        # Psi(e_I) = (-1)^{|I cap neg|} e^I, then Phi_3^{-1}(e^I) = sign(Ib, I) e_Ib
        s = (-1) ** degree(I & neg) * merge_sign(Ib, I)
        ent[(pos[Ib], c)] = ONE * s
    return Matrix(len(MASKS3), len(MASKS3), ent)


def e6_gamma_square(p: int) -> int:
    """+1 or -1 according to Gamma^2 = +-id, for p in 3..6."""
    A = e6_gamma_matrix(p)
    sq = A @ A
    n = len(MASKS3)
    for s in (1, -1):
        if sq == Matrix.identity(n).scale(mpq(s)):
            return s
    raise ValueError("Gamma^2 is not a multiple of the identity")


@lru_cache(maxsize=None)
def e6_real_form(p: int) -> RealForm:
    if p not in (3, 5):
        raise ValueError("the non-split E6 models take p in {3, 5}")
    family = "e6su33" if p == 3 else "e6su51"
    return RealForm(build_e6_split(), e6_gamma_matrix(p), GaussianRational(0, 1), ModelLabel(family))


def build_e6_nonsplit(p: int) -> TripleSystem:
    return e6_real_form(p).system


def e6_nonsplit_grading(p: int) -> Z4Grading:
    # real multiples of e_I have degree 3, imaginary ones degree 1
    return e6_real_form(p).grading_from(lambda k: 1 if k & 1 else 3)


# -- E7: even half-spin module, two real forms ---------------------------------------

E7_RANK = 6


def _wedge_image_matrix(images: dict, masks) -> Matrix:
    """Matrix on span(masks) of the algebra map e_i -> images[i] (images: index -> (index, sign))."""
    pos = {m: k for k, m in enumerate(masks)}
    ent = {}
    for c, I in enumerate(masks):
        sign = 1
        acc = 0
        for i in indices_of(I):
            j, s = images[i]
            sign *= s * merge_sign(acc, 1 << (j - 1))
            acc |= 1 << (j - 1)
        ent[(pos[acc], c)] = ONE * sign
    return Matrix(len(masks), len(masks), ent)


@lru_cache(maxsize=None)
def so102_lambda_x() -> Matrix:
    """Clifford image of w7 w8 w9 w10 = (e1 - e^1)(e2 - e^2)(e3 - e^3)(e4 - e^4), on the even part."""
    M = None
    for k in range(4):
        g = clifford_generator({k: ONE, E7_RANK + k: -ONE})
        M = g if M is None else M @ g
    return restrict(M, EVEN_BASIS)


def so102_grading_element() -> Matrix:
    """h = -sigma_{a,b}/4 on the even half-spin module, a = w1 + w11, b = w1 - w11."""
    a = {0: ONE, E7_RANK: ONE, 4: ONE, E7_RANK + 4: -ONE}
    b = {0: ONE, E7_RANK: ONE, 4: -ONE, E7_RANK + 4: ONE}
    sigma = natural_sigma(a, b)
    return restrict(spin_operator(sigma), EVEN_BASIS).scale(mpq(-1, 4))


def _eigen_refine(basis):
    """Split a fixed-space basis into the +1/2 and -1/2 eigenvectors of h."""
    h = realify_operator(so102_grading_element())
    out = []
    for sign in (1, -1):
        ech = Echelon()
        for v in basis:
            w = dict(v)
            vec_add(w, h.apply(v), 2 * sign)  # (1 + 2 sign h) v, proportional to the projection
            w = {k: x for k, x in w.items() if x}
            if w and ech.add(w):
                out.append(w)
    return out


@lru_cache(maxsize=None)
def e7_so102_form() -> RealForm:
    return RealForm(build_e7_split(), so102_lambda_x(), 1, ModelLabel("e7so102"), refine=_eigen_refine)


def build_e7_so102() -> TripleSystem:
    return e7_so102_form().system


def e7_so102_grading() -> Z4Grading:
    rf = e7_so102_form()
    h = realify_operator(so102_grading_element())
    deg1, deg3 = [], []
    for a, v in enumerate(rf.basis):
        hv = h.apply(v)
        if hv == {k: HALF * x for k, x in v.items()}:
            deg1.append(a)
        elif hv == {k: -HALF * x for k, x in v.items()}:
            deg3.append(a)
        else:
            raise ValueError("basis vector is not an eigenvector of h")
    return Z4Grading(tuple(deg1), tuple(deg3))


def rj_matrix() -> Matrix:
    """Conjugate-linear R_j on the even part: e_i -> e_{i+3}, e_{i+3} -> -e_i."""
    images = {}
    for i in (1, 2, 3):
        images[i] = (i + 3, 1)
        images[i + 3] = (i, -1)
    return _wedge_image_matrix(images, EVEN_BASIS)


@lru_cache(maxsize=None)
def e7_sostar_form() -> RealForm:
    return RealForm(build_e7_split(), rj_matrix(), 1, ModelLabel("e7sostar"))


def build_e7_sostar() -> TripleSystem:
    return e7_sostar_form().system


def e7_sostar_grading() -> Z4Grading:
    return e7_sostar_form().grading_from(lambda k: 1 if degree(EVEN_BASIS[k >> 1]) in (0, 4) else 3)


# -- E8: L2(U) + L2(U*) with a hermitian form of signature (6, 2) --------------------

E8_P = 6


def upsilon_matrix(p: int = E8_P) -> Matrix:
    """Upsilon_T(e_J) = (-1)^{|J cap I_p|} e^J and back, as A in z -> A conj(z)."""
    neg = mask_of(range(p + 1, 9))
    ent = {}
    for k, J in enumerate(MASKS2):
        s = ONE * (-1) ** degree(J & neg)
        ent[(HALF_T + k, k)] = s
        ent[(k, HALF_T + k)] = s
    return Matrix(T_DIM, T_DIM, ent)


@lru_cache(maxsize=None)
def e8_real_form() -> RealForm:
    return RealForm(build_e8_split(), upsilon_matrix(), GaussianRational(0, 1), ModelLabel("e8nonsplit"))


def build_e8_nonsplit() -> TripleSystem:
    return e8_real_form().system


def e8_nonsplit_grading() -> Z4Grading:
    # real multiples of e_J and e^J have degree 1
    return e8_real_form().grading_from(lambda k: 3 if k & 1 else 1)


def e8_signature_count(p: int) -> tuple:
    """(#increasing (1,i,j,k) with even |I cap I_p|, Killing signature of the fixed E7 form)."""
    Ip = set(range(p + 1, 9))
    count = sum(1 for rest in combinations(range(2, 9), 3) if len(({1} | set(rest)) & Ip) % 2 == 0)
    # su(p, 8-p) part plus (count of +1) - (70 - count) on the fourth power
    return count, 1 - (2 * p - 8) ** 2 + 2 * count - (70 - 2 * count)
