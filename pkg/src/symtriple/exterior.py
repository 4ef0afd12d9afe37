"""Exterior algebra over a basis e_1..e_N (N <= 8) with exact signs.

A multi-index is an int bitmask: bit i-1 set means e_i is a factor.  The
basis monomial of a mask is the wedge of its factors in increasing order.
"""

from __future__ import annotations

from itertools import combinations

from .scalar import ONE, ZERO

MAX_GROUND = 8


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        if not 1 <= i <= MAX_GROUND:
            raise ValueError(f"index {i} out of range")
        bit = 1 << (i - 1)
        if m & bit:
            raise ValueError(f"repeated index {i}")
        m |= bit
    return m


def indices_of(mask: int) -> tuple:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def degree(mask: int) -> int:
    return bin(mask).count("1")


def complement(mask: int, N: int) -> int:
    return ((1 << N) - 1) & ~mask


def merge_sign(I: int, J: int) -> int:
    """Sign of the permutation sorting the concatenation (I, J); needs I, J disjoint."""
    if I & J:
        raise ValueError("merge sign needs disjoint multi-indices")
    inversions = 0
    j = J
    pos = 0
    while j:
        if j & 1:
            inversions += degree(I >> (pos + 1))
        j >>= 1
        pos += 1
    return -1 if inversions & 1 else 1


def masks_of_degree(N: int, r: int) -> list:
    """Masks of size r in lexicographic order of their index sequences."""
    return [mask_of(c) for c in combinations(range(1, N + 1), r)]


def label(mask: int, dual=False) -> str:
    idx = "".join(str(i) for i in indices_of(mask)) or "0"
    return ("e^" if dual else "e_") + idx


class ExtElement:
    """Finite combination of basis monomials of the exterior algebra.

    ``dual`` marks elements of the exterior algebra of the dual space, whose
    basis monomials are written e^I.  Coefficients are rationals or any ring
    elements supporting +, * (Gaussian rationals in complex constructors).
    """

    __slots__ = ("N", "terms", "dual")

    def __init__(self, N: int, terms=None, dual: bool = False):
        if not 0 <= N <= MAX_GROUND:
            raise ValueError(f"ground dimension {N} unsupported")
        clean = {}
        for m, c in (terms or {}).items():
            if m >> N:
                raise ValueError(f"mask {m:b} exceeds ground dimension {N}")
            if c:
                clean[m] = c
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "dual", dual)

    def __setattr__(self, name, value):
        raise AttributeError("ExtElement is immutable")

    @classmethod
    def basis(cls, N, *indices, dual=False, coeff=ONE):
        return cls(N, {mask_of(indices): coeff}, dual)

    @classmethod
    def one(cls, N, dual=False):
        return cls(N, {0: ONE}, dual)

    def _check(self, other):
        if not isinstance(other, ExtElement):
            raise TypeError("expected ExtElement")
        if other.N != self.N:
            raise ValueError(f"ground dimensions differ: {self.N} vs {other.N}")
        if other.dual != self.dual:
            raise ValueError("cannot mix an exterior algebra with its dual")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, ZERO) + c
        return ExtElement(self.N, t, self.dual)

    def __neg__(self):
        return ExtElement(self.N, {m: -c for m, c in self.terms.items()}, self.dual)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return ExtElement(self.N, {m: c * v for m, v in self.terms.items()}, self.dual)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        return (self.N, self.dual, self.terms) == (other.N, other.dual, other.terms)

    def __hash__(self):
        return hash((self.N, self.dual, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {degree(m) for m in self.terms}

    def homogeneous_degree(self) -> int:
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError("element is not homogeneous")
        return ds.pop() if ds else 0

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{label(m, self.dual)}" for m, c in sorted(self.terms.items()))


def wedge(x: ExtElement, y: ExtElement) -> ExtElement:
    x._check(y)
    out: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            if a & b:
                continue
            m = a | b
            v = ca * cb if merge_sign(a, b) > 0 else -(ca * cb)
            out[m] = out.get(m, ZERO) + v
    return ExtElement(x.N, out, x.dual)


def det_pairing(x: ExtElement, y: ExtElement, N: int | None = None):
    """Coefficient of e_{1..N} in x ^ y."""
    N = x.N if N is None else N
    if x.N != N:
        raise ValueError("ground dimension mismatch")
    return wedge(x, y).terms.get((1 << N) - 1, ZERO)


def phi(x: ExtElement, N: int | None = None) -> ExtElement:
    """Duality e_I -> (-1)^{I Ibar} e^{Ibar} from degree i to dual degree N-i."""
    N = x.N if N is None else N
    if x.dual:
        raise ValueError("phi expects a primal element")
    x.homogeneous_degree()
    out = {}
    for m, c in x.terms.items():
        cm = complement(m, N)
        out[cm] = c if merge_sign(m, cm) > 0 else -c
    return ExtElement(N, out, dual=True)


def phi_inverse(f: ExtElement) -> ExtElement:
    if not f.dual:
        raise ValueError("phi_inverse expects a dual element")
    f.homogeneous_degree()
    N = f.N
    out = {}
    for cm, c in f.terms.items():
        m = complement(cm, N)
        out[m] = c if merge_sign(m, cm) > 0 else -c
    return ExtElement(N, out)


def contract(j: int, x: ExtElement) -> ExtElement:
    """Odd superderivation extending e^j on the exterior algebra."""
    bit = 1 << (j - 1)
    out = {}
    for m, c in x.terms.items():
        if m & bit:
            below = degree(m & (bit - 1))
            out[m & ~bit] = -c if below & 1 else c
    return ExtElement(x.N, out, x.dual)


def left_mult(j: int, x: ExtElement) -> ExtElement:
    """Left multiplication by e_j."""
    return wedge(ExtElement.basis(x.N, j, dual=x.dual), x)


def hat_involution(x: ExtElement) -> ExtElement:
    out = {}
    for m, c in x.terms.items():
        r = degree(m)
        out[m] = -c if (r * (r - 1) // 2) & 1 else c
    return ExtElement(x.N, out, x.dual)


def ba_form(s: ExtElement, t: ExtElement):
    """det(hat(s) ^ t)."""
    return det_pairing(hat_involution(s), t)


def dual_pairing(f: ExtElement, x: ExtElement):
    """Value of a dual element on a primal one; e^I(e_J) is 1 if I = J else 0."""
    if not f.dual or x.dual:
        raise ValueError("expected (dual, primal)")
    if f.N != x.N:
        raise ValueError("ground dimension mismatch")
    return sum((c * x.terms[m] for m, c in f.terms.items() if m in x.terms), ZERO)


def sign_parity_table(N: int) -> dict:
    """Sign s_i with phi_{N-i}(phi_i(e_I)) = s_i e_I (dual read back as primal)."""
    table = {}
    for i in range(N + 1):
        signs = set()
        for m in masks_of_degree(N, i):
            once = phi(ExtElement(N, {m: ONE}), N)
            back = phi(ExtElement(N, once.terms), N)
            (mm, c), = back.terms.items()
            if mm != m:
                raise AssertionError("phi does not return to the same monomial")
            signs.add(int(c))
        if len(signs) != 1:
            raise AssertionError(f"phi composite sign not uniform in degree {i}")
        table[i] = signs.pop()
    return table

