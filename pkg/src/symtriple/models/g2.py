"""Binary cubics and the transvectant model of dimension 4."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from gmpy2 import mpq

from ..scalar import ZERO
from ..sts import ModelLabel, TripleSystem, Z4Grading
from .common import system_from_functions

G2_FACTOR = 6


@dataclass(frozen=True)
class Poly2:
    """Binary form of degree ``len(coeffs) - 1``; coeffs[i] multiplies X^(n-i) Y^i."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(mpq(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def monomial(cls, degree, y_power, coeff=1):
        c = [0] * (degree + 1)
        c[y_power] = coeff
        return cls(tuple(c))

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Poly2(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c):
        return Poly2(tuple(c * a for a in self.coeffs))

    def derivative(self, dx, dy) -> "Poly2":
        """Partial derivative d^dx/dX^dx d^dy/dY^dy."""
        n = self.degree
        if dx + dy > n:
            return Poly2((ZERO,))
        out = []
        for i in range(n - dx - dy + 1):
            j = i + dy          # Y power before differentiating
            xp = n - j          # X power before differentiating
            c = self.coeffs[j]
            c *= factorial(xp) // factorial(xp - dx) if xp >= dx else 0
            c *= factorial(j) // factorial(j - dy)
            out.append(c)
        return Poly2(tuple(out))

    def __mul__(self, other):
        out = [ZERO] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly2(tuple(out))

    def is_zero(self):
        return not any(self.coeffs)


def transvect(f: Poly2, g: Poly2, q: int) -> Poly2:
    """q-th transvectant of two binary forms."""
    n, m = f.degree, g.degree
    if q < 0 or q > min(n, m):
        raise ValueError(f"transvectant order {q} out of range for degrees {n}, {m}")
    total = Poly2((ZERO,) * (n + m - 2 * q + 1))
    for i in range(q + 1):
        term = f.derivative(q - i, i) * g.derivative(i, q - i)
        total = total + term.scale((-1) ** i * comb(q, i))
    scale = mpq(factorial(n - q), factorial(n)) * mpq(factorial(m - q), factorial(m))
    return total.scale(scale)


def g2_product_family(i, j, k):
    """((e_i, e_j)_2, e_k)_1 on the monomial basis of cubics (no factor)."""
    e = [Poly2.monomial(3, r) for r in range(4)]
    return transvect(transvect(e[i], e[j], 2), e[k], 1).coeffs


def build_g2(factor=G2_FACTOR) -> TripleSystem:
    """(f|g) = (f,g)_3 and [f,g,h] = factor ((f,g)_2, h)_1 on binary cubics."""
    e = [Poly2.monomial(3, r) for r in range(4)]

    def form(i, j):
        return transvect(e[i], e[j], 3).coeffs[0]

    def product(i, j, k):
        c = transvect(transvect(e[i], e[j], 2), e[k], 1).coeffs
        return {l: factor * x for l, x in enumerate(c) if x}

    return system_from_functions(4, form, product, ModelLabel("g2"))


def g2_grading():
    # weight of X^(3-i) Y^i is 3 - 2i; degree one collects weights -3 and 1
    return Z4Grading((1, 3), (0, 2))
