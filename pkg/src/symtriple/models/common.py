"""Shared helpers for the model constructors."""

from __future__ import annotations

from gmpy2 import mpq

from ..linalg import ALTERNATING, BilinearForm, Matrix
from ..scalar import GaussianRational, RationalQuaternion
from ..sts import TripleSystem


def assert_rational(values, where=""):
    """Every coefficient must have landed in Q after realification."""
    for v in values:
        if isinstance(v, GaussianRational) and v.im:
            raise ValueError(f"non-real coefficient {v} {where}")
        if isinstance(v, RationalQuaternion) and any(v.coeffs[1:]):
            raise ValueError(f"non-real coefficient {v} {where}")


def to_rational(v) -> mpq:
    if isinstance(v, GaussianRational):
        assert_rational([v])
        return v.re
    if isinstance(v, RationalQuaternion):
        assert_rational([v])
        return v.a
    return mpq(v)


def sparse(values) -> dict:
    return {k: mpq(x) for k, x in enumerate(values) if x}


def system_from_functions(n, form, product, label=None) -> TripleSystem:
    """Tabulate ``form(i, j)`` and ``product(i, j, k)`` (a sparse vector) on basis indices."""
    gram = {}
    for i in range(n):
        for j in range(n):
            v = to_rational(form(i, j))
            if v:
                gram[(i, j)] = v
    omega = BilinearForm(n, Matrix(n, n, gram), ALTERNATING)
    trip = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = product(i, j, k)
                if v:
                    trip[(i, j, k)] = {l: to_rational(x) for l, x in v.items() if x}
    return TripleSystem(n, omega, trip, label)
