"""Hand-checkable probe computations shared by the model and acceptance tests."""

from symtriple.clifford import EVEN_BASIS, RANK, SpinVector, half_spin_action, natural_sigma
from symtriple.exterior import ExtElement, indices_of, mask_of
from symtriple.linalg import Matrix
from symtriple.models import build
from symtriple.models.e8 import HALF_T, MASKS2, dual, primal
from symtriple.models.realforms import e6_gamma_matrix, e6_real_form, e7_so102_form, e7_sostar_form, e8_real_form
from symtriple.models.split import MASKS3, f4_element
from symtriple.models.tracesolve import exterior_action
from symtriple.scalar import GaussianRational
from symtriple.sts import ModelLabel

POS3 = {m: k for k, m in enumerate(MASKS3)}
POS_EVEN = {m: k for k, m in enumerate(EVEN_BASIS)}


def m3(*idx):
    return POS3[mask_of(idx)]


def even(*idx):
    return POS_EVEN[mask_of(idx)]


def f4_probe() -> bool:
    """d_{x,z}.y = -3y for x = y = u1u2u3, z = v1v2v3, with (x|z) = 1, (x|y) = 0."""
    T = build(ModelLabel("f4"))
    x = f4_element({mask_of((1, 2, 3)): 1})
    z = f4_element({mask_of((4, 5, 6)): 1})
    dy = T.product(x, z, x)
    return dy == {k: -3 * v for k, v in x.items()} and T.form(x, z) == 1 and T.form(x, x) == 0


def e6_probe() -> bool:
    T = build(ModelLabel("e6split"))
    cols = T.d_columns({m3(1, 2, 3): 1}, {m3(4, 5, 6): 1})
    got = Matrix(T.n, T.n, {(l, k): v for k, c in cols.items() for l, v in c.items()})
    return got == exterior_action(Matrix.diagonal([-1, -1, -1, 1, 1, 1]), 6, MASKS3)


def e7_probe() -> bool:
    total = Matrix.zeros(2 * RANK)
    for i in range(RANK):
        total = total + natural_sigma({RANK + i: 1}, {i: 1})
    one = ExtElement.one(RANK)
    return half_spin_action(total, SpinVector.even(one)).element == -3 * one


def e8_probe() -> bool:
    T = build(ModelLabel("e8split"))
    x = {primal(1, 2): 1}
    return T.product(x, {dual(1, 2): 1}, x) == {primal(1, 2): -3}


def e8_nonsplit_probe() -> bool:
    """x = e12 + e^12 lies in the real form and d_{x,x} acts as diag(-3,-3,1,...,1)."""
    T = build(ModelLabel("e8split"))
    x = {primal(1, 2): 1, dual(1, 2): 1}
    weights = [-3, -3, 1, 1, 1, 1, 1, 1]
    expected = {}
    for k, m in enumerate(MASKS2):
        w = sum(weights[i - 1] for i in indices_of(m))
        if w:
            expected[k] = {k: w}
            expected[HALF_T + k] = {HALF_T + k: -w}
    fixed = e8_real_form().coordinates({2 * k: v for k, v in x.items()})
    return T.d_columns(x, x) == expected and bool(fixed)


def e6_nonsplit_probes(p=3):
    """(Gamma(e123) = -e456, complex pairing of e123 - e456 with i(e123 + e456))."""
    gamma = e6_gamma_matrix(p).apply({m3(1, 2, 3): 1}) == {m3(4, 5, 6): -1}
    rf = e6_real_form(p)
    x = {2 * m3(1, 2, 3): 1, 2 * m3(4, 5, 6): -1}
    y = {2 * m3(1, 2, 3) + 1: 1, 2 * m3(4, 5, 6) + 1: 1}
    rf.coordinates(x), rf.coordinates(y)
    return gamma, rf.complex_form(x, y)


def e7_so102_probes():
    """(Gamma(1) = e1234, pairing of 1 + e1234 with e56 + e123456)."""
    rf = e7_so102_form()
    gamma = rf.A.apply({even(): 1}) == {even(1, 2, 3, 4): 1}
    x = {2 * even(): 1, 2 * even(1, 2, 3, 4): 1}
    y = {2 * even(5, 6): 1, 2 * even(1, 2, 3, 4, 5, 6): 1}
    rf.coordinates(x), rf.coordinates(y)
    return gamma, rf.complex_form(x, y)


def e7_sostar_probes():
    """(e123456 fixed, pairing of 1 with e123456)."""
    rf = e7_sostar_form()
    top = {2 * even(1, 2, 3, 4, 5, 6): 1}
    fixed = bool(rf.coordinates(top)) and bool(rf.coordinates({2 * even(): 1}))
    return fixed, rf.complex_form({2 * even(): 1}, top)


TWO_I = GaussianRational(0, 2)
