import pytest
from gmpy2 import mpq

from symtriple.linalg import ALTERNATING, Matrix, invariant_bilinear_space
from symtriple.models import build, make_label, z4_grading_for
from symtriple.models.classical import build_symplectic
from symtriple.models.common import system_from_functions
from symtriple.models.split import MASKS3, f4_element
from symtriple.exterior import mask_of
from symtriple.scalar import ONE, ZERO
from symtriple.sts import (
    ModelLabel, TripleSystem, Z4Grading, apply_isomorphism, calibrate_alpha, check_axioms,
    check_z4_grading, d_map, inder_span, is_isomorphism, shift,
)
from symtriple.linalg import vec_add


def symplectic_mutant(n):
    T = build_symplectic(n)

    def product(i, j, k):
        out = {}
        vec_add(out, {j: ONE}, T.form({i: 1}, {k: 1}))
        vec_add(out, {i: ONE}, -T.form({j: 1}, {k: 1}))
        return out

    return system_from_functions(2 * n, lambda i, j: T.omega.gram[i, j], product)


def test_axioms_pass_on_small_models():
    for label in (make_label("symplectic", n=2), make_label("g2")):
        rep = check_axioms(build(label), mode="exhaustive")
        assert rep.passed, rep.summary()
        assert rep.seed is None


def test_mutant_breaks_form_identity():
    rep = check_axioms(symplectic_mutant(2), mode="exhaustive")
    assert not rep.passed
    assert rep.checks["form_identity"][0] is False
    assert "FAIL" in rep.summary()


def test_sampled_mode_records_seed():
    rep = check_axioms(build(make_label("symplectic", n=2)), mode="sampled", seed=7, count=50)
    assert rep.passed and rep.seed == 7 and rep.samples == 50
    with pytest.raises(ValueError):
        check_axioms(build(make_label("symplectic", n=1)), mode="bogus")


def test_d_map_examples():
    T = build(make_label("symplectic", n=1))
    assert d_map(T, {0: 1}, {1: 1}) == Matrix.diagonal([-1, 1])
    assert d_map(T, {}, {1: 1}) == Matrix.zeros(2)
    F = build(ModelLabel("f4"))
    x = f4_element({mask_of((1, 2, 3)): 1})
    assert d_map(F, x, x) == Matrix.zeros(F.n)


def test_inder_dimensions():
    assert inder_span(build(make_label("symplectic", n=1))).dim == 3
    assert inder_span(build(make_label("symplectic", n=2))).dim == 10
    assert inder_span(build(make_label("special", n=1))).dim == 1
    assert inder_span(build(ModelLabel("g2"))).dim == 3


def test_shift_examples():
    T = build(make_label("symplectic", n=2))
    assert shift(T, 1) == T
    assert shift(shift(T, -1), -1) == T
    S = shift(T, -1)
    assert S.omega.gram == T.omega.gram.scale(-1)
    assert all(S.trip[k] == {l: -v for l, v in vec.items()} for k, vec in T.trip.items())
    with pytest.raises(ValueError):
        shift(T, 0)


def test_shift_preserves_inder_span():
    T = build(make_label("orthogonal", p=2, q=1))
    a, b = inder_span(T), inder_span(shift(T, -1))
    assert a.pivots == b.pivots and a.rep == b.rep


def test_isomorphism_examples():
    T = build(make_label("special", n=2))
    ident = Matrix.identity(T.n)
    assert apply_isomorphism(T, ident) == T
    assert is_isomorphism(T, T, ident)
    assert is_isomorphism(T, T, ident.scale(-1))
    g = z4_grading_for(T.label)
    assert is_isomorphism(T, shift(T, -1), g.sign_map(T.n))
    assert not is_isomorphism(T, T, g.sign_map(T.n))


def test_apply_isomorphism_transports_structure():
    T = build(make_label("unitarian", p=1, q=1))
    f = Matrix.identity(T.n) + Matrix(T.n, T.n, {(0, 1): mpq(2), (3, 2): mpq(-1, 3)})
    T2 = apply_isomorphism(T, f)
    assert is_isomorphism(T, T2, f)
    assert check_axioms(T2, mode="exhaustive").passed


def test_z4_grading_examples():
    for label in (make_label("special", n=2), make_label("symplectic", n=2)):
        T = build(label)
        assert check_z4_grading(T, z4_grading_for(label))
    T = build(make_label("special", n=2))
    assert not check_z4_grading(T, Z4Grading((0, 2), (1, 3)))
    with pytest.raises(ValueError):
        Z4Grading((0, 1), (1, 2))


def test_calibrate_alpha():
    F = build(ModelLabel("f4"))

    def fam(i, j):
        return F.dcols().get((i, j), {})

    assert calibrate_alpha(F.omega, fam) == 1
    assert calibrate_alpha(F.omega.gram.scale(2), fam) == mpq(1, 2)
    with pytest.raises(ValueError):
        calibrate_alpha(F.omega, lambda i, j: {k: {l: 2 * v for l, v in c.items()} if (i + j) % 2 else c
                                                for k, c in fam(i, j).items()})


def test_invariant_form_is_unique():
    for label in (make_label("special", n=2), make_label("quaternionic", n=1), ModelLabel("g2")):
        L = inder_span(build(label))
        dim, _ = invariant_bilinear_space(L.rep, ALTERNATING)
        assert dim == 1


def test_bad_labels():
    with pytest.raises(ValueError):
        ModelLabel.of("orthogonal", p=1, q=1)
    with pytest.raises(ValueError):
        ModelLabel("e9")
    with pytest.raises(ValueError):
        make_label("e6nonsplit", p=4)


def test_omega_must_be_alternating():
    with pytest.raises(ValueError):
        from symtriple.linalg import BilinearForm, SYMMETRIC
        TripleSystem(2, BilinearForm(2, Matrix.identity(2), SYMMETRIC), {})
