import pytest

from symtriple.envelope import (
    E, F, H, build_envelope, check_jacobi, classification_row, computed_row, jacobiator, killing,
    worker_count,
)
from symtriple.models import build, make_label
from symtriple.sts import ModelLabel


def envelope(family, **params):
    return build_envelope(build(make_label(family, **params)))


def test_dimensions():
    assert envelope("symplectic", n=1).algebra.dim == 10
    assert envelope("g2").algebra.dim == 14
    env = envelope("special", n=2)
    assert env.algebra.dim == 3 + 4 + 8
    assert [len(b) for b in env.blocks()] == [3, 4, 8]
    assert env.odd_index(1, 0) == 3 + 4 + 4


def test_jacobi_and_mutation():
    L = envelope("symplectic", n=1).algebra
    rep = check_jacobi(L)
    assert rep.passed and rep.mode == "exhaustive" and rep.checked == 120
    bad = L.with_constant(H, E, E, -2).with_constant(E, H, E, 2)
    rep = check_jacobi(bad)
    assert not rep.passed and rep.counterexample is not None
    assert jacobiator(bad, *rep.counterexample)
    assert "FAIL" in rep.summary()
    lopsided = L.with_constant(H, E, E, -2)
    assert check_jacobi(lopsided).mode == "antisymmetry"


def test_sampled_jacobi_is_reproducible():
    L = envelope("g2").algebra
    a = check_jacobi(L, mode="sampled", seed=3, count=500)
    b = check_jacobi(L, mode="sampled", seed=3, count=500)
    assert a == b and a.passed and a.seed == 3


def test_f4_envelope_jacobi_exhaustive():
    env = build_envelope(build(ModelLabel("f4")))
    assert env.algebra.dim == 52
    rep = check_jacobi(env.algebra)
    assert rep.passed and rep.mode == "exhaustive" and rep.checked == 22100


def test_killing_structure():
    for family, params in (("symplectic", {"n": 1}), ("special", {"n": 2}), ("g2", {}),
                           ("unitarian", {"p": 2, "q": 1}), ("orthogonal", {"p": 3, "q": 1})):
        env = envelope(family, **params)
        rep = killing(env)
        n = env.n
        assert rep.kappa_hh == 8 + 2 * n
        assert rep.even_odd_orthogonal and rep.sp_inder_orthogonal and rep.nondegenerate
        assert rep.signature_odd == 0
        assert rep.odd_factor == -(8 + 2 * n)
        assert rep.signature_sp == 1
        assert computed_row(env.triple.label, env, rep).match


def test_sp_and_inder_are_commuting_ideals():
    L = envelope("quaternionic", n=1).algebra
    sp, ind, _ = (list(b) for b in envelope("quaternionic", n=1).blocks())
    assert all(not L.bracket_basis(i, j) for i in sp for j in ind)


def test_classification_rows():
    row = classification_row(make_label("unitarian", p=3, q=3))
    assert (row.envelope_name, row.signature_g) == ("su4,4", 1)
    assert classification_row(ModelLabel("e6su51")).signature_g == -14
    assert classification_row(ModelLabel("e8nonsplit")).signature_g == -24
    assert classification_row(ModelLabel("e8split")).envelope_dim == 248


def test_worker_count(monkeypatch):
    monkeypatch.setenv("STS_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("STS_THREADS", "zero")
    assert worker_count() == 1
    monkeypatch.delenv("STS_THREADS")
    assert worker_count() == 1


def test_bad_jacobi_mode():
    with pytest.raises(ValueError):
        check_jacobi(envelope("symplectic", n=1).algebra, mode="nope")
