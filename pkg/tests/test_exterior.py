from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symtriple.exterior import (
    ExtElement, ba_form, complement, contract, degree, det_pairing, hat_involution, mask_of,
    masks_of_degree, merge_sign, phi, phi_inverse, sign_parity_table, wedge,
)


def e(N, *idx, dual=False):
    return ExtElement.basis(N, *idx, dual=dual)


def permutation_sign(seq):
    inv = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inv & 1 else 1


def test_wedge_examples():
    assert wedge(e(6, 1, 2), e(6, 3, 4)) == e(6, 1, 2, 3, 4)
    assert wedge(e(6, 3, 4), e(6, 1, 2)) == e(6, 1, 2, 3, 4)
    assert wedge(e(6, 3, 4, 5, 6), e(6, 1, 2)) == e(6, 1, 2, 3, 4, 5, 6)
    assert not wedge(e(6, 1), e(6, 1, 2))
    with pytest.raises(ValueError):
        wedge(e(6, 1), e(8, 2))


def test_det_pairing_examples():
    assert det_pairing(e(6, 1, 2, 3), e(6, 4, 5, 6)) == 1
    assert det_pairing(e(6, 1, 2, 3), e(6, 1, 2, 3)) == 0
    assert det_pairing(e(8, 1, 2), e(8, 3, 4, 5, 6, 7, 8)) == 1
    assert det_pairing(e(6, 4, 5, 6), e(6, 1, 2, 3)) == -1


def test_phi_examples():
    assert phi(e(6, 1, 2, 3)) == e(6, 4, 5, 6, dual=True)
    assert phi(e(8, 5, 6, 7, 8)) == e(8, 1, 2, 3, 4, dual=True)
    assert phi(ExtElement.one(8)) == e(8, *range(1, 9), dual=True)
    assert phi_inverse(phi(e(8, 2, 5, 7))) == e(8, 2, 5, 7)
    with pytest.raises(ValueError):
        phi(e(6, 1) + e(6, 1, 2))


def test_contract_examples():
    assert contract(1, e(6, 1, 2)) == e(6, 2)
    assert contract(2, e(6, 1, 2)) == -e(6, 1)
    assert not contract(3, e(6, 1, 2))


def test_hat_and_ba_examples():
    assert hat_involution(ExtElement.one(6)) == ExtElement.one(6)
    assert hat_involution(e(6, 1, 2)) == -e(6, 1, 2)
    assert hat_involution(e(6, 1, 2, 3, 4)) == e(6, 1, 2, 3, 4)
    assert ba_form(ExtElement.one(6), e(6, *range(1, 7))) == 1
    assert ba_form(e(6, 1, 2, 3, 4), e(6, 5, 6)) == 1
    assert ba_form(e(6, 1, 2), e(6, 1, 2)) == 0


def test_merge_sign_matches_sorting():
    for I in range(64):
        for J in range(64):
            if I & J:
                continue
            seq = [i for i in range(1, 7) if I >> (i - 1) & 1] + [j for j in range(1, 7) if J >> (j - 1) & 1]
            assert merge_sign(I, J) == permutation_sign(seq)


def test_sign_associativity_exhaustive():
    for I in range(64):
        for J in range(64):
            if I & J:
                continue
            rest = complement(I | J, 6)
            K = rest
            while True:
                lhs = merge_sign(I, J) * merge_sign(I | J, K)
                rhs = merge_sign(I, J | K) * merge_sign(J, K)
                assert lhs == rhs
                if K == 0:
                    break
                K = (K - 1) & rest


def test_phi_composite_signs():
    # Phi_{N-i} Phi_i = (-1)^{i(N-i)}
    assert sign_parity_table(6) == {0: 1, 1: -1, 2: 1, 3: -1, 4: 1, 5: -1, 6: 1}
    assert sign_parity_table(8) == {i: (-1) ** (i * (8 - i)) for i in range(9)}


def test_ba_alternating_and_parity_orthogonal():
    even = [m for r in (0, 2, 4, 6) for m in masks_of_degree(6, r)]
    odd = [m for r in (1, 3, 5) for m in masks_of_degree(6, r)]
    for a in even:
        x = ExtElement(6, {a: 1})
        assert ba_form(x, x) == 0
        for b in even:
            assert ba_form(x, ExtElement(6, {b: 1})) == -ba_form(ExtElement(6, {b: 1}), x)
        for b in odd:
            assert ba_form(x, ExtElement(6, {b: 1})) == 0


masks6 = st.integers(0, 63)


@given(masks6, masks6)
def test_graded_commutativity(a, b):
    x, y = ExtElement(6, {a: 1}), ExtElement(6, {b: 1})
    assert wedge(x, y) == (-1) ** (degree(a) * degree(b)) * wedge(y, x)


@given(masks6, masks6, masks6)
def test_wedge_associative(a, b, c):
    x, y, z = (ExtElement(6, {m: 1}) for m in (a, b, c))
    assert wedge(wedge(x, y), z) == wedge(x, wedge(y, z))


@given(st.integers(1, 6), masks6, masks6)
def test_contract_is_superderivation(j, a, b):
    s, t = ExtElement(6, {a: 1}), ExtElement(6, {b: 1})
    lhs = contract(j, wedge(s, t))
    rhs = wedge(contract(j, s), t) + (-1) ** degree(a) * wedge(s, contract(j, t))
    assert lhs == rhs
    assert not contract(j, contract(j, s))


def test_mask_of_rejects_bad_indices():
    with pytest.raises(ValueError):
        mask_of([1, 1])
    with pytest.raises(ValueError):
        mask_of([9])
    assert [mask_of(p) for p in permutations((1, 2))] == [3, 3]
