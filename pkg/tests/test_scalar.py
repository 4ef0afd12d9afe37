from gmpy2 import mpq
from hypothesis import given

from symtriple.scalar import (
    I, QI, QJ, QK, GaussianRational, Q, RationalQuaternion, complex_unit_block, complexify,
    format_rational, quaternify, quaternion_right_block, realify_complex, realify_quaternion,
)
from strategies import gaussians, quaternions, rationals


def test_rationals_are_reduced_and_exact():
    x = Q("6/4")
    assert (x.numerator, x.denominator) == (3, 2)
    assert Q(1, 3) + Q(1, 6) == Q(1, 2)
    assert format_rational(Q(-4, 6)) == "-2/3"
    assert format_rational(Q(5)) == "5"


def test_quaternion_units():
    assert QI * QJ == QK
    assert QJ * QI == -QK
    assert QI * QI == RationalQuaternion(-1)
    assert QJ * QK == QI


def test_realify_complex_examples():
    assert realify_complex([GaussianRational(1)], 1) == [1, 0]
    assert realify_complex([I], 1) == [0, 1]
    assert realify_complex([GaussianRational(2, 3), GaussianRational(-1)], 2) == [2, 3, -1, 0]


def test_realify_quaternion_examples():
    assert realify_quaternion([RationalQuaternion(1)], 1) == [1, 0, 0, 0]
    assert realify_quaternion([QJ], 1) == [0, 0, 1, 0]
    assert realify_quaternion([QI - QK], 1) == [0, 1, 0, -1]


@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).conj() == a.conj() * b.conj()
    assert a.conj().conj() == a
    assert (a * a.conj()).re == a.norm() >= 0
    assert (a.norm() == 0) == (not a)


@given(quaternions, quaternions, quaternions)
def test_quaternion_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * b).conj() == b.conj() * a.conj()
    assert (a * b).norm() == a.norm() * b.norm()
    if a:
        assert a * a.inverse() == RationalQuaternion(1)


@given(gaussians, gaussians)
def test_realify_complex_roundtrip_and_i_block(a, b):
    v = [a, b]
    coords = realify_complex(v)
    assert complexify(coords) == v
    block = complex_unit_block(2)
    rotated = [sum(block[r][c] * coords[c] for c in range(4)) for r in range(4)]
    assert rotated == realify_complex([I * a, I * b])


@given(quaternions, rationals)
def test_realify_quaternion_right_blocks(q, s):
    coords = realify_quaternion([q])
    assert quaternify(coords) == [q]
    for unit in (QI, QJ, QK):
        block = quaternion_right_block(unit, 1)
        image = [sum(block[r][c] * coords[c] for c in range(4)) for r in range(4)]
        assert image == realify_quaternion([q * unit])
    assert realify_quaternion([q * RationalQuaternion(s)]) == [x * s for x in coords]
