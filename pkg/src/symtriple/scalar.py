"""Exact scalars: rationals, Gaussian rationals and rational quaternions.

Rationals are ``gmpy2.mpq`` values. The two helper rings exist only to
build complex and quaternionic models before they are rewritten over the
rationals with :func:`realify_complex` and :func:`realify_quaternion`.
"""

from __future__ import annotations

from gmpy2 import mpq

Rational = mpq

ZERO = mpq(0)
ONE = mpq(1)


def Q(value, den=None) -> mpq:
    """Coerce an int, string ``"p/q"``, Fraction or mpq into a rational."""
    if den is not None:
        return mpq(value, den)
    if isinstance(value, str):
        return mpq(value.strip())
    return mpq(value)


def format_rational(x) -> str:
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _rat(x) -> mpq:
    return x if type(x) is type(ZERO) else mpq(x)


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _rat(re))
        object.__setattr__(self, "im", _rat(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return cls(x, 0)

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            return GaussianRational(self.re + other, self.im)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            return GaussianRational(self.re * other, self.im * other)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def norm(self) -> mpq:
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        try:
            return self.im == 0 and self.re == other
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({format_rational(self.re)}, {format_rational(self.im)})"


I = GaussianRational(0, 1)


class RationalQuaternion:
    """a + b i + c j + d k with i j = k."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        for name, v in zip(self.__slots__, (a, b, c, d)):
            object.__setattr__(self, name, _rat(v))

    def __setattr__(self, name, value):
        raise AttributeError("RationalQuaternion is immutable")

    @classmethod
    def coerce(cls, x) -> "RationalQuaternion":
        if isinstance(x, RationalQuaternion):
            return x
        if isinstance(x, GaussianRational):
            return cls(x.re, x.im)
        return cls(x)

    @property
    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other):
        o = RationalQuaternion.coerce(other)
        return RationalQuaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return RationalQuaternion(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        return self + (-RationalQuaternion.coerce(other))

    def __rsub__(self, other):
        return RationalQuaternion.coerce(other) - self

    def __mul__(self, other):
        a1, b1, c1, d1 = self.coeffs
        a2, b2, c2, d2 = RationalQuaternion.coerce(other).coeffs
        return RationalQuaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        return RationalQuaternion.coerce(other) * self

    def conj(self):
        return RationalQuaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> mpq:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return RationalQuaternion(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def real(self) -> mpq:
        return self.a

    def __eq__(self, other):
        try:
            o = RationalQuaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs) if any(self.coeffs[1:]) else hash(self.a)

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return "RationalQuaternion({})".format(", ".join(format_rational(x) for x in self.coeffs))


QI = RationalQuaternion(0, 1, 0, 0)
QJ = RationalQuaternion(0, 0, 1, 0)
QK = RationalQuaternion(0, 0, 0, 1)


def realify_complex(v, n=None) -> list:
    """Coordinates of a complex vector in the basis (e1, i e1, e2, i e2, ...)."""
    n = len(v) if n is None else n
    if len(v) != n:
        raise ValueError(f"expected {n} components, got {len(v)}")
    out = []
    for z in v:
        z = GaussianRational.coerce(z)
        out += [z.re, z.im]
    return out


def complexify(coords) -> list:
    """Inverse of :func:`realify_complex`."""
    if len(coords) % 2:
        raise ValueError("odd length")
    return [GaussianRational(coords[2 * k], coords[2 * k + 1]) for k in range(len(coords) // 2)]


def realify_quaternion(v, n=None) -> list:
    """Coordinates of a right quaternionic vector in (e1, e1 i, e1 j, e1 k, ...)."""
    n = len(v) if n is None else n
    if len(v) != n:
        raise ValueError(f"expected {n} components, got {len(v)}")
    out = []
    for q in v:
        out += list(RationalQuaternion.coerce(q).coeffs)
    return out


def quaternify(coords) -> list:
    if len(coords) % 4:
        raise ValueError("length not divisible by 4")
    return [RationalQuaternion(*coords[4 * k:4 * k + 4]) for k in range(len(coords) // 4)]


def complex_unit_block(n) -> list:
    """Matrix (list of rows) of multiplication by i on realified C^n."""
    m = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        m[2 * k][2 * k + 1] = mpq(-1)
        m[2 * k + 1][2 * k] = ONE
    return m


def quaternion_right_block(unit: RationalQuaternion, n) -> list:
    """Matrix of right multiplication by ``unit`` on realified H^n."""
    basis = [RationalQuaternion(1), QI, QJ, QK]
    m = [[ZERO] * (4 * n) for _ in range(4 * n)]
    for k in range(n):
        for col, e in enumerate(basis):
            image = (e * unit).coeffs
            for row in range(4):
                m[4 * k + row][4 * k + col] = image[row]
    return m
