"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

A :class:`Field` tag says which scalar type a matrix holds and whether
conjugation is complex conjugation (hermitian forms) or the identity.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Union


class Field(enum.Enum):
    Q = "Q"
    QI_HERMITIAN = "Q_i_hermitian"
    QI_BILINEAR = "Q_i_bilinear"

    @property
    def is_gaussian(self) -> bool:
        return self is not Field.Q


class GaussianRational:
    """``(re_num + im_num*i) / den`` with ``den > 0`` and the triple in lowest terms."""

    __slots__ = ("_re", "_im", "_den")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        den = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._set(re.numerator * (den // re.denominator),
                  im.numerator * (den // im.denominator), den)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._re, self._im, self._den = a, b, d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        obj = object.__new__(cls)
        if d < 0:
            a, b, d = -a, -b, -d
        obj._set(a, b, d)
        return obj

    @property
    def real(self) -> Fraction:
        return Fraction(self._re, self._den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._im, self._den)

    @property
    def parts(self) -> tuple[int, int, int]:
        return self._re, self._im, self._den

    def is_real(self) -> bool:
        return self._im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._re, -self._im, self._den)

    def norm(self) -> Fraction:
        return Fraction(self._re * self._re + self._im * self._im, self._den * self._den)

    def __bool__(self) -> bool:
        return self._re != 0 or self._im != 0

    def __neg__(self) -> "GaussianRational":
        return GaussianRational._raw(-self._re, -self._im, self._den)

    def __pos__(self) -> "GaussianRational":
        return self

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, d = self._re, self._im, self._den
        c, e, f = o._re, o._im, o._den
        if d == f:
            return GaussianRational._raw(a + c, b + e, d)
        return GaussianRational._raw(a * f + c * d, b * f + e * d, d * f)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, d = self._re, self._im, self._den
        c, e, f = o._re, o._im, o._den
        return GaussianRational._raw(a * c - b * e, a * e + b * c, d * f)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        c, e, f = o._re, o._im, o._den
        n = c * c + e * e
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        # 1/o = f (c - e i) / (c^2 + e^2)
        a, b, d = self._re, self._im, self._den
        return GaussianRational._raw((a * c + b * e) * f, (b * c - a * e) * f, d * n)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self._im == 0 and Fraction(self._re, self._den) == other
        return NotImplemented

    def __hash__(self):
        if self._im == 0:
            return hash(Fraction(self._re, self._den))
        return hash((self._re, self._im, self._den))

    def __repr__(self):
        return f"GaussianRational({self.real}, {self.imag})"

    def __str__(self):
        if self._im == 0:
            return str(self.real)
        return f"{self.real}{'+' if self._im > 0 else '-'}{abs(self.imag)}i"


Scalar = Union[Fraction, GaussianRational]

I = GaussianRational(0, 1)


def _coerce(x) -> GaussianRational | None:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        f = Fraction(x)
        return GaussianRational._raw(f.numerator, 0, f.denominator)
    return None


def to_scalar(x, field: Field) -> Scalar:
    """Coerce ``x`` into the canonical scalar type of ``field``."""
    if field is Field.Q:
        if isinstance(x, GaussianRational):
            if not x.is_real():
                raise ValueError(f"{x} is not rational")
            return x.real
        return Fraction(x)
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


def zero(field: Field) -> Scalar:
    return Fraction(0) if field is Field.Q else GaussianRational(0)


def one(field: Field) -> Scalar:
    return Fraction(1) if field is Field.Q else GaussianRational(1)


def conj(x: Scalar, field: Field) -> Scalar:
    if field is Field.QI_HERMITIAN:
        return x.conjugate()
    return x


def real_part(x: Scalar) -> Fraction:
    return x.real if isinstance(x, GaussianRational) else Fraction(x)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root in Q, or None."""
    from math import isqrt

    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def gaussian_sqrt(z: Scalar) -> GaussianRational | None:
    """Exact square root in Q(i), or None.

    For z = x + yi, a root a + bi has a^2 = (|z| + x)/2 and b^2 = (|z| - x)/2,
    so |z| must be rational first.
    """
    z = to_scalar(z, Field.QI_BILINEAR)
    if not z:
        return GaussianRational(0)
    x, y = z.real, z.imag
    modulus = rational_sqrt(x * x + y * y)
    if modulus is None:
        return None
    a = rational_sqrt((modulus + x) / 2)
    b = rational_sqrt((modulus - x) / 2)
    if a is None or b is None:
        return None
    if y < 0:
        b = -b
    root = GaussianRational(a, b)
    return root if root * root == z else None


def format_scalar(x: Scalar, field: Field):
    """JSON form: ``"a/b"`` for Q, ``{"re": "a/b", "im": "c/d"}`` for Q(i)."""

    def frac(f: Fraction) -> str:
        return f"{f.numerator}/{f.denominator}"

    if field is Field.Q:
        return frac(Fraction(x))
    x = to_scalar(x, field)
    return {"re": frac(x.real), "im": frac(x.imag)}


def parse_scalar(obj, field: Field) -> Scalar:
    if isinstance(obj, dict):
        if set(obj) - {"re", "im"}:
            raise ValueError(f"unexpected keys in scalar {obj!r}")
        value = GaussianRational(Fraction(str(obj.get("re", "0"))), Fraction(str(obj.get("im", "0"))))
        return to_scalar(value, field)
    if isinstance(obj, bool) or not isinstance(obj, (str, int)):
        raise ValueError(f"cannot parse scalar {obj!r}")
    return to_scalar(Fraction(str(obj).strip()), field)
