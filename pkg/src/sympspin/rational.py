"""Exact complex numbers with rational real and imaginary parts.

Every coefficient in the package is a :class:`GaussianRational`.  The parts
are arbitrary-precision rationals (gmpy2.mpq when available, otherwise
fractions.Fraction), which keep themselves in canonical reduced form with
positive denominator, so a value has exactly one representation.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is normally present
    _Q = Fraction


def rational(num, den=None):
    """Build the underlying exact rational scalar type."""
    if den is None:
        return _Q(num)
    return _Q(num, den)


class GaussianRational:
    """An element of Q(i), immutable and exact."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _Q(re))
        object.__setattr__(self, "im", _Q(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other):
        return _coerce(other) / self

    # -- structure --------------------------------------------------------

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) or type(other) is type(_Q(0)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(Fraction(self.re.numerator, self.re.denominator))
        return hash((Fraction(self.re.numerator, self.re.denominator),
                     Fraction(self.im.numerator, self.im.denominator)))

    def __repr__(self):
        return "GaussianRational(%s, %s)" % (self.re, self.im)

    def __str__(self):
        return format_coefficient(self)


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(value)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def _format_rational(r):
    if r.denominator == 1:
        return str(r.numerator)
    return "%s/%s" % (r.numerator, r.denominator)


def format_coefficient(c):
    """Canonical text form: ``a``, ``a/b``, ``ci`` or ``(a/b+c/d i)``."""
    if c.im == 0:
        return _format_rational(c.re)
    if c.re == 0:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return _format_rational(c.im) + "i"
    sign = "+" if c.im > 0 else "-"
    im_abs = abs(c.im)
    im_text = "" if im_abs == 1 else _format_rational(im_abs)
    return "(%s%s%si)" % (_format_rational(c.re), sign, im_text)
