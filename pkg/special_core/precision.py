"""
Scalaire double-double (PrecisionScalar) utilisé par les oracles.

Une valeur est la somme non évaluée hi + lo de deux doubles avec
|lo| <= ulp(hi)/2, soit ~31 chiffres significatifs. Les transformations
sans erreur (two-sum de Knuth, two-prod par FMA ou découpage de Dekker)
sont les briques de toutes les opérations.
"""

import math
from functools import total_ordering

import mpmath

_SPLITTER = 134217729.0  # 2^27 + 1


def _split(a):
    c = _SPLITTER * a
    abig = c - a
    ahi = c - abig
    return ahi, a - ahi


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a, b):
    # |a| >= |b|
    s = a + b
    return s, b - (s - a)


if hasattr(math, 'fma'):
    def _two_prod(a, b):
        p = a * b
        return p, math.fma(a, b, -p)
else:
    def _two_prod(a, b):
        p = a * b
        ahi, alo = _split(a)
        bhi, blo = _split(b)
        return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


@total_ordering
class DoubleDouble:
    """Nombre double-double immuable"""

    __slots__ = ('hi', 'lo')

    def __init__(self, hi=0.0, lo=0.0):
        hi, lo = _quick_two_sum(float(hi), float(lo)) if abs(hi) >= abs(lo) else _two_sum(float(hi), float(lo))
        object.__setattr__(self, 'hi', hi)
        object.__setattr__(self, 'lo', lo)

    def __setattr__(self, name, value):
        raise AttributeError("DoubleDouble est immuable")

    # construction ---------------------------------------------------------
    @classmethod
    def coerce(cls, value):
        if isinstance(value, DoubleDouble):
            return value
        if isinstance(value, int) and abs(value) > 2 ** 53:
            hi = float(value)
            return cls(hi, float(value - int(hi)))
        if isinstance(value, mpmath.mpf):
            return cls.from_mpf(value)
        return cls(float(value), 0.0)

    @classmethod
    def from_mpf(cls, value):
        with mpmath.workprec(160):
            value = mpmath.mpf(value)
            hi = float(value)
            return cls(hi, float(value - hi))

    def to_mpf(self):
        with mpmath.workprec(160):
            return mpmath.mpf(self.hi) + mpmath.mpf(self.lo)

    # arithmétique ---------------------------------------------------------
    def __add__(self, other):
        other = DoubleDouble.coerce(other)
        s, e = _two_sum(self.hi, other.hi)
        t, f = _two_sum(self.lo, other.lo)
        e += t
        s, e = _quick_two_sum(s, e)
        e += f
        return DoubleDouble(*_quick_two_sum(s, e))

    __radd__ = __add__

    def __neg__(self):
        return DoubleDouble(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-DoubleDouble.coerce(other))

    def __rsub__(self, other):
        return DoubleDouble.coerce(other) - self

    def __mul__(self, other):
        other = DoubleDouble.coerce(other)
        p, e = _two_prod(self.hi, other.hi)
        e += self.hi * other.lo + self.lo * other.hi
        return DoubleDouble(*_quick_two_sum(p, e))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = DoubleDouble.coerce(other)
        if other.hi == 0.0:
            raise ZeroDivisionError("division d'un double-double par zéro")
        q1 = self.hi / other.hi
        r = self - other * q1
        q2 = r.hi / other.hi
        r = r - other * q2
        q3 = r.hi / other.hi
        q1, q2 = _quick_two_sum(q1, q2)
        return DoubleDouble(q1, q2) + q3

    def __rtruediv__(self, other):
        return DoubleDouble.coerce(other) / self

    def __abs__(self):
        return -self if self.hi < 0 else self

    # comparaisons et conversions -----------------------------------------
    def __eq__(self, other):
        try:
            other = DoubleDouble.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.hi == other.hi and self.lo == other.lo

    def __lt__(self, other):
        other = DoubleDouble.coerce(other)
        return self.hi < other.hi or (self.hi == other.hi and self.lo < other.lo)

    def __hash__(self):
        return hash((self.hi, self.lo))

    def __float__(self):
        return self.hi + self.lo

    def __bool__(self):
        return self.hi != 0.0

    def __repr__(self):
        return f"DoubleDouble(hi={self.hi:.17g}, lo={self.lo:.17g})"

    def is_finite(self):
        return math.isfinite(self.hi) and math.isfinite(self.lo)
