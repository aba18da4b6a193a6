"""Entiers et demi-entiers exacts, stockés par leur double"""

from fractions import Fraction
from functools import total_ordering

from special_core.exceptions import InvalidIndexError


@total_ordering
class HalfInt:
    """
    Valeur twice/2, twice entier.

    HalfInt.of accepte un int, un float, une Fraction ou une chaîne
    ('3/2', '-1', '2.5') ; toute autre valeur lève InvalidIndexError.
    """
    __slots__ = ('twice',)

    def __init__(self, twice: int):
        if isinstance(twice, bool) or not isinstance(twice, int):
            raise InvalidIndexError(f"HalfInt attend un entier (reçu {twice!r})")
        object.__setattr__(self, 'twice', twice)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt est immuable")

    @classmethod
    def of(cls, value) -> 'HalfInt':
        if isinstance(value, HalfInt):
            return value
        try:
            doubled = 2 * Fraction(value)
        except (TypeError, ValueError, ZeroDivisionError, OverflowError) as e:
            raise InvalidIndexError(f"{value!r} n'est pas un nombre") from e
        if doubled.denominator != 1:
            raise InvalidIndexError(f"{value!r} n'est ni entier ni demi-entier")
        return cls(int(doubled))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def as_int(self) -> int:
        if not self.is_integer:
            raise InvalidIndexError(f"{self} n'est pas entier")
        return self.twice // 2

    def __float__(self):
        return self.twice / 2

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __add__(self, other):
        other = HalfInt.of(other)
        return HalfInt(self.twice + other.twice)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-HalfInt.of(other))

    def __rsub__(self, other):
        return HalfInt.of(other) - self

    def __eq__(self, other):
        try:
            other = HalfInt.of(other)
        except InvalidIndexError:
            return NotImplemented
        return self.twice == other.twice

    def __lt__(self, other):
        return self.twice < HalfInt.of(other).twice

    def __hash__(self):
        return hash(self.as_fraction())

    def __repr__(self):
        return f"HalfInt({self})"

    def __str__(self):
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"
