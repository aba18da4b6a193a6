"""Indices canoniques des fonctions de rotation"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from .halfint import HalfInt


class RotationIndices(BaseModel):
    """
    (j, m′, m) sous forme canonique j ≥ m′ ≥ |m|, j−m′ entier, avec la
    phase (−1)^{m′−m} accumulée par les symétries.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    j: HalfInt
    m_prime: HalfInt
    m: HalfInt
    phase: Literal[1, -1] = 1

    @field_validator('j', 'm_prime', 'm', mode='before')
    @classmethod
    def coerce_half_integer(cls, v):
        return HalfInt.of(v)

    @model_validator(mode='after')
    def check_canonical(self):
        if not self.j >= self.m_prime >= abs(self.m):
            raise ValueError(f"indices non canoniques : j={self.j}, m′={self.m_prime}, m={self.m}")
        if not (self.j - self.m_prime).is_integer:
            raise ValueError("j − m′ doit être entier")
        return self

    @property
    def degree(self) -> int:
        """n = j − m′"""
        return (self.j - self.m_prime).as_int()

    @property
    def alpha(self) -> int:
        """m′ − m"""
        return (self.m_prime - self.m).as_int()

    @property
    def beta(self) -> int:
        """m′ + m"""
        return (self.m_prime + self.m).as_int()
