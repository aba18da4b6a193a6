"""Résultat d'une évaluation de référence"""

import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class OracleMethod(str, Enum):
    SERIES = 'series'
    RECURRENCE = 'recurrence'
    QUADRATURE = 'quadrature'
    CLOSED_FORM = 'closed_form'
    EPSILON_LIMIT = 'epsilon_limit'


class OracleResult(BaseModel):
    """
    Valeur de référence avec le nombre estimé de chiffres perdus.

    Quand deux méthodes indépendantes ont été utilisées, ``secondary_value``
    et ``agreement`` (écart relatif) documentent le contrôle croisé.
    """
    model_config = ConfigDict(frozen=True)

    value: float
    precision_loss: float = Field(..., ge=0, description="Chiffres décimaux perdus (estimation)")
    method: OracleMethod
    diverged: bool = Field(False, description="Dépassement de capacité ou série divergente")
    secondary_value: Optional[float] = None
    agreement: Optional[float] = Field(None, ge=0)

    @model_validator(mode='after')
    def value_is_finite(self):
        if not self.diverged and not math.isfinite(self.value):
            raise ValueError("valeur non finie sans indicateur de divergence")
        return self
