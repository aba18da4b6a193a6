"""
Objets-valeurs partagés par les développements asymptotiques.

``Approximant`` est le type de retour de toutes les approximations
(Legendre, Jacobi, rotation) ; ``LegendreParams`` valide les arguments
avant toute évaluation.
"""

import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from special_core.exceptions import DomainError, TruncationError

TRUNCATION_LEVELS = (0, 1, 2)


class RegionTag(str, Enum):
    ON_CUT = 'on_cut'
    OFF_CUT = 'off_cut'


class LegendreParams(BaseModel):
    """Degré, ordre et argument d'une fonction de Legendre"""
    model_config = ConfigDict(frozen=True)

    j: float = Field(
        ...,
        ge=0,
        allow_inf_nan=False,
        description="Degré réel j ≥ 0"
    )
    mu: float = Field(
        0.0,
        allow_inf_nan=False,
        description="Ordre réel μ"
    )
    x: float = Field(
        ...,
        gt=-1,
        allow_inf_nan=False,
        description="Argument réel x > −1"
    )

    @property
    def region(self) -> RegionTag:
        # x = 1 appartient à l'adhérence de la coupure (z = 0)
        return RegionTag.ON_CUT if self.x <= 1.0 else RegionTag.OFF_CUT

    @property
    def lam(self) -> float:
        """j(j+1), paramètre de développement"""
        return self.j * (self.j + 1.0)


class Approximant(BaseModel):
    """
    Valeur approchée, estimation d'erreur (premier groupe omis) et nombre de termes.

    Les régimes lointains portent aussi log|valeur| et log(erreur) : la valeur
    flottante peut alors déborder (±inf) sans que l'information soit perdue.
    """
    model_config = ConfigDict(frozen=True)

    value: float
    err_estimate: float = Field(..., ge=0)
    terms_used: int = Field(..., ge=0)
    log_abs_value: Optional[float] = Field(
        None,
        description="log|valeur| quand la valeur est portée en représentation logarithmique"
    )
    log_err_estimate: Optional[float] = None

    @field_validator('value', 'err_estimate')
    @classmethod
    def not_nan(cls, v):
        if math.isnan(v):
            raise ValueError("NaN interdit")
        return v


def legendre_params(j, mu, x) -> LegendreParams:
    """Construit des LegendreParams, les erreurs de validation devenant des DomainError"""
    try:
        return LegendreParams(j=j, mu=mu, x=x)
    except ValidationError as e:
        raise DomainError(f"paramètres de Legendre invalides (j={j!r}, μ={mu!r}, x={x!r}) : {e.errors()[0]['msg']}") from e


def check_level(level, maximum=2) -> int:
    """Valide un niveau de troncature 0 ≤ level ≤ maximum"""
    if isinstance(level, bool) or not isinstance(level, int):
        raise TruncationError(f"niveau de troncature entier attendu (reçu {level!r})")
    if level < 0 or level > maximum:
        raise TruncationError(f"niveau {level} non supporté (0 à {maximum})")
    return level
