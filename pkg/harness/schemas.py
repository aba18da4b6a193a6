"""
Schémas du banc de vérification : grilles, enregistrements d'erreur et
modèle eikonal.
"""

import math
from enum import Enum
from typing import Optional

import numpy as np
from django.conf import settings
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from special_core.exceptions import DomainError


def rel_err_floor() -> float:
    return float(getattr(settings, 'HARNESS_REL_ERR_FLOOR', 1e-300))


class GridScale(str, Enum):
    LIN = 'lin'
    LOG = 'log'


class GridSpec(BaseModel):
    """
    Grille d'un paramètre : liste explicite de valeurs, ou (min, max, count)
    en progression linéaire ou géométrique.
    """
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1)
    values: Optional[tuple[float, ...]] = None
    minimum: Optional[float] = None
    maximum: Optional[float] = None
    count: Optional[int] = Field(None, ge=2)
    scale: GridScale = GridScale.LIN

    @model_validator(mode='after')
    def check_definition(self):
        if self.values is not None:
            if not self.values:
                raise ValueError("liste de valeurs vide")
            return self
        if self.minimum is None or self.maximum is None or self.count is None:
            raise ValueError("il faut des valeurs explicites ou min, max et count")
        if not self.minimum < self.maximum:
            raise ValueError(f"min ({self.minimum}) doit être < max ({self.maximum})")
        if self.scale is GridScale.LOG and self.minimum <= 0:
            raise ValueError("une grille logarithmique exige min > 0")
        return self

    def points(self) -> tuple[float, ...]:
        if self.values is not None:
            return tuple(float(v) for v in self.values)
        if self.scale is GridScale.LOG:
            grid = np.geomspace(self.minimum, self.maximum, self.count)
        else:
            grid = np.linspace(self.minimum, self.maximum, self.count)
        return tuple(float(v) for v in grid)

    @classmethod
    def parse(cls, text: str) -> 'GridSpec':
        """'j=10:80:4:log' ou 'theta=0.1,0.2,0.3'"""
        name, sep, body = text.partition('=')
        if not sep:
            raise DomainError(f"grille '{text}' : forme attendue nom=min:max:count:lin|log ou nom=v1,v2,...")
        try:
            if ':' in body:
                parts = body.split(':')
                if len(parts) not in (3, 4):
                    raise DomainError(f"grille '{text}' : min:max:count[:lin|log] attendu")
                scale = parts[3] if len(parts) == 4 else 'lin'
                return cls(name=name.strip(), minimum=float(parts[0]), maximum=float(parts[1]),
                           count=int(parts[2]), scale=scale)
            return cls(name=name.strip(), values=tuple(float(v) for v in body.split(',')))
        except ValidationError as e:
            raise DomainError(f"grille '{text}' invalide : {e.errors()[0]['msg']}") from e
        except ValueError as e:
            if isinstance(e, DomainError):
                raise
            raise DomainError(f"grille '{text}' : valeur non numérique") from e


class RecordStatus(str, Enum):
    OK = 'ok'
    REGION_ERROR = 'region_error'
    DOMAIN_ERROR = 'domain_error'
    INDEX_ERROR = 'index_error'
    TRUNCATION_ERROR = 'truncation_error'
    CONVERGENCE_ERROR = 'convergence_error'
    ORACLE_ERROR = 'oracle_error'


class ErrorRecord(BaseModel):
    """Un point de grille : approximation, référence et erreurs"""
    model_config = ConfigDict(frozen=True)

    function: str
    level: int = Field(..., ge=0)
    parameters: dict[str, float]
    approx: Optional[float] = None
    oracle: Optional[float] = None
    abs_err: Optional[float] = Field(None, ge=0)
    rel_err: Optional[float] = Field(None, ge=0)
    err_estimate: Optional[float] = Field(None, ge=0)
    status: RecordStatus = RecordStatus.OK

    @model_validator(mode='after')
    def ok_records_are_complete(self):
        if self.status is RecordStatus.OK and (self.approx is None or self.oracle is None):
            raise ValueError("un enregistrement 'ok' porte la valeur approchée et la référence")
        return self

    @classmethod
    def measured(cls, function, level, parameters, approx, oracle, err_estimate, floor=None) -> 'ErrorRecord':
        """rel_err = |approx − oracle| / max(|oracle|, plancher)"""
        floor = rel_err_floor() if floor is None else floor
        abs_err = abs(approx - oracle)
        return cls(
            function=function, level=level, parameters=dict(parameters),
            approx=approx, oracle=oracle, abs_err=abs_err,
            rel_err=abs_err / max(abs(oracle), floor), err_estimate=err_estimate,
        )

    @classmethod
    def failed(cls, function, level, parameters, status: RecordStatus) -> 'ErrorRecord':
        return cls(function=function, level=level, parameters=dict(parameters), status=status)


class EikonalModel(BaseModel):
    """Profil gaussien χ(b) = i·chi0·exp(−b²/2B²)"""
    model_config = ConfigDict(frozen=True)

    p: float = Field(..., gt=0, description="Impulsion (inverse d'une longueur)")
    chi0: float
    width: float = Field(..., gt=0, description="Largeur B du profil")

    @field_validator('p', 'chi0', 'width')
    @classmethod
    def finite(cls, v):
        if not math.isfinite(v):
            raise ValueError("valeur non finie")
        return v

    def phase(self, b) -> complex:
        return 1j * self.chi0 * math.exp(-b * b / (2.0 * self.width ** 2))
