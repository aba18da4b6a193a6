"""Paramètres des fonctions de Jacobi et régimes d'approximation"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from special_core.exceptions import DomainError

# demi-largeur de la couronne |x−1|/2 ≈ 1 où ni la forme proche ni la forme
# lointaine ne s'appliquent ; seule la forme en 2/(x+1) y reste disponible
CIRCLE_MARGIN = 0.1


class RegimeTag(str, Enum):
    NEAR_ONE = 'near_one'
    ON_CUT = 'on_cut'
    FAR_LARGE = 'far_large'
    FAR_ALT = 'far_alt'


class JacobiParams(BaseModel):
    """Degré, paramètres α, β et argument d'une fonction de Jacobi"""
    model_config = ConfigDict(frozen=True)

    j: float = Field(..., ge=0, allow_inf_nan=False, description="Degré réel j ≥ 0")
    alpha: float = Field(..., gt=-1, allow_inf_nan=False)
    beta: float = Field(..., gt=-1, allow_inf_nan=False)
    x: float = Field(..., gt=-1, allow_inf_nan=False)

    @property
    def b(self) -> float:
        return self.alpha + self.beta + 1.0

    @property
    def lam(self) -> float:
        """j(j+b)"""
        return self.j * (self.j + self.b)

    @property
    def regime(self) -> RegimeTag:
        if self.x <= 1.0:
            return RegimeTag.ON_CUT
        half = (self.x - 1.0) / 2.0
        if half < 1.0 - CIRCLE_MARGIN:
            return RegimeTag.NEAR_ONE
        if half > 1.0 + CIRCLE_MARGIN:
            return RegimeTag.FAR_LARGE
        return RegimeTag.FAR_ALT


def jacobi_params(j, alpha, beta, x) -> JacobiParams:
    try:
        return JacobiParams(j=j, alpha=alpha, beta=beta, x=x)
    except ValidationError as e:
        raise DomainError(
            f"paramètres de Jacobi invalides (j={j!r}, α={alpha!r}, β={beta!r}, x={x!r}) : {e.errors()[0]['msg']}"
        ) from e
