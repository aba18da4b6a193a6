"""
Quadrature en valeur principale de la seconde espèce de Jacobi sur la coupure :

    𝖰_n^{(α,β)}(x) = ½(1−x)^{−α}(1+x)^{−β} PV∫_{−1}^{1} (1−t)^α(1+t)^β P_n^{(α,β)}(t)/(x−t) dt.

La singularité est soustraite : f(t) − f(x) sur (x − t) est régulière et
PV∫ dt/(x−t) = ln((1+x)/(1−x)). L'intégrale régularisée est coupée en x et
intégrée par tanh-sinh (mpmath), qui absorbe les singularités de bord du poids.
"""

import logging

import mpmath

from special_core.exceptions import ConvergenceError, DomainError

from .checks import relative_difference, working_dps
from .schemas import OracleMethod, OracleResult

logger = logging.getLogger(__name__)

# changement relatif maximal quand on double le nombre de nœuds
NODE_DOUBLING_TOL = 1e-9

BASE_DEGREE = 6


def _principal_value(n, alpha, beta, x, degree):
    alpha = mpmath.mpf(alpha)
    beta = mpmath.mpf(beta)
    x = mpmath.mpf(x)

    def weighted(t):
        return (1 - t) ** alpha * (1 + t) ** beta * mpmath.jacobi(n, alpha, beta, t)

    at_x = weighted(x)

    def regular(t):
        return (weighted(t) - at_x) / (x - t)

    integral = mpmath.quad(regular, [-1, x, 1], maxdegree=degree)
    integral += at_x * mpmath.log((1 + x) / (1 - x))
    return integral / (2 * (1 - x) ** alpha * (1 + x) ** beta)


def jacobi_q_quadrature(n, alpha, beta, x) -> OracleResult:
    """𝖰_n^{(α,β)}(x), n entier, −1 < x < 1, par valeur principale"""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError("la quadrature exige un degré entier n ≥ 0")
    if not -1.0 < x < 1.0:
        raise DomainError(f"x = {x} hors de la coupure")
    if alpha <= -1.0 or beta <= -1.0:
        raise DomainError("α, β > −1 requis")
    with mpmath.workdps(working_dps()):
        coarse = _principal_value(n, alpha, beta, x, BASE_DEGREE)
        fine = _principal_value(n, alpha, beta, x, BASE_DEGREE + 1)
        change = relative_difference(float(coarse), float(fine))
        if change > NODE_DOUBLING_TOL:
            raise ConvergenceError(
                f"quadrature PV de 𝖰_{n}^({alpha},{beta})({x}) : variation {change:.2e} en doublant les nœuds"
            )
        logger.debug("PV 𝖰_%d^(%s,%s)(%s) = %s (variation %.1e)", n, alpha, beta, x, fine, change)
        return OracleResult(value=float(fine), precision_loss=0.0, method=OracleMethod.QUADRATURE)
