"""
Développements de Bessel des fonctions de Jacobi près de x = 1.

La première espèce réutilise le moteur de séries de Legendre avec
b = α+β+1 et Λ = j(j+b). Pour la seconde espèce on dispose des termes de
tête, corrigés à l'ordre 1/(j+1) par c = α(α+β)/(j+1) :

    x > 1  : (Γ(j+α+1)/Γ(j+1)) (Z/2)^{−α} [K_α(Z)(1+c) + (π/(2 sin πα)) c I_α(Z)]
    x < 1  : −(π/2)(Γ(j+α+1)/Γ(j+1)) (z/2)^{−α} [Y_α(z)(1+c) − cot(πα) c J_α(z)]

L'estimation d'erreur somme le groupe d'ordre 1 de la formule de connexion
à deux séries P et la correction en c elle-même, dont l'ordre 1/j fixe la
précision du terme de tête ; aux α entiers, tout passe par l'ε-limite.
"""

import logging
import math
import warnings

from legendre_asym.coefficients import CoefficientTable, coefficient_table
from legendre_asym.legendre import (
    SIN_CONDITIONING, is_integer_order, legendre_q_asym, legendre_q_cut, signed_gamma_ratio,
)
from legendre_asym.schemas import Approximant, check_level
from legendre_asym.series import p_series, series_group
from special_core.bessel import bessel_i, bessel_j, bessel_k, bessel_y
from special_core.exceptions import ConditioningWarning, DomainError, RegionError
from special_core.gamma import gamma_ratio
from special_core.limits import epsilon_limit_with_group

from .schemas import JacobiParams, RegimeTag, jacobi_params

logger = logging.getLogger(__name__)


def jacobi_coeff_table(b) -> CoefficientTable:
    """Table c_{m,k}(b) jusqu'au second ordre ; b = 1 redonne Legendre"""
    return coefficient_table(b, max_order=2)


def jacobi_p_asym(j, alpha, beta, x, level=2) -> Approximant:
    """
    P_j^{(α,β)}(x) pour −1 < x et (x−1)/2 < 1 :
    (Γ(j+α+1)/Γ(j+1)) Σ (−c_{m,k}) w^m u^{k−m} E_{α+k}(u), u = j(j+b)(1−x)/2.
    """
    params = jacobi_params(j, alpha, beta, x)
    check_level(level)
    if (params.x - 1.0) / 2.0 >= 1.0:
        raise RegionError(f"x = {x} : (x−1)/2 ≥ 1, hors de la région près de x = 1")
    ratio = gamma_ratio(params.j + params.alpha + 1.0, params.j + 1.0)
    w = (1.0 - params.x) / 2.0
    result = p_series(params.alpha, params.lam, w, params.b, level)
    return Approximant(
        value=ratio * result.value,
        err_estimate=ratio * result.err_estimate,
        terms_used=result.terms_used,
    )


def _connection_group(j, alpha, beta, x, first_weight):
    """
    Groupe d'ordre 1 de −first_weight·P_j^{(α,β)} + ((1∓x)/2)^{−α}((1+x)/2)^{−β} P_{j+α+β}^{(−α,−β)}
    """
    w = (1.0 - x) / 2.0
    b = alpha + beta + 1.0
    first, _ = series_group(alpha, j * (j + b) * w, w, coefficient_table(b, max_order=1), 1)
    partner_degree = j + alpha + beta
    partner_b = 1.0 - alpha - beta
    second, _ = series_group(
        -alpha, partner_degree * (partner_degree + partner_b) * w, w,
        coefficient_table(partner_b, max_order=1), 1,
    )
    weight = abs(w) ** (-alpha) * ((1.0 + x) / 2.0) ** (-beta)
    return (
        -first_weight * signed_gamma_ratio(j + alpha + 1.0, j + 1.0) * first
        + weight * signed_gamma_ratio(j + beta + 1.0, partner_degree + 1.0) * second
    )


def _near_terms(j, alpha, beta, x):
    lam = j * (j + alpha + beta + 1.0)
    big_z = math.sqrt(2.0 * lam * (x - 1.0))
    ratio = signed_gamma_ratio(j + alpha + 1.0, j + 1.0)
    c = alpha * (alpha + beta) / (j + 1.0)
    if alpha == 0.0:
        weighted_c = beta / (2.0 * (j + 1.0))
        group = math.nan
    else:
        coefficient = 0.5 * math.pi / math.sin(math.pi * alpha)
        weighted_c = coefficient * c
        group = coefficient * _connection_group(j, alpha, beta, x, 1.0)
    scale = ratio * (big_z / 2.0) ** (-alpha)
    leading = bessel_k(alpha, big_z)
    correction = c * leading + weighted_c * bessel_i(alpha, big_z)
    return scale * (leading + correction), group, scale * correction


def _cut_terms(j, alpha, beta, x):
    lam = j * (j + alpha + beta + 1.0)
    z = math.sqrt(2.0 * lam * (1.0 - x))
    ratio = signed_gamma_ratio(j + alpha + 1.0, j + 1.0)
    c = alpha * (alpha + beta) / (j + 1.0)
    if alpha == 0.0:
        cot_c = beta / (math.pi * (j + 1.0))
        group = math.nan
    else:
        cot_c = c / math.tan(math.pi * alpha)
        group = 0.5 * math.pi / math.sin(math.pi * alpha) * _connection_group(
            j, alpha, beta, x, math.cos(math.pi * alpha),
        )
    scale = -0.5 * math.pi * ratio * (z / 2.0) ** (-alpha)
    leading = bessel_y(alpha, z)
    correction = c * leading - cot_c * bessel_j(alpha, z)
    return scale * (leading + correction), group, scale * correction


def _second_kind(terms, params: JacobiParams):
    """
    Évaluation directe, ou ε-limite quand α est entier.

    L'erreur estimée ajoute au groupe de connexion la correction en
    1/(j+1) elle-même : la précision observée du terme de tête est O(1/j).
    """
    alpha = params.alpha

    def evaluate(a):
        return terms(params.j, a, params.beta, params.x)

    if not is_integer_order(alpha):
        if abs(math.sin(math.pi * alpha)) < SIN_CONDITIONING:
            warnings.warn(f"|sin πα| < {SIN_CONDITIONING} pour α = {alpha}", ConditioningWarning, stacklevel=3)
        value, group, correction = evaluate(alpha)
        return value, abs(group) + abs(correction)
    center = float(round(alpha))
    if center != 0.0:
        warnings.warn(f"α = {alpha} entier : ε-limite (précision dégradée)", ConditioningWarning, stacklevel=3)
    logger.debug("ε-limite en α = %s (j=%s, β=%s, x=%s)", center, params.j, params.beta, params.x)
    value, group_err = epsilon_limit_with_group(lambda a: evaluate(a)[:2], center)
    if center == 0.0:
        # à α = 0 les coefficients en 1/sin πα ont une limite fermée
        value, _, correction = evaluate(0.0)
        return value, group_err + abs(correction)
    _, correction_err = epsilon_limit_with_group(lambda a: evaluate(a)[::2], center)
    return value, group_err + correction_err


def jacobi_q_asym_near(j, alpha, beta, x) -> Approximant:
    """Q_j^{(α,β)}(x) pour 1 < x, (x−1)/2 nettement sous 1 (terme de tête)"""
    params = jacobi_params(j, alpha, beta, x)
    if params.regime is not RegimeTag.NEAR_ONE:
        raise RegionError(f"x = {x} hors de la région proche de 1 (régime {params.regime.value})")
    if params.alpha == 0.0 and params.beta == 0.0:
        return legendre_q_asym(params.j, 0.0, params.x, level=0)
    if params.j == 0.0:
        raise DomainError("j > 0 requis : Z = 0")
    value, err = _second_kind(_near_terms, params)
    return Approximant(value=value, err_estimate=err, terms_used=2)


def jacobi_q_cut(j, alpha, beta, x) -> Approximant:
    """𝖰_j^{(α,β)}(x) sur la coupure −1 < x < 1 (terme de tête)"""
    params = jacobi_params(j, alpha, beta, x)
    if not params.x < 1.0:
        raise RegionError(f"x = {x} n'est pas sur la coupure")
    if params.alpha == 0.0 and params.beta == 0.0:
        return legendre_q_cut(params.j, params.x, level=0)
    if params.j == 0.0:
        raise DomainError("j > 0 requis : z = 0")
    value, err = _second_kind(_cut_terms, params)
    return Approximant(value=value, err_estimate=err, terms_used=2)
