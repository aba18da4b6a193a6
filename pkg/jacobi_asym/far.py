"""
Seconde espèce de Jacobi loin de x = 1, en représentation (signe, log).

Avec j₁ = j+1, j₂ = j+α+1, ν = 2j+α+β+1 et W = 2j₁j₂/(x−1), la série
2F1(j₁, j₂; ν+1; 2/(1−x)) se regroupe en

    Σ_{p,q} j₁^{−p} j₂^{−q} Σ_k a_k^{(p,q)} (−W)^k/(ν+1)_k · 0F1(; ν+k+1; −W),

où 0F1(;ν+1;−W) = Γ(ν+1)(Z″/2)^{−ν}J_ν(Z″), Z″ = 2√W. Le niveau n garde
les groupes p+q ≤ n ; le groupe p+q = n+1 sert d'estimation d'erreur.
La forme alternative en 2/(x+1) utilise j₂ = j+β+1, W′ = 2j₁j₂/(x+1) et des
fonctions I (tous les signes positifs) ; elle reste valable près du cercle
|x−1| = 2.
"""

import logging
import math

from legendre_asym.coefficients import far_coefficients
from legendre_asym.schemas import Approximant, check_level
from special_core.bessel import log_reduced_bessel
from special_core.exceptions import RegionError
from special_core.gamma import log_gamma

from .schemas import RegimeTag, jacobi_params

logger = logging.getLogger(__name__)

# au-delà, exp() déborde en double
MAX_LOG = 709.0


def _group_terms(nu, j1, j2, big_w, alternating, p, q):
    """Termes (signe, log) du groupe (p, q)"""
    terms = []
    log_weight = -p * math.log(j1) - q * math.log(j2)
    log_w = math.log(big_w)
    log_gamma_nu = log_gamma(nu + 1.0)
    for k, a in far_coefficients(p, q):
        # 0F1(; ν+k+1; ∓W)
        sign_f, log_f = log_reduced_bessel(nu + k, big_w if alternating else -big_w)
        if sign_f == 0.0:
            continue
        sign = (1.0 if a > 0 else -1.0) * sign_f
        if alternating and k % 2:
            sign = -sign
        log_term = (
            math.log(abs(a)) + log_weight + k * log_w
            - (log_gamma(nu + k + 1.0) - log_gamma_nu) + log_f
        )
        terms.append((sign, log_term))
    return terms


def _sum_levels(groups):
    """(log de référence, [somme réduite de chaque niveau p+q])"""
    logs = [log for group in groups for _, log in group]
    reference = max(logs) if logs else 0.0
    sums = [sum(sign * math.exp(log - reference) for sign, log in group) for group in groups]
    return reference, sums


def _signed_exp(sign, log):
    if log > MAX_LOG:
        return math.copysign(math.inf, sign)
    return sign * math.exp(log)


def _bessel_series(nu, j1, j2, big_w, alternating, log_prefactor, level) -> Approximant:
    groups = []
    for order in range(level + 2):
        group = []
        for p in range(order + 1):
            group.extend(_group_terms(nu, j1, j2, big_w, alternating, p, order - p))
        groups.append(group)
    reference, sums = _sum_levels(groups)
    total = sum(sums[:level + 1])
    omitted = abs(sums[level + 1])
    terms = sum(len(group) for group in groups[:level + 1])

    if total == 0.0:
        return Approximant(value=0.0, err_estimate=_signed_exp(1.0, log_prefactor + reference) * omitted,
                           terms_used=terms)
    log_value = log_prefactor + reference + math.log(abs(total))
    log_err = log_prefactor + reference + math.log(omitted) if omitted > 0.0 else -math.inf
    return Approximant(
        value=_signed_exp(math.copysign(1.0, total), log_value),
        err_estimate=0.0 if log_err == -math.inf else _signed_exp(1.0, log_err),
        terms_used=terms,
        log_abs_value=log_value,
        log_err_estimate=None if log_err == -math.inf else log_err,
    )


def _log_gamma_product(j, alpha, beta):
    nu = 2.0 * j + alpha + beta + 1.0
    return log_gamma(j + alpha + 1.0) + log_gamma(j + beta + 1.0) - log_gamma(nu + 1.0), nu


def jacobi_q_asym_far(j, alpha, beta, x, level=0) -> Approximant:
    """Q_j^{(α,β)}(x) pour (x−1)/2 > 1, série J_ν(Z″) en 1/j₁, 1/j₂"""
    params = jacobi_params(j, alpha, beta, x)
    check_level(level)
    if params.regime is not RegimeTag.FAR_LARGE:
        raise RegionError(f"x = {x} : la forme lointaine exige (x−1)/2 > 1 hors du voisinage du cercle")
    log_gammas, nu = _log_gamma_product(params.j, params.alpha, params.beta)
    j1 = params.j + 1.0
    j2 = params.j + params.alpha + 1.0
    big_w = 2.0 * j1 * j2 / (params.x - 1.0)
    log_prefactor = (
        math.log(0.5) - (params.j + params.alpha + 1.0) * math.log((params.x - 1.0) / 2.0)
        - params.beta * math.log((params.x + 1.0) / 2.0) + log_gammas
    )
    logger.debug("Q lointaine j=%s α=%s β=%s x=%s : W=%s ν=%s", params.j, params.alpha, params.beta, params.x, big_w, nu)
    return _bessel_series(nu, j1, j2, big_w, True, log_prefactor, level)


def jacobi_q_asym_alt(j, alpha, beta, x, level=0) -> Approximant:
    """Q_j^{(α,β)}(x) pour x > 1, forme en 2/(x+1) et fonctions I"""
    params = jacobi_params(j, alpha, beta, x)
    check_level(level)
    if params.x <= 1.0:
        raise RegionError(f"x = {x} : la forme en 2/(x+1) exige x > 1")
    log_gammas, nu = _log_gamma_product(params.j, params.alpha, params.beta)
    j1 = params.j + 1.0
    j2 = params.j + params.beta + 1.0
    big_w = 2.0 * j1 * j2 / (params.x + 1.0)
    log_prefactor = (
        math.log(0.5) - (params.j + params.beta + 1.0) * math.log((params.x + 1.0) / 2.0)
        - params.alpha * math.log((params.x - 1.0) / 2.0) + log_gammas
    )
    return _bessel_series(nu, j1, j2, big_w, False, log_prefactor, level)
