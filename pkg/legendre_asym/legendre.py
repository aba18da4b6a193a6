"""
Développements de Bessel des fonctions de Legendre.

Conventions :
  * ``legendre_p_asym(j, mu, x)`` renvoie P_j^{−μ}(x) (ordre négatif) ; un
    ordre positif s'obtient avec −μ, ou ``positive_order=True`` sur la coupure.
  * Hors coupure (x > 1), les fonctions de seconde espèce sont renvoyées sans
    la phase e^{iπμ} : on calcule la fonction réelle e^{−iπμ} Q_j^μ(x).
  * Sur la coupure (−1 < x < 1) on calcule les fonctions de Ferrers 𝖯, 𝖰.
"""

import logging
import math
import warnings
from math import factorial

import mpmath

from special_core.bessel import (
    bessel_i, bessel_j, bessel_k, bessel_k0_log_regular, bessel_y0_log_regular,
    scaled_bessel_k, scaled_bessel_y,
)
from special_core.exceptions import ConditioningWarning, DomainError, RegionError
from special_core.gamma import digamma, signed_log_gamma
from special_core.limits import epsilon_limit_with_group

from .coefficients import coefficient_table
from .schemas import Approximant, RegionTag, check_level, legendre_params
from .series import p_series, p_series_offset_mp, series_group

logger = logging.getLogger(__name__)

LEGENDRE_B = 1.0

# |sin πμ| en dessous duquel la forme directe est signalée mal conditionnée
SIN_CONDITIONING = 1e-6

# distance à l'entier en dessous de laquelle l'ordre est traité comme entier
INTEGER_ORDER_TOL = 1e-12


def is_integer_order(mu) -> bool:
    return abs(mu - round(mu)) < INTEGER_ORDER_TOL


def signed_gamma_ratio(a, b) -> float:
    """Γ(a)/Γ(b) pour a, b réels quelconques (0 si b est un pôle)"""
    if b <= 0 and b == math.floor(b):
        return 0.0
    sign_a, log_a = signed_log_gamma(a)
    sign_b, log_b = signed_log_gamma(b)
    return sign_a * sign_b * math.exp(log_a - log_b)


def _check_near_one(x):
    if x > 1.0 and (x - 1.0) / 2.0 >= 1.0:
        raise RegionError(f"x = {x} : (x−1)/2 ≥ 1, hors de la région du développement près de x = 1")


def _ratio_prefactor(order, x):
    """|(1−x)/(1+x)|^{ν/2}"""
    base = abs((1.0 - x) / (1.0 + x))
    if base == 0.0 and order < 0:
        raise DomainError("ordre positif non défini en x = 1")
    return base ** (order / 2.0)


def _p_approximant(j, order, x, level) -> Approximant:
    lam = j * (j + LEGENDRE_B)
    w = (1.0 - x) / 2.0
    prefactor = _ratio_prefactor(order, x)
    result = p_series(order, lam, w, LEGENDRE_B, level)
    return Approximant(
        value=prefactor * result.value,
        err_estimate=abs(prefactor) * result.err_estimate,
        terms_used=result.terms_used,
    )


def legendre_p_asym(j, mu, x, level=2) -> Approximant:
    """
    P_j^{−μ}(x) par la série de Bessel au niveau ``level``.

    Sur la coupure l'argument est z = √(2j(j+1)(1−x)) et les fonctions J ;
    pour 1 < x < 3 les mêmes termes deviennent des fonctions I de
    Z = √(2j(j+1)(x−1)) avec des signes alternés. La limite j → 0 est exacte.
    """
    params = legendre_params(j, mu, x)
    check_level(level)
    _check_near_one(params.x)
    return _p_approximant(params.j, params.mu, params.x, level)


def legendre_p_cut(j, mu, x, level=2, positive_order=False) -> Approximant:
    """
    Fonction de Ferrers 𝖯_j^{−μ}(x), ou 𝖯_j^{+μ}(x) avec ``positive_order``.

    L'ordre positif utilise la même série avec μ → −μ ; les ordres de Bessel
    négatifs entiers passent par E_{−n}(u) = (−u)^n E_n(u).
    """
    params = legendre_params(j, mu, x)
    check_level(level)
    if params.region is not RegionTag.ON_CUT:
        raise RegionError(f"x = {x} n'est pas sur la coupure (−1, 1]")
    order = -params.mu if positive_order else params.mu
    return _p_approximant(params.j, order, params.x, level)


def legendre_p_offset_series(j, mu, x, max_offset=6, dps=40):
    """
    P_j^{−μ}(x) par la série tronquée en décalage de Bessel k ≤ max_offset
    (tous ordres en 1/j(j+1)), évaluée en mpmath. Valeur mpf.
    """
    params = legendre_params(j, mu, x)
    _check_near_one(params.x)
    with mpmath.workdps(dps):
        ratio = abs((1 - mpmath.mpf(params.x)) / (1 + mpmath.mpf(params.x)))
        prefactor = ratio ** (mpmath.mpf(params.mu) / 2)
        w = (1 - mpmath.mpf(params.x)) / 2
        j_mp = mpmath.mpf(params.j)
        lam = j_mp * (j_mp + 1)
        total = p_series_offset_mp(params.mu, lam, w, LEGENDRE_B, max_offset, dps=dps)
        return prefactor * total


def legendre_p_macdonald(j, x, level=1) -> Approximant:
    """
    Série de MacDonald en puissances de 1/(j+½) :
    J_0(z″) + (j+½)^{−2}[¼(z″/2)J_1 − (z″/2)²J_2 + ⅓(z″/2)³J_3], z″ = (j+½)√(2(1−x)).

    Au niveau 1 l'estimation d'erreur extrapole le rapport des deux groupes.
    """
    params = legendre_params(j, 0.0, x)
    check_level(level, maximum=1)
    if params.region is not RegionTag.ON_CUT:
        raise RegionError("la série de MacDonald n'est utilisée que sur la coupure")
    n = params.j + 0.5
    z = n * math.sqrt(2.0 * (1.0 - params.x))
    half = z / 2.0
    leading = bessel_j(0, z)
    correction = (
        0.25 * half * bessel_j(1, z)
        - half ** 2 * bessel_j(2, z)
        + half ** 3 * bessel_j(3, z) / 3.0
    ) / (n * n)
    if level == 0:
        return Approximant(value=leading, err_estimate=abs(correction), terms_used=1)
    ratio = abs(correction) / max(abs(leading), abs(correction), 1e-300)
    return Approximant(value=leading + correction, err_estimate=abs(correction) * ratio, terms_used=4)


def _cut_bracket(k, z, log_term, log_term_regular):
    """
    Terme (z/2)^k J_{k+μ}(z) de la série P après passage à la limite μ → 0 :
    (z/2)^k J_k L − (π/2)(z/2)^k Y_k − (k!/2) Σ_{i<k} (z/2)^i J_i / ((k−i) i!).
    """
    if k == 0:
        return bessel_j(0, z) * log_term_regular + bessel_y0_log_regular(z)
    half = z / 2.0
    poly = sum(half ** i * bessel_j(i, z) / ((k - i) * factorial(i)) for i in range(k))
    return (
        half ** k * bessel_j(k, z) * log_term
        - 0.5 * math.pi * scaled_bessel_y(k, z)
        - 0.5 * factorial(k) * poly
    )


def _off_cut_bracket(k, z, log_term, log_term_regular):
    """Analogue hyperbolique : (−1)^k(Z/2)^k I_k L + (Z/2)^k K_k − (k!/2) Σ (−1)^i (Z/2)^i I_i/((k−i) i!)"""
    if k == 0:
        return bessel_i(0, z) * log_term_regular + bessel_k0_log_regular(z)
    half = z / 2.0
    poly = sum((-1) ** i * half ** i * bessel_i(i, z) / ((k - i) * factorial(i)) for i in range(k))
    return (
        (-1) ** k * half ** k * bessel_i(k, z) * log_term
        + scaled_bessel_k(k, z)
        - 0.5 * factorial(k) * poly
    )


def _q_zero_order(j, x, level, on_cut):
    """Somme complète des groupes m ≤ level de Q_j (μ = 0) et groupe suivant"""
    lam = j * (j + LEGENDRE_B)
    psi = digamma(j + 1.0)
    if on_cut:
        z = math.sqrt(2.0 * lam * (1.0 - x))
        z_prime = math.sqrt(2.0 * lam * (1.0 + x))
        log_ratio = 0.5 * math.log((1.0 + x) / (1.0 - x))
        bracket = _cut_bracket
    else:
        z = math.sqrt(2.0 * lam * (x - 1.0))
        z_prime = math.sqrt(2.0 * lam * (x + 1.0))
        log_ratio = 0.5 * math.log((x + 1.0) / (x - 1.0))
        bracket = _off_cut_bracket
    log_term = math.log(z_prime / 2.0) - psi
    log_term_regular = log_ratio - psi

    table = coefficient_table(LEGENDRE_B, max_order=level + 1)
    groups = []
    for m in range(level + 2):
        total = 0.0
        for k, c in table.float_group(m):
            total += -c * bracket(k, z, log_term, log_term_regular)
        groups.append(total / lam ** m)
    terms = sum(len(table.float_group(m)) for m in range(level + 1))
    return sum(groups[:level + 1]), abs(groups[level + 1]), terms, z


def _closed_form_q0(x):
    return 0.5 * math.log(abs((1.0 + x) / (1.0 - x)))


def legendre_q_cut(j, x, level=0, printed=False) -> Approximant:
    """
    𝖰_j(x) sur la coupure, niveaux 0 à 2.

    Le niveau 0 vaut −(π/2)Y_0(z) + J_0(z)(ln(z′/2) − ψ(j+1)). Avec
    ``printed=True`` le niveau 1 n'ajoute que la correction
    +(π/2)(1/j(j+1))[(z/2)²Y_2 − ⅓(z/2)³Y_3], sans les termes en J.
    """
    params = legendre_params(j, 0.0, x)
    if not (-1.0 < params.x < 1.0):
        raise DomainError(f"𝖰_j n'est défini que pour −1 < x < 1 (reçu {x!r})")
    check_level(level, maximum=1 if printed else 2)
    if params.j == 0.0:
        return Approximant(value=_closed_form_q0(params.x), err_estimate=0.0, terms_used=1)
    value, err, terms, z = _q_zero_order(params.j, params.x, level, on_cut=True)
    if printed and level == 1:
        full_level0, err0, _, _ = _q_zero_order(params.j, params.x, 0, on_cut=True)
        lam = params.j * (params.j + LEGENDRE_B)
        correction = 0.5 * math.pi / lam * (scaled_bessel_y(2, z) - scaled_bessel_y(3, z) / 3.0)
        return Approximant(value=full_level0 + correction, err_estimate=err, terms_used=3)
    return Approximant(value=value, err_estimate=err, terms_used=terms)


def _q_leading(j, mu, x):
    """
    (Z′/2)^μ [K_μ(Z) + (πμ/(2 sin πμ))((Z/2)²/j(j+1) − 1/(3(j+1)²)) I_μ(Z)]
    et le groupe d'ordre 1, signé, de la combinaison des séries P.
    """
    lam = j * (j + LEGENDRE_B)
    z = math.sqrt(2.0 * lam * (x - 1.0))
    z_prime = math.sqrt(2.0 * lam * (x + 1.0))
    sine = math.sin(math.pi * mu)
    coefficient = 0.5 * math.pi * mu / sine
    correction = (x - 1.0) / 2.0 - 1.0 / (3.0 * (j + 1.0) ** 2)
    value = (z_prime / 2.0) ** mu * (bessel_k(mu, z) + coefficient * correction * bessel_i(mu, z))

    w = (1.0 - x) / 2.0
    u = lam * w
    table = coefficient_table(LEGENDRE_B, max_order=1)
    ratio = signed_gamma_ratio(j + mu + 1.0, j - mu + 1.0)
    plus, _ = series_group(-mu, u, w, table, 1)
    minus, _ = series_group(mu, u, w, table, 1)
    group = _ratio_prefactor(-mu, x) * plus - ratio * _ratio_prefactor(mu, x) * minus
    return value, 0.5 * math.pi / sine * group


def legendre_q_asym(j, mu, x, level=0) -> Approximant:
    """
    e^{−iπμ} Q_j^μ(x) pour 1 < x < 3.

    μ = 0 : niveaux 0 à 2 (K_0 + I_0(ln(Z′/2) − ψ(j+1)) puis les groupes
    suivants). μ > 0 : terme de tête seulement, ε-limite aux ordres entiers.
    """
    params = legendre_params(j, mu, x)
    if params.x <= 1.0:
        raise RegionError(f"x = {x} : utiliser legendre_q_cut sur la coupure")
    if params.mu < 0:
        raise DomainError("ordre μ ≥ 0 requis pour Q_j^μ")
    if params.mu == 0.0 and params.j == 0.0:
        check_level(level)
        return Approximant(value=_closed_form_q0(params.x), err_estimate=0.0, terms_used=1)
    _check_near_one(params.x)

    if params.mu == 0.0:
        check_level(level)
        value, err, terms, _ = _q_zero_order(params.j, params.x, level, on_cut=False)
        return Approximant(value=value, err_estimate=err, terms_used=terms)

    check_level(level, maximum=0)
    if params.j == 0.0:
        raise DomainError("j > 0 requis pour le terme de tête de Q_j^μ, μ ≠ 0")
    if is_integer_order(params.mu):
        warnings.warn(f"ordre entier μ = {params.mu} : ε-limite", ConditioningWarning, stacklevel=2)
        logger.debug("ε-limite pour Q_j^μ, j=%s μ=%s x=%s", params.j, params.mu, params.x)
        value, err = epsilon_limit_with_group(lambda nu: _q_leading(params.j, nu, params.x), round(params.mu))
        return Approximant(value=value, err_estimate=err, terms_used=2)
    if abs(math.sin(math.pi * params.mu)) < SIN_CONDITIONING:
        warnings.warn(f"|sin πμ| < {SIN_CONDITIONING} pour μ = {params.mu}", ConditioningWarning, stacklevel=2)
    value, group = _q_leading(params.j, params.mu, params.x)
    return Approximant(value=value, err_estimate=abs(group), terms_used=2)


def legendre_q_from_p(j, mu, x, level=2) -> Approximant:
    """
    Seconde espèce d'ordre μ non entier à partir de deux séries P :
    hors coupure (π/(2 sin πμ))[P^μ − Γ(j+μ+1)/Γ(j−μ+1) P^{−μ}],
    sur la coupure (π/(2 sin πμ))[cos(πμ)𝖯^μ − Γ(j+μ+1)/Γ(j−μ+1) 𝖯^{−μ}].
    """
    params = legendre_params(j, mu, x)
    check_level(level)
    _check_near_one(params.x)
    if params.x == 1.0:
        raise DomainError("la seconde espèce est singulière en x = 1")
    if is_integer_order(params.mu):
        raise DomainError(f"ordre entier μ = {params.mu} : utiliser legendre_q_asym ou legendre_q_cut")
    sine = math.sin(math.pi * params.mu)
    if abs(sine) < SIN_CONDITIONING:
        warnings.warn(f"|sin πμ| < {SIN_CONDITIONING} pour μ = {params.mu}", ConditioningWarning, stacklevel=2)

    positive = _p_approximant(params.j, -params.mu, params.x, level)
    negative = _p_approximant(params.j, params.mu, params.x, level)
    ratio = signed_gamma_ratio(params.j + params.mu + 1.0, params.j - params.mu + 1.0)
    weight = math.cos(math.pi * params.mu) if params.x < 1.0 else 1.0
    coefficient = 0.5 * math.pi / sine
    value = coefficient * (weight * positive.value - ratio * negative.value)
    err = abs(coefficient) * (abs(weight) * positive.err_estimate + abs(ratio) * negative.err_estimate)
    return Approximant(value=value, err_estimate=err, terms_used=positive.terms_used + negative.terms_used)
