"""
Valeurs de référence des fonctions de Jacobi.

Seconde espèce, par régime :
  * (x−1)/2 > 1 : 2F1(j+1, j+α+1; 2j+α+β+2; 2/(1−x)) sommée en double-double,
    contrôlée par la forme en 2/(x+1) ;
  * 1 < x ≤ 3 : même forme prolongée par mpmath.hyp2f1, contrôlée par la
    formule de connexion à deux 2F1 (ε-limite si α entier) évaluée avec
    autant de chiffres supplémentaires qu'elle en perd par annulation ;
  * −1 < x < 1 : formule de connexion sur la coupure et quadrature en valeur
    principale, qui doivent s'accorder à ORACLE_ONCUT_AGREEMENT_TOL.
"""

import logging
import math

import mpmath

from special_core.exceptions import DomainError

from .checks import agreement_tolerance, on_cut_agreement_tolerance, require_agreement, working_dps
from .hypergeometric import hyp2f1_dd
from .quadrature import jacobi_q_quadrature
from .recurrences import jacobi_p_forward
from .schemas import OracleMethod, OracleResult

logger = logging.getLogger(__name__)

# pas ε de la limite symétrique en précision étendue (erreur O(ε²))
MP_EPSILON = mpmath.mpf('1e-12')

# chiffres de garde pour la forme prolongée et pour la formule de connexion
GUARD_DIGITS = 15

INTEGER_TOL = 1e-12


def _check_parameters(j, alpha, beta, x):
    for name, value in (('j', j), ('alpha', alpha), ('beta', beta), ('x', x)):
        if not math.isfinite(value):
            raise DomainError(f"{name} non fini ({value!r})")
    if j < 0:
        raise DomainError("degré j ≥ 0 requis")
    if alpha <= -1.0 or beta <= -1.0:
        raise DomainError("α, β > −1 requis")
    if x <= -1.0:
        raise DomainError(f"x = {x} ≤ −1")


def is_integer_parameter(alpha) -> bool:
    return abs(alpha - round(alpha)) < INTEGER_TOL


def jacobi_p_mp(nu, a, b, x):
    """P_ν^{(a,b)}(x) = Γ(ν+a+1)/(Γ(ν+1)Γ(a+1)) 2F1(−ν, ν+a+b+1; a+1; (1−x)/2), en mpmath"""
    nu, a, b, x = (mpmath.mpf(v) for v in (nu, a, b, x))
    return (
        mpmath.gamma(nu + a + 1) * mpmath.rgamma(nu + 1) * mpmath.rgamma(a + 1)
        * mpmath.hyp2f1(-nu, nu + a + b + 1, a + 1, (1 - x) / 2)
    )


def jacobi_p_oracle(n, alpha, beta, x, method=None) -> OracleResult:
    """
    P_n^{(α,β)}(x) : récurrence pour n entier, série hypergéométrique
    (|1−x| < 2) sinon ou avec ``method='series'``.
    """
    _check_parameters(n, alpha, beta, x)
    integer_degree = float(n) == math.floor(float(n))
    if method is None:
        method = 'recurrence' if integer_degree else 'series'
    if method == 'recurrence':
        if not integer_degree:
            raise DomainError("la récurrence exige un degré entier")
        value, loss = jacobi_p_forward(int(n), alpha, beta, x)
        return OracleResult(value=float(value), precision_loss=loss, method=OracleMethod.RECURRENCE)
    if method != 'series':
        raise ValueError(f"méthode inconnue : {method!r}")
    w = (1.0 - x) / 2.0
    total, loss = hyp2f1_dd(-float(n), n + alpha + beta + 1.0, alpha + 1.0, w)
    with mpmath.workdps(working_dps()):
        prefactor = mpmath.gamma(n + alpha + 1) * mpmath.rgamma(n + 1) * mpmath.rgamma(alpha + 1)
        return OracleResult(value=float(prefactor * total.to_mpf()), precision_loss=loss, method=OracleMethod.SERIES)


def far_series_mp(j, alpha, beta, x):
    """Forme en 2/(1−x), x > 3 ; (valeur mpf, chiffres perdus)"""
    nu = 2 * j + alpha + beta + 1
    total, loss = hyp2f1_dd(j + 1.0, j + alpha + 1.0, nu + 1.0, 2.0 / (1.0 - x))
    x_mp = mpmath.mpf(x)
    log_prefactor = (
        -(j + alpha + 1) * mpmath.log((x_mp - 1) / 2) - beta * mpmath.log((x_mp + 1) / 2)
        + mpmath.loggamma(j + alpha + 1) + mpmath.loggamma(j + beta + 1) - mpmath.loggamma(nu + 1)
    )
    return mpmath.exp(log_prefactor) * total.to_mpf() / 2, loss


def alt_series_mp(j, alpha, beta, x):
    """Forme en 2/(x+1), x > 1 ; (valeur mpf, chiffres perdus)"""
    nu = 2 * j + alpha + beta + 1
    total, loss = hyp2f1_dd(j + 1.0, j + beta + 1.0, nu + 1.0, 2.0 / (x + 1.0))
    x_mp = mpmath.mpf(x)
    log_prefactor = (
        -(j + beta + 1) * mpmath.log((x_mp + 1) / 2) - alpha * mpmath.log((x_mp - 1) / 2)
        + mpmath.loggamma(j + alpha + 1) + mpmath.loggamma(j + beta + 1) - mpmath.loggamma(nu + 1)
    )
    return mpmath.exp(log_prefactor) * total.to_mpf() / 2, loss


def szego_mp(j, alpha, beta, x):
    """
    Forme en 2/(1−x) prolongée analytiquement par mpmath.hyp2f1, x > 1.

    Pour 1 < x ≤ 3 l'argument 2/(1−x) est ≤ −1 et la série ne converge
    plus : mpmath passe par ses transformations en 1/w (avec perturbation
    automatique quand α est entier).
    """
    j, a, b, x = (mpmath.mpf(v) for v in (j, alpha, beta, x))
    nu = 2 * j + a + b + 1
    log_prefactor = (
        -(j + a + 1) * mpmath.log((x - 1) / 2) - b * mpmath.log((x + 1) / 2)
        + mpmath.loggamma(j + a + 1) + mpmath.loggamma(j + b + 1) - mpmath.loggamma(nu + 1)
    )
    return mpmath.exp(log_prefactor) * mpmath.hyp2f1(j + 1, j + a + 1, nu + 1, 2 / (1 - x)) / 2


def _stable_szego(j, alpha, beta, x, dps):
    """(valeur, chiffres perdus) : la forme prolongée à dps et à dps + GUARD_DIGITS chiffres"""
    with mpmath.workdps(dps):
        coarse = szego_mp(j, alpha, beta, x)
    with mpmath.workdps(dps + GUARD_DIGITS):
        fine = szego_mp(j, alpha, beta, x)
        if fine == 0 or coarse == fine:
            return fine, 0.0
        difference = abs(coarse - fine) / abs(fine)
        return fine, max(0.0, dps + float(mpmath.log10(difference)))


def _connection_terms(j, a, b, x, side=0):
    """
    Les deux termes de la formule de connexion en mpmath, α = a non entier.

    side = 0 : valeur réelle (x > 1) ou fonction sur la coupure ;
    side = ±1 : valeur au bord Q(x ± i0) pour −1 < x < 1.
    """
    j, a, b, x = (mpmath.mpf(v) for v in (j, a, b, x))
    coefficient = mpmath.pi / (2 * mpmath.sin(mpmath.pi * a))
    first = jacobi_p_mp(j, a, b, x)
    second = jacobi_p_mp(j + a + b, -a, -b, x)
    if x > 1:
        return -coefficient * first, coefficient * ((x - 1) / 2) ** (-a) * ((x + 1) / 2) ** (-b) * second
    weight = ((1 - x) / 2) ** (-a) * ((1 + x) / 2) ** (-b)
    if side == 0:
        return -coefficient * mpmath.cos(mpmath.pi * a) * first, coefficient * weight * second
    return -coefficient * first, coefficient * mpmath.expjpi(-side * a) * weight * second


def _connection(j, a, b, x, side=0):
    first, second = _connection_terms(j, a, b, x, side)
    return first + second


def _connection_value(j, alpha, beta, x, side=0):
    """Connexion, avec limite symétrique en α quand α est entier"""
    if not is_integer_parameter(alpha):
        return _connection(j, alpha, beta, x, side), OracleMethod.SERIES
    center = mpmath.mpf(round(alpha))
    upper = _connection(j, center + MP_EPSILON, beta, x, side)
    lower = _connection(j, center - MP_EPSILON, beta, x, side)
    return (upper + lower) / 2, OracleMethod.EPSILON_LIMIT


def connection_loss(j, alpha, beta, x, value, side=0) -> float:
    """
    Chiffres perdus par la formule de connexion : log10(max|terme| / |valeur|).
    Aux α entiers on mesure les termes en α + ε, qui portent le facteur 1/sin πε.
    """
    a = mpmath.mpf(round(alpha)) + MP_EPSILON if is_integer_parameter(alpha) else alpha
    peak = max(abs(term) for term in _connection_terms(j, a, beta, x, side))
    if peak == 0:
        return 0.0
    if value == 0:
        return float(mpmath.mp.dps)
    return max(0.0, float(mpmath.log10(peak / abs(value))))


def jacobi_q_oracle(j, alpha, beta, x) -> OracleResult:
    """
    Q_j^{(α,β)}(x) hors coupure ou 𝖰_j^{(α,β)}(x) sur la coupure, chaque
    valeur étant contrôlée par un second chemin indépendant.
    """
    _check_parameters(j, alpha, beta, x)
    if x == 1.0:
        raise DomainError("Q est singulière en x = 1")
    dps = working_dps()
    with mpmath.workdps(dps):
        if x > 3.0:
            value, loss = far_series_mp(j, alpha, beta, x)
            check, _ = alt_series_mp(j, alpha, beta, x)
            method = OracleMethod.SERIES
            tolerance = agreement_tolerance()
        elif x > 1.0:
            value, loss = _stable_szego(j, alpha, beta, x, dps)
            method = OracleMethod.SERIES
            # la connexion soustrait deux termes en e^{±jξ} : on relève la précision d'autant
            extra = math.ceil(connection_loss(j, alpha, beta, x, value)) + GUARD_DIGITS
            logger.debug("Q_%s^(%s,%s)(%s) : connexion à %d chiffres", j, alpha, beta, x, dps + extra)
            with mpmath.workdps(dps + extra):
                check, _ = _connection_value(j, alpha, beta, x)
            tolerance = agreement_tolerance()
        else:
            value, method = _connection_value(j, alpha, beta, x)
            loss = connection_loss(j, alpha, beta, x, value)
            check = None
            if float(j) == math.floor(float(j)):
                check = jacobi_q_quadrature(int(j), alpha, beta, x).value
            tolerance = on_cut_agreement_tolerance()

        agreement = None
        if check is not None:
            agreement = require_agreement(f"Q_{j}^({alpha},{beta})({x})", value, check, tolerance)
        return OracleResult(
            value=float(value),
            precision_loss=loss,
            method=method,
            secondary_value=None if check is None else float(check),
            agreement=agreement,
        )


def jacobi_q_boundary(j, alpha, beta, x, side) -> complex:
    """Valeur au bord Q_j^{(α,β)}(x ± i0), −1 < x < 1, side = ±1"""
    _check_parameters(j, alpha, beta, x)
    if not -1.0 < x < 1.0:
        raise DomainError("les valeurs au bord n'existent que sur la coupure")
    if side not in (1, -1):
        raise ValueError("side vaut +1 ou −1")
    with mpmath.workdps(working_dps()):
        value, _ = _connection_value(j, alpha, beta, x, side)
        return complex(value)


def p_cut_from_boundary(alpha, upper, lower) -> float:
    """𝖯 = (i/π)[e^{iπα} Q(x+i0) − e^{−iπα} Q(x−i0)]"""
    with mpmath.workdps(working_dps()):
        phase = mpmath.expjpi(alpha)
        combined = 1j / mpmath.pi * (phase * upper - mpmath.conj(phase) * lower)
        return float(mpmath.re(combined))


def q_cut_from_boundary(alpha, upper, lower) -> float:
    """𝖰 = ½[e^{iπα} Q(x+i0) + e^{−iπα} Q(x−i0)]"""
    with mpmath.workdps(working_dps()):
        phase = mpmath.expjpi(alpha)
        combined = (phase * upper + mpmath.conj(phase) * lower) / 2
        return float(mpmath.re(combined))
