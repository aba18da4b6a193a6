"""
Valeurs de référence des fonctions de Legendre.

Degré et ordre entiers : récurrence en double-double. Degré réel : série
hypergéométrique P_j^μ = |(1+x)/(1−x)|^{μ/2} 2F1(−j, j+1; 1−μ; (1−x)/2)/Γ(1−μ).
Sur la coupure ce sont les fonctions de Ferrers (phase de Condon–Shortley).
"""

import logging
import math
from fractions import Fraction

import mpmath

from special_core.exceptions import DomainError
from special_core.precision import DoubleDouble

from .checks import working_dps
from .hypergeometric import hyp2f1_dd
from .recurrences import legendre_p_fixed_order, legendre_q_forward
from .schemas import OracleMethod, OracleResult

logger = logging.getLogger(__name__)

# au-delà, la récurrence avant de Q hors coupure cède la place à la série en 1/x²
MAX_RECURRENCE_LOSS = 14.0


def _is_integer(value) -> bool:
    return float(value) == math.floor(float(value))


def _p_recurrence(n, mu, x) -> OracleResult:
    m = abs(int(mu))
    value, loss = legendre_p_fixed_order(n, m, x)
    if mu < 0:
        # P^{−m} = (n−m)!/(n+m)! P^m, avec (−1)^m sur la coupure
        ratio = Fraction(math.factorial(n - m), math.factorial(n + m))
        value = value * DoubleDouble.coerce(ratio.numerator) / DoubleDouble.coerce(ratio.denominator)
        if x <= 1.0 and m % 2:
            value = -value
    return OracleResult(value=float(value), precision_loss=loss, method=OracleMethod.RECURRENCE)


def _p_series(j, mu, x) -> OracleResult:
    w = (1.0 - x) / 2.0
    if abs(w) >= 1.0:
        raise DomainError(f"série hypergéométrique divergente pour x = {x}")
    order = mu
    flip = None
    if mu > 0 and _is_integer(mu):
        # 1/Γ(1−m) = 0 : on passe par l'ordre −m
        flip = int(mu)
        order = -mu
    total, loss = hyp2f1_dd(-j, j + 1.0, 1.0 - order, w)
    with mpmath.workdps(working_dps()):
        x_mp = mpmath.mpf(x)
        prefactor = abs((1 + x_mp) / (1 - x_mp)) ** (mpmath.mpf(order) / 2) * mpmath.rgamma(1 - mpmath.mpf(order))
        value = prefactor * total.to_mpf()
        if flip is not None:
            value *= mpmath.gamma(j + flip + 1) * mpmath.rgamma(j - flip + 1)
            if x < 1.0 and flip % 2:
                value = -value
        return OracleResult(value=float(value), precision_loss=loss, method=OracleMethod.SERIES)


def legendre_p_oracle(j, mu, x, method=None) -> OracleResult:
    """
    P_j^μ(x) (x > 1) ou 𝖯_j^μ(x) (−1 < x ≤ 1).

    ``method`` force 'recurrence' (j, μ entiers, |μ| ≤ j) ou 'series'
    (|1−x| < 2) ; par défaut la récurrence quand elle s'applique.
    """
    if not (math.isfinite(j) and math.isfinite(mu) and math.isfinite(x)):
        raise DomainError("paramètres non finis")
    if x <= -1.0:
        raise DomainError(f"x = {x} ≤ −1")
    integer_case = _is_integer(j) and _is_integer(mu) and abs(mu) <= j
    if method is None:
        method = 'recurrence' if integer_case else 'series'
    if method == 'recurrence':
        if not integer_case:
            raise DomainError("la récurrence exige j, μ entiers et |μ| ≤ j")
        return _p_recurrence(int(j), int(mu), x)
    if method == 'series':
        return _p_series(float(j), float(mu), x)
    raise ValueError(f"méthode inconnue : {method!r}")


def _q_series(n, x) -> OracleResult:
    """Q_n(x) = √π n!/(Γ(n+3/2)(2x)^{n+1}) 2F1((n+1)/2, (n+2)/2; n+3/2; 1/x²), x > 1"""
    total, loss = hyp2f1_dd((n + 1) / 2.0, (n + 2) / 2.0, n + 1.5, 1.0 / (x * x))
    with mpmath.workdps(working_dps()):
        prefactor = (
            mpmath.sqrt(mpmath.pi) * mpmath.factorial(n) * mpmath.rgamma(n + mpmath.mpf(3) / 2)
            / (2 * mpmath.mpf(x)) ** (n + 1)
        )
        return OracleResult(value=float(prefactor * total.to_mpf()), precision_loss=loss, method=OracleMethod.SERIES)


def legendre_q_oracle(n, x, method=None) -> OracleResult:
    """
    Q_n(x) (x > 1) ou 𝖰_n(x) (−1 < x < 1), n entier.

    Par défaut : récurrence avant depuis Q_0, Q_1 ; hors coupure, si la perte
    dépasse MAX_RECURRENCE_LOSS chiffres, la série en 1/x² prend le relais.
    """
    if x <= -1.0 or x == 1.0:
        raise DomainError(f"Q_n non défini en x = {x}")
    if n == 0 and method is None:
        value = 0.5 * math.log(abs((1.0 + x) / (1.0 - x)))
        return OracleResult(value=value, precision_loss=0.0, method=OracleMethod.CLOSED_FORM)
    if method == 'series':
        if x < 1.0:
            raise DomainError("la série en 1/x² n'existe que pour x > 1")
        return _q_series(n, x)
    if method not in (None, 'recurrence'):
        raise ValueError(f"méthode inconnue : {method!r}")
    value, loss = legendre_q_forward(n, x)
    if method is None and x > 1.0 and loss > MAX_RECURRENCE_LOSS:
        logger.debug("Q_%d(%s) : perte %.1f chiffres, bascule vers la série", n, x, loss)
        return _q_series(n, x)
    return OracleResult(value=float(value), precision_loss=loss, method=OracleMethod.RECURRENCE)
