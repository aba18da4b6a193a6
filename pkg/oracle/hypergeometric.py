"""
Série de Gauss 2F1 sommée en double-double.

Le terme courant est mis à jour par le rapport (a+n)(b+n)w/((c+n)(n+1)) ;
la sommation s'arrête quand deux termes consécutifs tombent sous
1e-25 fois la somme partielle, ou quand la série se termine.
"""

import logging
import math

import mpmath

from special_core.exceptions import ConvergenceError, DomainError
from special_core.precision import DoubleDouble

from .schemas import OracleMethod, OracleResult

logger = logging.getLogger(__name__)

RELATIVE_CUTOFF = 1e-25
MAX_TERMS = 200_000


def is_nonpositive_integer(a) -> bool:
    return a <= 0 and a == math.floor(a)


def hyp2f1_dd(a, b, c, w) -> tuple[DoubleDouble, float]:
    """(somme double-double, chiffres perdus) de 2F1(a, b; c; w)"""
    for name, value in (('a', a), ('b', b), ('c', c), ('w', w)):
        if not math.isfinite(value):
            raise DomainError(f"2F1 : {name} non fini ({value!r})")
    if is_nonpositive_integer(c):
        raise DomainError(f"2F1 : c = {c} est un entier négatif ou nul")
    terminating = is_nonpositive_integer(a) or is_nonpositive_integer(b)
    if not terminating and abs(w) >= 1.0:
        raise ConvergenceError(f"2F1 : |w| = {abs(w)} ≥ 1 pour une série non terminée")

    a_dd, b_dd, c_dd = DoubleDouble(a), DoubleDouble(b), DoubleDouble(c)
    term = DoubleDouble(1.0)
    total = DoubleDouble(1.0)
    peak = 1.0
    small = 0
    for n in range(MAX_TERMS):
        term = term * (a_dd + n) * (b_dd + n) / ((c_dd + n) * (n + 1)) * w
        if not term:
            break
        total = total + term
        peak = max(peak, abs(float(total)))
        if abs(float(term)) < RELATIVE_CUTOFF * abs(float(total)):
            small += 1
            if small == 2:
                break
        else:
            small = 0
    else:
        raise ConvergenceError(f"2F1({a}, {b}; {c}; {w}) : pas de convergence en {MAX_TERMS} termes")

    magnitude = abs(float(total))
    loss = 16.0 if magnitude == 0.0 else max(0.0, math.log10(peak / magnitude))
    return total, loss


def hyp2f1(a, b, c, w) -> OracleResult:
    """2F1(a, b; c; w) pour |w| < 1 ou série terminée"""
    total, loss = hyp2f1_dd(a, b, c, w)
    logger.debug("2F1(%s, %s; %s; %s) = %r", a, b, c, w, total)
    return OracleResult(value=float(total), precision_loss=loss, method=OracleMethod.SERIES)


def hyp2f1_truncated(a, b, c, w, max_power, dps=40):
    """Polynôme Σ_{n ≤ max_power} (a)_n (b)_n w^n / ((c)_n n!) en mpmath"""
    with mpmath.workdps(dps):
        a, b, c, w = (mpmath.mpf(v) for v in (a, b, c, w))
        term = mpmath.mpf(1)
        total = mpmath.mpf(1)
        for n in range(max_power):
            term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * w
            total += term
        return +total


def legendre_p_hypergeometric(j, mu, x, max_power, dps=40):
    """
    ((1−x)/(1+x))^{μ/2} / Γ(1+μ) · 2F1(−j, j+1; 1+μ; (1−x)/2) tronquée à w^max_power,
    tous les paramètres formés en mpmath à dps chiffres
    """
    with mpmath.workdps(dps):
        j, mu, x = (mpmath.mpf(v) for v in (j, mu, x))
        prefactor = ((1 - x) / (1 + x)) ** (mu / 2) * mpmath.rgamma(1 + mu)
        return prefactor * hyp2f1_truncated(-j, j + 1, 1 + mu, (1 - x) / 2, max_power, dps=dps)
