"""
Récurrences à trois termes en double-double.

La perte de précision d'une récurrence est la somme, pas à pas, des
chiffres perdus par annulation : pour Q hors coupure (récurrence avant
instable) elle mesure l'amplification totale des erreurs d'arrondi.
"""

import logging
import math

import mpmath

from special_core.exceptions import DomainError
from special_core.precision import DoubleDouble

from .checks import cancellation_digits

logger = logging.getLogger(__name__)

MAX_DEGREE = 200


def _check_degree(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"degré entier ≥ 0 attendu (reçu {n!r})")
    if n > MAX_DEGREE:
        raise DomainError(f"degré {n} au-delà de {MAX_DEGREE}")


def legendre_p_fixed_order(n, m, x) -> tuple[DoubleDouble, float]:
    """
    𝖯_n^m(x) sur la coupure (phase de Condon–Shortley) ou P_n^m(x) pour
    x > 1, m ≥ 0 entier, par récurrence avant en n à m fixé.
    """
    _check_degree(n)
    if m < 0:
        raise DomainError("ordre m ≥ 0 attendu")
    if x <= -1.0:
        raise DomainError(f"x = {x} ≤ −1")
    if m > n:
        return DoubleDouble(0.0), 0.0
    on_cut = x <= 1.0
    with mpmath.workprec(160):
        s = mpmath.sqrt(abs(1 - mpmath.mpf(x) ** 2))
        start = mpmath.fac2(2 * m - 1) * s ** m if m else mpmath.mpf(1)
        if on_cut and m % 2:
            start = -start
    previous = DoubleDouble.from_mpf(start)
    if n == m:
        return previous, 0.0
    current = previous * (2 * m + 1) * x
    loss = 0.0
    for k in range(m + 1, n):
        first = current * (2 * k + 1) * x
        second = previous * (k + m)
        following = (first - second) / (k - m + 1)
        loss = max(loss, cancellation_digits((first, second), first - second))
        previous, current = current, following
    return current, loss


def _q_starts(x):
    with mpmath.workprec(160):
        x_mp = mpmath.mpf(x)
        q0 = mpmath.log(abs((1 + x_mp) / (1 - x_mp))) / 2
        q1 = x_mp * q0 - 1
        return DoubleDouble.from_mpf(q0), DoubleDouble.from_mpf(q1)


def legendre_q_forward(n, x) -> tuple[DoubleDouble, float]:
    """
    Q_n(x) (x > 1) ou 𝖰_n(x) (−1 < x < 1) à partir de
    Q_0 = ½ln|(1+x)/(1−x)|, Q_1 = xQ_0 − 1 et (k+1)Q_{k+1} = (2k+1)xQ_k − kQ_{k−1}.
    """
    _check_degree(n)
    if x <= -1.0 or x == 1.0:
        raise DomainError(f"Q_n non défini en x = {x}")
    previous, current = _q_starts(x)
    if n == 0:
        return previous, 0.0
    loss = 0.0
    for k in range(1, n):
        first = current * (2 * k + 1) * x
        second = previous * k
        following = (first - second) / (k + 1)
        loss += cancellation_digits((first, second), first - second)
        previous, current = current, following
    return current, loss


def jacobi_p_forward(n, alpha, beta, x) -> tuple[DoubleDouble, float]:
    """
    P_n^{(α,β)}(x) par la récurrence standard, P_1 = (α+1) + (α+β+2)(x−1)/2.
    """
    _check_degree(n)
    if alpha <= -1.0 or beta <= -1.0:
        raise DomainError("α, β > −1 requis")
    a = DoubleDouble(alpha)
    b = DoubleDouble(beta)
    previous = DoubleDouble(1.0)
    if n == 0:
        return previous, 0.0
    current = (a + 1) + (a + b + 2) * (DoubleDouble(x) - 1) / 2
    loss = 0.0
    ab = a + b
    squares = a * a - b * b
    for k in range(2, n + 1):
        s = ab + 2 * k
        left = (s - 1) * (s * (s - 2) * x + squares)
        first = left * current
        second = 2 * (a + (k - 1)) * (b + (k - 1)) * s * previous
        denominator = 2 * k * (ab + k) * (s - 2)
        following = (first - second) / denominator
        loss = max(loss, cancellation_digits((first, second), first - second))
        previous, current = current, following
    return current, loss
