"""
Somme factorielle des fonctions de rotation d^j_{m′m}(θ), conventions
d'Edmonds (rotations passives) :

    d = Σ_s (−1)^s √[(j+m′)!(j−m′)!(j+m)!(j−m)!] cos^{2j+m−m′−2s}(θ/2) sin^{m′−m+2s}(θ/2)
        / [(j+m−s)! s! (m′−m+s)! (j−m′−s)!].

Les indices sont des demi-entiers ; tout est calculé en mpmath.
"""

import logging
import math

import mpmath

from special_core.exceptions import DomainError, InvalidIndexError

from .checks import cancellation_digits, working_dps
from .schemas import OracleMethod, OracleResult

logger = logging.getLogger(__name__)

MAX_J = 15


def twice(value) -> int:
    """2·value pour un entier ou demi-entier, exactement"""
    doubled = 2 * float(value)
    rounded = round(doubled)
    if abs(doubled - rounded) > 1e-9:
        raise InvalidIndexError(f"{value!r} n'est ni entier ni demi-entier")
    return int(rounded)


def wigner_d_factorial_oracle(j, m_prime, m, theta) -> OracleResult:
    """d^j_{m′m}(θ) par la somme factorielle, j ≤ 15"""
    j2, mp2, m2 = twice(j), twice(m_prime), twice(m)
    if j2 < 0 or abs(mp2) > j2 or abs(m2) > j2 or (j2 - mp2) % 2 or (j2 - m2) % 2:
        raise InvalidIndexError(f"indices invalides j={j}, m′={m_prime}, m={m}")
    if j2 > 2 * MAX_J:
        raise DomainError(f"j = {j} au-delà de l'enveloppe de la somme factorielle ({MAX_J})")

    jpm, jmm = (j2 + m2) // 2, (j2 - m2) // 2
    jpmp, jmmp = (j2 + mp2) // 2, (j2 - mp2) // 2
    diff = (mp2 - m2) // 2
    with mpmath.workdps(working_dps()):
        half = mpmath.mpf(theta) / 2
        cosine, sine = mpmath.cos(half), mpmath.sin(half)
        root = mpmath.sqrt(mpmath.factorial(jpmp) * mpmath.factorial(jmmp) * mpmath.factorial(jpm) * mpmath.factorial(jmm))
        terms = []
        for s in range(max(0, -diff), min(jpm, jmmp) + 1):
            denominator = (
                math.factorial(jpm - s) * math.factorial(s)
                * math.factorial(diff + s) * math.factorial(jmmp - s)
            )
            power_cos = jpm + jmmp - 2 * s
            power_sin = diff + 2 * s
            term = (-1) ** s * root * cosine ** power_cos * sine ** power_sin / denominator
            terms.append(term)
        total = mpmath.fsum(terms)
        loss = cancellation_digits(terms, total) if terms else 0.0
        return OracleResult(value=float(total), precision_loss=loss, method=OracleMethod.SERIES)
