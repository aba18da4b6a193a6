"""
Moteur commun des séries de Bessel de première espèce.

Legendre, Jacobi et fonctions de rotation partagent la même somme

    S = Σ_{m ≤ level} Σ_k (−c_{m,k}) w^m u^{k−m} E_{ν+k}(u),

w = (1−x)/2, u = Λw, Λ = j(j+b), E_ν la fonction de Bessel réduite.
Comme k ≥ m+1 pour m ≥ 1, aucune puissance négative de u n'apparaît :
la somme reste finie quand j → 0 et des deux côtés de x = 1.
"""

import logging
from typing import NamedTuple

import mpmath

from special_core.bessel import reduced_bessel

from .coefficients import coefficient_table

logger = logging.getLogger(__name__)


class SeriesSum(NamedTuple):
    value: float
    err_estimate: float
    terms_used: int


def series_group(order, u, w, table, m) -> tuple[float, int]:
    """Contribution du groupe m et nombre de fonctions de Bessel évaluées"""
    total = 0.0
    count = 0
    wm = w ** m
    for k, c in table.float_group(m):
        total += -c * wm * u ** (k - m) * reduced_bessel(order + k, u)
        count += 1
    return total, count


def p_series(order, lam, w, b, level) -> SeriesSum:
    """
    Somme tronquée au niveau ``level`` ; l'estimation d'erreur est la
    valeur absolue du groupe level+1.
    """
    table = coefficient_table(b, max_order=level + 1)
    u = lam * w
    value = 0.0
    terms = 0
    for m in range(level + 1):
        contribution, count = series_group(order, u, w, table, m)
        value += contribution
        terms += count
    omitted, _ = series_group(order, u, w, table, level + 1)
    return SeriesSum(value, abs(omitted), terms)


def p_series_offset_mp(order, lam, w, b, max_offset, dps=40):
    """
    Somme de tous les termes de décalage k ≤ max_offset, tous ordres m
    confondus, en précision mpmath.

    Les termes de décalage k commencent en w^k : cette troncature
    reproduit donc la série hypergéométrique exactement jusqu'à w^max_offset.
    """
    max_order = max(max_offset - 1, 0)
    table = coefficient_table(b, max_order=max_order)
    with mpmath.workdps(dps):
        order = mpmath.mpf(order)
        lam = mpmath.mpf(lam)
        w = mpmath.mpf(w)
        u = lam * w
        total = mpmath.mpf(0)
        for (m, k), c in table.items():
            if k > max_offset:
                continue
            reduced = mpmath.hyp0f1(order + k + 1, -u) * mpmath.rgamma(order + k + 1)
            total += -mpmath.mpf(c.numerator) / c.denominator * w ** m * u ** (k - m) * reduced
        logger.debug("série tronquée en décalage %d : %s", max_offset, total)
        return +total
