"""Ajustement log-log de l'ordre de convergence"""

import logging
import math
from typing import NamedTuple

import numpy as np
from scipy.stats import linregress

from special_core.exceptions import DomainError

from .schemas import RecordStatus

logger = logging.getLogger(__name__)

MIN_POINTS = 4

ABSCISSAE = {
    'j': lambda p: p['j'],
    'j(j+1)': lambda p: p['j'] * (p['j'] + 1.0),
    'j+1/2': lambda p: p['j'] + 0.5,
    'j(j+b)': lambda p: p['j'] * (p['j'] + p.get('alpha', 0.0) + p.get('beta', 0.0) + 1.0),
    "(j-m')(j+m'+1)": lambda p: (p['j'] - p['m_prime']) * (p['j'] + p['m_prime'] + 1.0),
    'sin(theta/2)': lambda p: math.sin(p['theta'] / 2.0),
    'sin^2(theta/2)': lambda p: math.sin(p['theta'] / 2.0) ** 2,
    'x-1': lambda p: abs(p['x'] - 1.0),
}


class ConvergenceFit(NamedTuple):
    slope: float
    intercept: float
    r_squared: float
    points: int


def fit_convergence(records, abscissa, error='rel_err') -> ConvergenceFit:
    """
    Droite des moindres carrés de log(erreur) contre log(abscisse).

    ``abscissa`` est un nom de ABSCISSAE ou une fonction des paramètres.
    """
    if isinstance(abscissa, str):
        try:
            abscissa = ABSCISSAE[abscissa]
        except KeyError:
            raise DomainError(f"abscisse inconnue '{abscissa}' (disponibles : {', '.join(ABSCISSAE)})") from None
    xs, ys = [], []
    for record in records:
        value = getattr(record, error)
        if record.status is not RecordStatus.OK or value is None or not math.isfinite(value) or value <= 0.0:
            raise DomainError(f"enregistrement inutilisable pour l'ajustement : {record.parameters} ({record.status.value})")
        xs.append(abscissa(record.parameters))
        ys.append(value)
    if len(xs) < MIN_POINTS:
        raise DomainError(f"au moins {MIN_POINTS} points requis pour l'ajustement ({len(xs)} fournis)")
    fit = linregress(np.log(xs), np.log(ys))
    logger.debug("ajustement sur %d points : pente %.4f, r² %.5f", len(xs), fit.slope, fit.rvalue ** 2)
    return ConvergenceFit(float(fit.slope), float(fit.intercept), float(fit.rvalue ** 2), len(xs))
