"""
Réglages des oracles et contrôle d'accord entre deux méthodes.

Les tolérances viennent de ``django.conf.settings`` (lues via decouple dans
le module de settings).
"""

import logging
import math

from django.conf import settings

from special_core.exceptions import OracleInconsistencyError

logger = logging.getLogger(__name__)


def working_dps() -> int:
    return int(getattr(settings, 'ORACLE_WORKING_DPS', 40))


def agreement_tolerance() -> float:
    return float(getattr(settings, 'ORACLE_AGREEMENT_TOL', 1e-10))


def on_cut_agreement_tolerance() -> float:
    return float(getattr(settings, 'ORACLE_ONCUT_AGREEMENT_TOL', 1e-8))


def relative_difference(first, second) -> float:
    scale = max(abs(first), abs(second))
    if scale == 0.0:
        return 0.0
    return abs(first - second) / scale


def require_agreement(label, first, second, tolerance=None) -> float:
    """
    Vérifie que deux évaluations indépendantes s'accordent.

    Retourne l'écart relatif ; lève OracleInconsistencyError au-delà de la
    tolérance (par défaut ORACLE_AGREEMENT_TOL).
    """
    tolerance = agreement_tolerance() if tolerance is None else tolerance
    difference = relative_difference(float(first), float(second))
    if not math.isfinite(difference) or difference > tolerance:
        logger.error("❌ Oracle %s incohérent : %r contre %r (écart %.3e)", label, first, second, difference)
        raise OracleInconsistencyError(
            f"{label} : les deux méthodes diffèrent de {difference:.3e} (tolérance {tolerance:.1e})",
            values={'first': float(first), 'second': float(second), 'difference': difference},
        )
    logger.debug("Oracle %s : accord %.3e", label, difference)
    return difference


def cancellation_digits(terms, result) -> float:
    """log10(max|terme| / |résultat|), borné inférieurement par 0"""
    peak = max((abs(float(t)) for t in terms), default=0.0)
    magnitude = abs(float(result))
    if peak == 0.0:
        return 0.0
    if magnitude == 0.0:
        return 16.0
    return max(0.0, math.log10(peak / magnitude))
