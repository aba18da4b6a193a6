"""
Cartes d'erreur : une évaluation par point de grille, comparée à l'oracle.

Les points sont parcourus dans l'ordre lexicographique des grilles (la
dernière grille varie le plus vite). Une exception sur un point devient un
enregistrement avec le statut correspondant ; la carte n'est jamais
interrompue.
"""

import itertools
import logging

from special_core.exceptions import (
    AsymptoticsError, ConvergenceError, DomainError, InvalidIndexError, OracleInconsistencyError, RegionError,
    TruncationError,
)

from .registry import get_function
from .schemas import ErrorRecord, RecordStatus

logger = logging.getLogger(__name__)

_STATUSES = (
    (OracleInconsistencyError, RecordStatus.ORACLE_ERROR),
    (InvalidIndexError, RecordStatus.INDEX_ERROR),
    (RegionError, RecordStatus.REGION_ERROR),
    (TruncationError, RecordStatus.TRUNCATION_ERROR),
    (ConvergenceError, RecordStatus.CONVERGENCE_ERROR),
    (DomainError, RecordStatus.DOMAIN_ERROR),
)


def status_of(error) -> RecordStatus:
    for kind, status in _STATUSES:
        if isinstance(error, kind):
            return status
    raise error


def evaluate_point(function_id, parameters, level) -> ErrorRecord:
    """Un enregistrement pour un jeu de paramètres"""
    entry = get_function(function_id)
    try:
        approximant = entry.approximate(parameters, level)
        reference = entry.reference(parameters)
    except AsymptoticsError as e:
        status = status_of(e)
        logger.info("⚠️ %s %s : %s (%s)", function_id, parameters, status.value, e)
        return ErrorRecord.failed(function_id, level, parameters, status)
    return ErrorRecord.measured(
        function_id, level, parameters,
        approx=approximant.value, oracle=reference, err_estimate=approximant.err_estimate,
    )


def run_error_map(function_id, grids, level, fixed=None):
    """
    Génère les ErrorRecord de ``function_id`` sur le produit des grilles.

    ``fixed`` fournit les paramètres constants (par exemple theta = 0.1).
    """
    entry = get_function(function_id)
    if level > entry.max_level:
        raise TruncationError(f"{function_id} : niveau {level} > {entry.max_level}")
    fixed = dict(fixed or {})
    names = [grid.name for grid in grids]
    logger.debug("carte %s niveau %s sur %s (fixés : %s)", function_id, level, names, fixed)
    for values in itertools.product(*(grid.points() for grid in grids)):
        parameters = {**fixed, **dict(zip(names, values))}
        yield evaluate_point(function_id, parameters, level)
