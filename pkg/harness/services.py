"""Persistance des exécutions du banc (uniquement avec --save)"""

import logging
import math

from django.db import transaction
from django.utils import timezone

from .models import ErrorRecordEntry, VerificationRun

logger = logging.getLogger(__name__)


def _stored(value):
    # FloatField n'accepte pas nan/inf de façon portable
    if value is None or not math.isfinite(value):
        return None
    return float(value)


def save_run(command, records, preset='', function_id='', level=None, parameters=None, errors=None):
    """
    Enregistre une exécution et ses ErrorRecord.

    Le statut final vaut 'failed' si ``errors`` est fourni, 'completed' sinon.
    """
    records = list(records)
    with transaction.atomic():
        run = VerificationRun.objects.create(
            command=command,
            preset=preset or '',
            function_id=function_id or '',
            level=level,
            status='running',
            parameters=parameters or {},
        )
        ErrorRecordEntry.objects.bulk_create([
            ErrorRecordEntry(
                run=run,
                position=position,
                function=record.function,
                level=record.level,
                parameters=record.parameters,
                approx=_stored(record.approx),
                oracle=_stored(record.oracle),
                abs_err=_stored(record.abs_err),
                rel_err=_stored(record.rel_err),
                err_estimate=_stored(record.err_estimate),
                status=record.status.value,
            )
            for position, record in enumerate(records)
        ])
        run.status = 'failed' if errors else 'completed'
        run.errors = errors
        run.records_count = len(records)
        run.completed_at = timezone.now()
        run.save()
    logger.info("💾 exécution %s enregistrée : %s enregistrements", run.id, len(records))
    return run
