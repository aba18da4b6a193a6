from django.core.paginator import Paginator
from django.http import JsonResponse
from django.shortcuts import get_object_or_404
from django.views.decorators.http import require_GET

from .models import VerificationRun

RUNS_PER_PAGE = 20


def _run_summary(run) -> dict:
    return {
        'id': str(run.id),
        'command': run.command,
        'preset': run.preset,
        'function_id': run.function_id,
        'level': run.level,
        'status': run.status,
        'started_at': run.started_at.isoformat(),
        'completed_at': run.completed_at.isoformat() if run.completed_at else None,
        'records_count': run.records_count,
    }


@require_GET
def run_list(request):
    """
    Liste paginée des exécutions, filtrable par statut et sous-commande
    """
    runs = VerificationRun.objects.all()

    status_filter = request.GET.get('status')
    command_filter = request.GET.get('command')
    if status_filter:
        runs = runs.filter(status=status_filter)
    if command_filter:
        runs = runs.filter(command=command_filter)

    paginator = Paginator(runs, RUNS_PER_PAGE)
    page_obj = paginator.get_page(request.GET.get('page', 1))

    return JsonResponse({
        'count': paginator.count,
        'page': page_obj.number,
        'num_pages': paginator.num_pages,
        'results': [_run_summary(run) for run in page_obj],
    })


@require_GET
def run_detail(request, run_id):
    """
    Détail d'une exécution avec tous ses enregistrements
    """
    run = get_object_or_404(VerificationRun, id=run_id)
    payload = _run_summary(run)
    payload['parameters'] = run.parameters
    payload['errors'] = run.errors
    payload['records'] = [entry.as_dict() for entry in run.records.all()]
    return JsonResponse(payload)
