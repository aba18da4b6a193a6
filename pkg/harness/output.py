"""
Sorties CSV et JSON (un objet par ligne) des ErrorRecord.

Colonnes : function, level, param:<nom>..., approx, oracle, abs_err, rel_err,
err_est, status. Les flottants sont écrits en décimal le plus court qui
redonne le même double ; sans en-tête de métadonnées, deux exécutions
identiques produisent des fichiers identiques octet pour octet.
"""

import csv
import io
import json

from django.utils import timezone

VALUE_COLUMNS = ('approx', 'oracle', 'abs_err', 'rel_err', 'err_est', 'status')


def format_float(value) -> str:
    if value is None:
        return ''
    return repr(float(value))


def parameter_names(records) -> list:
    """Noms de paramètres dans l'ordre de première apparition"""
    names = []
    for record in records:
        for name in record.parameters:
            if name not in names:
                names.append(name)
    return names


def _row(record, names) -> dict:
    row = {'function': record.function, 'level': str(record.level)}
    for name in names:
        row[f'param:{name}'] = format_float(record.parameters.get(name))
    row.update({
        'approx': format_float(record.approx),
        'oracle': format_float(record.oracle),
        'abs_err': format_float(record.abs_err),
        'rel_err': format_float(record.rel_err),
        'err_est': format_float(record.err_estimate),
        'status': record.status.value,
    })
    return row


def meta_line(command) -> str:
    return f"# asymptotics {command} : {timezone.now().isoformat()}"


def records_to_csv(records, command='', meta=True) -> str:
    records = list(records)
    names = parameter_names(records)
    buffer = io.StringIO()
    if meta:
        buffer.write(meta_line(command) + '\n')
    writer = csv.DictWriter(
        buffer, fieldnames=['function', 'level', *(f'param:{n}' for n in names), *VALUE_COLUMNS],
        lineterminator='\n',
    )
    writer.writeheader()
    for record in records:
        writer.writerow(_row(record, names))
    return buffer.getvalue()


def records_to_json(records, command='', meta=True) -> str:
    lines = []
    if meta:
        lines.append(json.dumps({'meta': meta_line(command)[2:]}, ensure_ascii=False))
    for record in records:
        lines.append(json.dumps({
            'function': record.function,
            'level': record.level,
            'parameters': record.parameters,
            'approx': record.approx,
            'oracle': record.oracle,
            'abs_err': record.abs_err,
            'rel_err': record.rel_err,
            'err_est': record.err_estimate,
            'status': record.status.value,
        }, ensure_ascii=False))
    return ''.join(line + '\n' for line in lines)


def render(records, fmt='csv', command='', meta=True) -> str:
    if fmt == 'json':
        return records_to_json(records, command, meta)
    return records_to_csv(records, command, meta)


EIKONAL_COLUMNS = ('t', 'partial_wave_real', 'partial_wave_imag', 'eikonal_real', 'eikonal_imag', 'rel_diff')


def eikonal_to_csv(rows, command='', meta=True) -> str:
    buffer = io.StringIO()
    if meta:
        buffer.write(meta_line(command) + '\n')
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(EIKONAL_COLUMNS)
    for row in rows:
        writer.writerow([format_float(getattr(row, column)) for column in EIKONAL_COLUMNS])
    return buffer.getvalue()


def eikonal_to_json(rows, command='', meta=True) -> str:
    lines = []
    if meta:
        lines.append(json.dumps({'meta': meta_line(command)[2:]}, ensure_ascii=False))
    lines.extend(json.dumps(row.model_dump(), ensure_ascii=False) for row in rows)
    return ''.join(line + '\n' for line in lines)
