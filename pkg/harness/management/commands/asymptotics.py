"""
python manage.py asymptotics <sous-commande> [options]

Codes de sortie : 0 succès, 1 échec d'un contrôle ou erreur d'usage,
2 incohérence d'oracle, 3 erreur de région dans ``eval``.
"""

import logging
from fractions import Fraction
from pathlib import Path

import numpy as np
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from django.urls import reverse
from pydantic import ValidationError

from harness.eikonal import eikonal_demo
from harness.error_map import run_error_map
from harness.fitting import ABSCISSAE, fit_convergence
from harness.macdonald import DEFAULT_THETAS, compare_macdonald
from harness.output import eikonal_to_csv, eikonal_to_json, render
from harness.presets import PRESETS
from harness.registry import get_function
from harness.schemas import EikonalModel, ErrorRecord, GridSpec, RecordStatus
from harness.services import save_run
from harness.tables import verify_tables
from special_core.exceptions import AsymptoticsError, DomainError, OracleInconsistencyError, RegionError

logger = logging.getLogger(__name__)

SUBCOMMANDS = (
    'eval', 'error-map', 'convergence', 'compare-macdonald', 'eikonal-demo', 'verify-tables', 'preset',
)
ORACLE_EXIT = 2
REGION_EXIT = 3


def parse_parameters(items) -> dict:
    """['j=10', 'm=3/2'] -> {'j': 10.0, 'm': 1.5}"""
    parameters = {}
    for item in items or ():
        name, sep, value = item.partition('=')
        if not sep or not name.strip():
            raise DomainError(f"paramètre '{item}' : forme attendue nom=valeur")
        try:
            parameters[name.strip()] = float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError) as e:
            raise DomainError(f"paramètre '{item}' : valeur non numérique") from e
    return parameters


class Command(BaseCommand):
    help = "Banc de vérification des développements asymptotiques en fonctions de Bessel"

    def add_arguments(self, parser):
        parser.add_argument('subcommand', choices=SUBCOMMANDS)
        parser.add_argument('--function', dest='function_id', help="Identifiant de fonction (voir le registre)")
        parser.add_argument('--level', type=int, default=0, help="Niveau de troncature")
        parser.add_argument('--grid', action='append', default=[], help="nom=min:max:count[:lin|log] ou nom=v1,v2,...")
        parser.add_argument('--param', action='append', default=[], help="Paramètre fixé nom=valeur")
        parser.add_argument('--abscissa', default='j(j+1)', choices=sorted(ABSCISSAE))
        parser.add_argument('--j-max', type=int, default=150, help="Troncature de la somme en ondes partielles")
        parser.add_argument('--preset', default='all', help="Nom du preset, ou 'all'")
        parser.add_argument('--out', help="Fichier de sortie (relatif à HARNESS_OUTPUT_DIR)")
        parser.add_argument('--format', dest='fmt', choices=('csv', 'json'), default='csv')
        parser.add_argument('--no-meta', action='store_true', help="Sans ligne d'en-tête horodatée")
        parser.add_argument('--save', action='store_true', help="Enregistre l'exécution en base")

    def handle(self, *args, **options):
        self.options = options
        handler = getattr(self, 'handle_' + options['subcommand'].replace('-', '_'))
        try:
            handler()
        except OracleInconsistencyError as e:
            raise CommandError(f"❌ Incohérence d'oracle : {e}", returncode=ORACLE_EXIT) from e
        except AsymptoticsError as e:
            raise CommandError(f"❌ {e}") from e
        except ValidationError as e:
            raise CommandError(f"❌ Paramètres invalides : {e.errors()[0]['msg']}") from e

    # sorties

    def emit(self, text):
        out = self.options['out']
        if not out:
            self.stdout.write(text, ending='')
            return
        path = Path(out)
        if not path.is_absolute():
            path = Path(settings.HARNESS_OUTPUT_DIR) / path
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
        self.stdout.write(self.style.SUCCESS(f"💾 Résultats écrits dans {path}"))

    def emit_records(self, records):
        self.emit(render(records, self.options['fmt'], self.options['subcommand'], not self.options['no_meta']))

    def save(self, records, errors=None, **fields):
        if not self.options['save']:
            return
        run = save_run(
            self.options['subcommand'], records,
            function_id=self.options['function_id'] or '',
            parameters={'grid': self.options['grid'], 'param': self.options['param']},
            errors=errors, **fields,
        )
        self.stdout.write(self.style.SUCCESS(f"💾 Exécution {run.id} enregistrée"))
        self.stdout.write(f"🔗 Consultable sur {reverse('harness:run_detail', args=[run.id])} (runserver) ou dans /admin")

    def grids(self):
        return [GridSpec.parse(text) for text in self.options['grid']]

    def require_function(self):
        if not self.options['function_id']:
            raise CommandError("❌ --function est requis pour cette sous-commande")
        return get_function(self.options['function_id'])

    def oracle_failures(self, records):
        return [r for r in records if r.status is RecordStatus.ORACLE_ERROR]

    # sous-commandes

    def handle_eval(self):
        entry = self.require_function()
        level = self.options['level']
        parameters = parse_parameters(self.options['param'])
        if level > entry.max_level:
            raise CommandError(f"❌ {entry.name} : niveau {level} > {entry.max_level}")
        try:
            approximant = entry.approximate(parameters, level)
            reference = entry.reference(parameters)
        except RegionError as e:
            raise CommandError(f"❌ Hors région : {e}", returncode=REGION_EXIT) from e
        record = ErrorRecord.measured(
            entry.name, level, parameters,
            approx=approximant.value, oracle=reference, err_estimate=approximant.err_estimate,
        )
        self.emit_records([record])
        self.save([record], level=level)

    def handle_error_map(self):
        entry = self.require_function()
        records = list(run_error_map(
            entry.name, self.grids(), self.options['level'], fixed=parse_parameters(self.options['param']),
        ))
        self.emit_records(records)
        failures = self.oracle_failures(records)
        self.save(records, level=self.options['level'],
                  errors={'oracle_error': len(failures)} if failures else None)
        if failures:
            raise CommandError(f"❌ {len(failures)} points en incohérence d'oracle", returncode=ORACLE_EXIT)
        self.stdout.write(self.style.SUCCESS(f"✅ {len(records)} points évalués"))

    def handle_convergence(self):
        entry = self.require_function()
        records = list(run_error_map(
            entry.name, self.grids(), self.options['level'], fixed=parse_parameters(self.options['param']),
        ))
        if self.options['out']:
            self.emit_records(records)
        fit = fit_convergence(records, self.options['abscissa'])
        self.stdout.write(self.style.SUCCESS(
            f"📊 {entry.name} niveau {self.options['level']} : pente {fit.slope!r} en {self.options['abscissa']}, "
            f"ordonnée {fit.intercept!r}, r² {fit.r_squared!r} ({fit.points} points)"
        ))
        self.save(records, level=self.options['level'])

    def handle_compare_macdonald(self):
        parameters = parse_parameters(self.options['param'])
        grids = self.grids()
        comparison = compare_macdonald(
            j=parameters.get('j', 50.0),
            thetas=grids[0] if grids else DEFAULT_THETAS,
            level=self.options['level'],
        )
        records = comparison.ours + comparison.macdonald
        self.emit_records(records)
        self.stdout.write(f"📊 pente (z) : {comparison.ours_fit.slope!r}")
        self.stdout.write(f"📊 pente (MacDonald) : {comparison.macdonald_fit.slope!r}")
        self.stdout.write(f"📊 écart des pentes en sin²(θ/2) : {comparison.slope_gap!r}")
        style = self.style.SUCCESS if comparison.pointwise_smaller else self.style.WARNING
        marker = '✅' if comparison.pointwise_smaller else '⚠️'
        self.stdout.write(style(f"{marker} erreur ponctuellement plus petite : {comparison.pointwise_smaller}"))
        self.save(records, level=self.options['level'])

    def handle_eikonal_demo(self):
        parameters = parse_parameters(self.options['param'])
        model = EikonalModel(
            p=parameters.get('p', 10.0), chi0=parameters.get('chi0', 1.0), width=parameters.get('width', 1.0),
        )
        grids = self.grids()
        t_values = grids[0].points() if grids else tuple(np.linspace(-2.0, 0.0, 9))
        rows = eikonal_demo(model, t_values, self.options['j_max'])
        render_rows = eikonal_to_json if self.options['fmt'] == 'json' else eikonal_to_csv
        self.emit(render_rows(rows, 'eikonal-demo', not self.options['no_meta']))
        worst = max(row.rel_diff for row in rows)
        self.stdout.write(f"📊 écart relatif max : {worst!r}")

    def handle_verify_tables(self):
        report = verify_tables()
        for line in report.lines():
            self.stdout.write(line)
        if not report.passed:
            raise CommandError("❌ Tables de coefficients incohérentes")
        self.stdout.write(self.style.SUCCESS("✅ Tables de coefficients vérifiées"))

    def handle_preset(self):
        name = self.options['preset']
        if name == 'all':
            selected = list(PRESETS.values())
        elif name in PRESETS:
            selected = [PRESETS[name]]
        else:
            raise CommandError(f"❌ preset inconnu '{name}' (disponibles : all, {', '.join(PRESETS)})")

        results = []
        for preset in selected:
            logger.info("preset %s : %s", preset.name, preset.description)
            result = preset.run()
            results.append(result)
            style = self.style.SUCCESS if result.passed else self.style.ERROR
            self.stdout.write(style(f"{'✅' if result.passed else '❌'} {preset.name} : {preset.description}"))
            for line in result.lines:
                self.stdout.write(f"   {line}")

        records = [record for result in results for record in result.records]
        if self.options['out']:
            self.emit_records(records)
        failed = [result.name for result in results if not result.passed]
        self.save(records, preset=name, errors={'failed': failed} if failed else None)

        if any(result.oracle_failure for result in results):
            raise CommandError("❌ Incohérence d'oracle", returncode=ORACLE_EXIT)
        if failed:
            raise CommandError(f"❌ Presets en échec : {', '.join(failed)}")
        self.stdout.write(self.style.SUCCESS(f"✅ {len(results)} preset(s) réussi(s)"))
