import math
import uuid

import numpy as np
import pytest
from django.test import Client
from django.urls import reverse

from harness.eikonal import eikonal_amplitude, eikonal_demo, partial_wave_amplitude, total_cross_section
from harness.error_map import run_error_map
from harness.macdonald import compare_macdonald
from harness.models import ErrorRecordEntry, VerificationRun
from harness.presets import PRESETS
from harness.schemas import EikonalModel, ErrorRecord, GridSpec, RecordStatus
from harness.services import save_run

DEGREES = GridSpec(name='j', values=(10.0, 20.0, 40.0, 80.0))


@pytest.mark.integration
class TestErrorMapIntegration:
    """
    Test d'intégration: cartes d'erreur contre les oracles
    """

    def test_legendre_errors_decrease_at_fixed_z(self):
        records = list(run_error_map('legendre_p', [DEGREES], 1, fixed={'mu': 0.0, 'z': 3.0}))
        assert all(r.status is RecordStatus.OK for r in records)
        errors = [r.rel_err for r in records]
        assert errors == sorted(errors, reverse=True)

    def test_jacobi_near_reduces_to_legendre(self):
        grids = [GridSpec(name='j', values=(10.0, 20.0, 40.0))]
        fixed = {'x': 1.02}
        jacobi = list(run_error_map('jacobi_q_near', grids, 0, fixed={**fixed, 'alpha': 0.0, 'beta': 0.0}))
        legendre = list(run_error_map('legendre_q', grids, 0, fixed={**fixed, 'mu': 0.0}))
        for ours, theirs in zip(jacobi, legendre):
            assert ours.status is RecordStatus.OK and theirs.status is RecordStatus.OK
            assert ours.oracle == pytest.approx(theirs.oracle, rel=1e-9)
            assert abs(ours.approx - theirs.approx) <= 3.0 * (ours.err_estimate + theirs.err_estimate)

    def test_jacobi_near_oracle_at_large_degree(self):
        """x = 1.2 : la référence reste non nulle et l'erreur relative finie à j = 80"""
        grids = [GridSpec(name='j', values=(20.0, 80.0))]
        records = list(run_error_map('jacobi_q_near', grids, 0, fixed={'alpha': 0.5, 'beta': 0.5, 'x': 1.2}))
        assert all(r.status is RecordStatus.OK for r in records)
        assert all(r.oracle > 0.0 and math.isfinite(r.rel_err) for r in records)

    def test_rotation_zero_projections_match_legendre(self):
        grids = [GridSpec(name='j', values=(5.0, 20.0, 60.0)), GridSpec(name='x', values=(0.6, 0.9, 0.99))]
        wigner = list(run_error_map('wigner_d', grids, 2, fixed={'m_prime': 0.0, 'm': 0.0}))
        legendre = list(run_error_map('legendre_p', grids, 2, fixed={'mu': 0.0}))
        for ours, theirs in zip(wigner, legendre):
            assert ours.approx == theirs.approx
            assert ours.oracle == pytest.approx(theirs.oracle, rel=1e-10, abs=1e-13)

    def test_out_of_region_points_do_not_abort(self):
        grid = GridSpec(name='x', values=(0.5, 1.5, 2.0))
        records = list(run_error_map('legendre_q', [grid], 0, fixed={'j': 10.0, 'mu': 0.0}))
        assert [r.status for r in records] == [RecordStatus.REGION_ERROR, RecordStatus.OK, RecordStatus.OK]

    @pytest.mark.slow
    def test_macdonald_is_less_accurate(self):
        comparison = compare_macdonald(j=50.0)
        assert comparison.pointwise_smaller
        assert comparison.gap_as_expected, comparison.slope_gap


@pytest.mark.integration
class TestEikonalIntegration:
    """
    Test d'intégration: ondes partielles contre représentation eikonale
    """

    @pytest.fixture
    def model(self):
        return EikonalModel(p=10.0, chi0=1.0, width=1.0)

    def test_forward_amplitude_is_absorptive(self, model):
        assert partial_wave_amplitude(model, 0.0, j_max=150).imag > 0.0
        assert eikonal_amplitude(model, 0.0).imag > 0.0
        assert total_cross_section(model, j_max=150) > 0.0

    def test_weak_profile_is_linear(self):
        weak = EikonalModel(p=10.0, chi0=1e-4, width=1.0)
        weaker = EikonalModel(p=10.0, chi0=5e-5, width=1.0)
        ratio = partial_wave_amplitude(weak, -0.5, j_max=150) / partial_wave_amplitude(weaker, -0.5, j_max=150)
        assert abs(ratio - 2.0) <= 1e-3

    @pytest.mark.slow
    def test_representations_agree(self, model):
        rows = eikonal_demo(model, np.linspace(-2.0, 0.0, 9), j_max=150)
        assert len(rows) == 9
        assert max(row.rel_diff for row in rows) <= 2e-3


@pytest.mark.integration
@pytest.mark.slow
class TestPresetsIntegration:
    """
    Test d'intégration: chaque preset de vérification réussit
    """

    @pytest.mark.parametrize('name', list(PRESETS))
    def test_preset_passes(self, name):
        result = PRESETS[name].run()
        assert result.passed, '\n'.join(result.lines)
        assert not result.oracle_failure


@pytest.mark.django_db
@pytest.mark.integration
class TestRunPersistenceIntegration:
    """
    Test d'intégration: enregistrement des exécutions en base
    """

    def test_save_run(self, create_run):
        run = create_run(count=3, failed=1)
        assert run.status == 'completed'
        assert run.records_count == 4
        assert run.completed_at is not None
        positions = list(run.records.values_list('position', flat=True))
        assert positions == [0, 1, 2, 3]
        assert run.records.last().status == 'region_error'

    def test_failed_run(self, create_run):
        run = create_run(errors={'failed': ['macdonald']})
        assert run.status == 'failed'
        assert run.errors == {'failed': ['macdonald']}

    def test_non_finite_values_are_stored_empty(self):
        record = ErrorRecord.measured('legendre_p', 0, {'j': 1.0}, approx=math.inf, oracle=1.0, err_estimate=0.0)
        run = save_run('eval', [record])
        entry = ErrorRecordEntry.objects.get(run=run)
        assert entry.approx is None and entry.abs_err is None
        assert entry.oracle == 1.0

    def test_cascade_delete(self, create_run):
        run = create_run(count=2)
        run.delete()
        assert ErrorRecordEntry.objects.count() == 0


@pytest.mark.django_db
@pytest.mark.integration
class TestRunViewsIntegration:
    """
    Test d'intégration: historique JSON des exécutions
    """

    @pytest.fixture(autouse=True)
    def setup(self):
        self.client = Client()

    def test_run_list(self, create_run):
        create_run(command='error-map')
        create_run(command='preset', preset='symmetry', errors={'failed': ['symmetry']})
        response = self.client.get(reverse('harness:run_list'))
        assert response.status_code == 200
        payload = response.json()
        assert payload['count'] == 2
        assert {run['command'] for run in payload['results']} == {'error-map', 'preset'}

    def test_run_list_filters(self, create_run):
        create_run(command='error-map')
        create_run(command='preset', errors={'failed': ['symmetry']})
        response = self.client.get(reverse('harness:run_list'), {'status': 'failed'})
        results = response.json()['results']
        assert len(results) == 1 and results[0]['command'] == 'preset'

    def test_run_detail(self, create_run):
        run = create_run(count=2, failed=1)
        response = self.client.get(reverse('harness:run_detail', args=[run.id]))
        assert response.status_code == 200
        payload = response.json()
        assert payload['records_count'] == 3
        assert [record['status'] for record in payload['records']] == ['ok', 'ok', 'region_error']

    def test_unknown_run(self):
        response = self.client.get(reverse('harness:run_detail', args=[uuid.uuid4()]))
        assert response.status_code == 404

    def test_list_is_read_only(self):
        response = self.client.post(reverse('harness:run_list'))
        assert response.status_code == 405
        assert VerificationRun.objects.count() == 0
