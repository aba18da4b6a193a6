import pytest
from django.core.management import call_command

from harness.models import VerificationRun
from harness.schemas import ErrorRecord, RecordStatus
from harness.services import save_run


@pytest.fixture(scope='session')
def django_db_setup(django_db_setup, django_db_blocker):
    """Configuration de la base de données de test avec migrations"""
    with django_db_blocker.unblock():
        call_command('migrate', '--run-syncdb', verbosity=0)


@pytest.fixture
def create_record():
    """Fixture pour créer un ErrorRecord mesuré"""
    def make_record(function='legendre_p', level=0, approx=1.0, oracle=1.0 + 1e-9, err_estimate=2e-9, **parameters):
        parameters = parameters or {'j': 10.0, 'mu': 0.0, 'x': 0.9}
        return ErrorRecord.measured(function, level, parameters, approx=approx, oracle=oracle, err_estimate=err_estimate)
    return make_record


@pytest.fixture
def create_failed_record():
    """Fixture pour créer un ErrorRecord en échec"""
    def make_failed(function='legendre_q', level=0, status=RecordStatus.REGION_ERROR, **parameters):
        return ErrorRecord.failed(function, level, parameters or {'j': 10.0, 'x': 0.5}, status)
    return make_failed


@pytest.fixture
def create_run(db, create_record, create_failed_record):
    """Fixture pour créer une exécution enregistrée avec ses points"""
    def make_run(command='error-map', count=3, failed=0, **fields) -> VerificationRun:
        records = [create_record(j=10.0 * (i + 1), mu=0.0, x=0.9) for i in range(count)]
        records += [create_failed_record() for _ in range(failed)]
        fields.setdefault('function_id', 'legendre_p')
        fields.setdefault('level', 0)
        return save_run(command, records, **fields)
    return make_run


@pytest.fixture
def output_dir(settings, tmp_path):
    """HARNESS_OUTPUT_DIR redirigé vers un répertoire temporaire"""
    settings.HARNESS_OUTPUT_DIR = str(tmp_path)
    return tmp_path
