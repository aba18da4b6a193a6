from django.apps import AppConfig


class JacobiAsymConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'jacobi_asym'
    verbose_name = 'Développements de Jacobi'
