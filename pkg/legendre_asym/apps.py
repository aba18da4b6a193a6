from django.apps import AppConfig


class LegendreAsymConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'legendre_asym'
    verbose_name = 'Développements de Legendre'
