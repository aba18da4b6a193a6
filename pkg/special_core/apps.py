from django.apps import AppConfig


class SpecialCoreConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'special_core'
    verbose_name = 'Fonctions spéciales de base'
