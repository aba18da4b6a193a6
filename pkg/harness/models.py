import uuid

from django.db import models

from .schemas import RecordStatus


class VerificationRun(models.Model):
    """
    Trace d'une exécution du banc (commande, paramètres, bilan)
    """
    STATUS_CHOICES = [
        ('pending', 'En attente'),
        ('running', 'En cours'),
        ('completed', 'Terminé'),
        ('failed', 'Échoué'),
    ]

    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)
    command = models.CharField(max_length=50, verbose_name='Sous-commande')
    preset = models.CharField(max_length=50, blank=True, default='', verbose_name='Preset')
    function_id = models.CharField(max_length=50, blank=True, default='', verbose_name='Fonction')
    level = models.PositiveSmallIntegerField(null=True, blank=True, verbose_name='Niveau de troncature')
    status = models.CharField(max_length=20, choices=STATUS_CHOICES, default='pending', verbose_name='Statut')
    started_at = models.DateTimeField(auto_now_add=True, verbose_name='Début')
    completed_at = models.DateTimeField(null=True, blank=True, verbose_name='Fin')
    records_count = models.IntegerField(default=0, verbose_name='Enregistrements')
    parameters = models.JSONField(default=dict, blank=True, verbose_name='Paramètres')
    errors = models.JSONField(null=True, blank=True, verbose_name='Erreurs')

    class Meta:
        db_table = 'verification_runs'
        verbose_name = 'Exécution de vérification'
        verbose_name_plural = 'Exécutions de vérification'
        indexes = [
            models.Index(fields=['command', 'started_at']),
            models.Index(fields=['status']),
        ]
        ordering = ['-started_at']

    def __str__(self):
        return f"{self.command} {self.preset or self.function_id} - {self.status} ({self.started_at.strftime('%Y-%m-%d %H:%M')})"


class ErrorRecordEntry(models.Model):
    """
    Un point de carte d'erreur rattaché à une exécution
    """
    STATUS_CHOICES = [(status.value, status.value) for status in RecordStatus]

    run = models.ForeignKey(VerificationRun, on_delete=models.CASCADE, related_name='records', verbose_name='Exécution')
    position = models.PositiveIntegerField(verbose_name='Rang')
    function = models.CharField(max_length=50, verbose_name='Fonction')
    level = models.PositiveSmallIntegerField(verbose_name='Niveau')
    parameters = models.JSONField(verbose_name='Paramètres')
    approx = models.FloatField(null=True, blank=True, verbose_name='Approximation')
    oracle = models.FloatField(null=True, blank=True, verbose_name='Référence')
    abs_err = models.FloatField(null=True, blank=True, verbose_name='Erreur absolue')
    rel_err = models.FloatField(null=True, blank=True, verbose_name='Erreur relative')
    err_estimate = models.FloatField(null=True, blank=True, verbose_name="Estimation d'erreur")
    status = models.CharField(max_length=20, choices=STATUS_CHOICES, default='ok', verbose_name='Statut')

    class Meta:
        db_table = 'error_records'
        verbose_name = "Enregistrement d'erreur"
        verbose_name_plural = "Enregistrements d'erreur"
        indexes = [
            models.Index(fields=['run', 'position']),
            models.Index(fields=['status']),
        ]
        ordering = ['run', 'position']
        unique_together = [['run', 'position']]

    def __str__(self):
        return f"{self.function} niveau {self.level} {self.parameters} - {self.status}"

    def as_dict(self) -> dict:
        return {
            'position': self.position,
            'function': self.function,
            'level': self.level,
            'parameters': self.parameters,
            'approx': self.approx,
            'oracle': self.oracle,
            'abs_err': self.abs_err,
            'rel_err': self.rel_err,
            'err_estimate': self.err_estimate,
            'status': self.status,
        }
