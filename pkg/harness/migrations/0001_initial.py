# Generated by Django 5.2.7 on 2026-10-19 09:00

import django.db.models.deletion
import uuid
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.UUIDField(default=uuid.uuid4, editable=False, primary_key=True, serialize=False)),
                ('command', models.CharField(max_length=50, verbose_name='Sous-commande')),
                ('preset', models.CharField(blank=True, default='', max_length=50, verbose_name='Preset')),
                ('function_id', models.CharField(blank=True, default='', max_length=50, verbose_name='Fonction')),
                ('level', models.PositiveSmallIntegerField(blank=True, null=True, verbose_name='Niveau de troncature')),
                ('status', models.CharField(choices=[('pending', 'En attente'), ('running', 'En cours'), ('completed', 'Terminé'), ('failed', 'Échoué')], default='pending', max_length=20, verbose_name='Statut')),
                ('started_at', models.DateTimeField(auto_now_add=True, verbose_name='Début')),
                ('completed_at', models.DateTimeField(blank=True, null=True, verbose_name='Fin')),
                ('records_count', models.IntegerField(default=0, verbose_name='Enregistrements')),
                ('parameters', models.JSONField(blank=True, default=dict, verbose_name='Paramètres')),
                ('errors', models.JSONField(blank=True, null=True, verbose_name='Erreurs')),
            ],
            options={
                'verbose_name': 'Exécution de vérification',
                'verbose_name_plural': 'Exécutions de vérification',
                'db_table': 'verification_runs',
                'ordering': ['-started_at'],
                'indexes': [models.Index(fields=['command', 'started_at'], name='verificatio_command_3f1a2b_idx'), models.Index(fields=['status'], name='verificatio_status_8c4d1e_idx')],
            },
        ),
        migrations.CreateModel(
            name='ErrorRecordEntry',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('position', models.PositiveIntegerField(verbose_name='Rang')),
                ('function', models.CharField(max_length=50, verbose_name='Fonction')),
                ('level', models.PositiveSmallIntegerField(verbose_name='Niveau')),
                ('parameters', models.JSONField(verbose_name='Paramètres')),
                ('approx', models.FloatField(blank=True, null=True, verbose_name='Approximation')),
                ('oracle', models.FloatField(blank=True, null=True, verbose_name='Référence')),
                ('abs_err', models.FloatField(blank=True, null=True, verbose_name='Erreur absolue')),
                ('rel_err', models.FloatField(blank=True, null=True, verbose_name='Erreur relative')),
                ('err_estimate', models.FloatField(blank=True, null=True, verbose_name="Estimation d'erreur")),
                ('status', models.CharField(choices=[('ok', 'ok'), ('region_error', 'region_error'), ('domain_error', 'domain_error'), ('index_error', 'index_error'), ('truncation_error', 'truncation_error'), ('convergence_error', 'convergence_error'), ('oracle_error', 'oracle_error')], default='ok', max_length=20, verbose_name='Statut')),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='records', to='harness.verificationrun', verbose_name='Exécution')),
            ],
            options={
                'verbose_name': "Enregistrement d'erreur",
                'verbose_name_plural': "Enregistrements d'erreur",
                'db_table': 'error_records',
                'ordering': ['run', 'position'],
                'indexes': [models.Index(fields=['run', 'position'], name='error_recor_run_id_5e7f9a_idx'), models.Index(fields=['status'], name='error_recor_status_2b6c3d_idx')],
                'unique_together': {('run', 'position')},
            },
        ),
    ]
