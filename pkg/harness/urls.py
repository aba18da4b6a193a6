from django.urls import path

from . import views

app_name = 'harness'

urlpatterns = [
    # Historique des exécutions (JSON paginé)
    path('runs/', views.run_list, name='run_list'),

    # Détail d'une exécution avec ses enregistrements
    path('runs/<uuid:run_id>/', views.run_detail, name='run_detail'),
]
