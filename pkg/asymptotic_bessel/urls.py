"""
URL configuration for asymptotic_bessel project.

Seul l'historique du banc de vérification est exposé, en JSON.
"""
from django.contrib import admin
from django.urls import include, path

urlpatterns = [
    path('admin/', admin.site.urls),
    path('harness/', include('harness.urls')),
]
