"""
Hiérarchie d'exceptions partagée par toutes les applications numériques.

Le harness transforme ces exceptions en colonne ``status`` des ErrorRecord ;
la commande CLI les traduit en codes de sortie.
"""


class AsymptoticsError(Exception):
    """Erreur de base du projet"""


class DomainError(AsymptoticsError, ValueError):
    """Argument hors du domaine mathématique de la fonction"""


class RegionError(AsymptoticsError, ValueError):
    """Argument dans le domaine mais hors de la région de validité d'un développement"""


class TruncationError(AsymptoticsError, ValueError):
    """Niveau de troncature non supporté, ou queue de série partielle trop grande"""


class InvalidIndexError(AsymptoticsError, ValueError):
    """Indices de fonction de rotation invalides"""


class ConvergenceError(AsymptoticsError, ArithmeticError):
    """Série ou quadrature qui ne converge pas"""


class OracleInconsistencyError(AsymptoticsError):
    """Deux méthodes indépendantes d'un oracle ne s'accordent pas"""

    def __init__(self, message, values=None):
        super().__init__(message)
        self.values = values or {}


class ConditioningWarning(UserWarning):
    """Évaluation mal conditionnée (ordre α proche d'un entier, etc.)"""
