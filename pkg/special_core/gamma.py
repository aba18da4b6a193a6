"""
Fonctions de la famille gamma : logΓ, ψ, rapports Γ(a)/Γ(b).

Les rapports sont toujours calculés en logarithme puis exponentiés, les
préfacteurs Γ(j+μ+1)/Γ(j−μ+1) débordant sinon dès j ~ 170.
"""

import math

from scipy import special

from .exceptions import DomainError


def _check_positive(name, x):
    if not math.isfinite(x):
        raise DomainError(f"{name} doit être fini (reçu {x!r})")
    if x <= 0:
        raise DomainError(f"{name} doit être > 0 (reçu {x!r})")


def log_gamma(x: float) -> float:
    """logΓ(x) pour x > 0"""
    _check_positive('x', x)
    return float(special.gammaln(x))


def digamma(x: float) -> float:
    """ψ(x) = Γ'(x)/Γ(x) pour x > 0"""
    _check_positive('x', x)
    return float(special.psi(x))


def gamma_ratio(a: float, b: float) -> float:
    """Γ(a)/Γ(b) via exp(logΓ(a) − logΓ(b)), a, b > 0"""
    _check_positive('a', a)
    _check_positive('b', b)
    if a == b:
        return 1.0
    return math.exp(special.gammaln(a) - special.gammaln(b))


def signed_log_gamma(x: float) -> tuple[float, float]:
    """
    (signe, log|Γ(x)|) pour tout x réel hors des pôles.

    Utilisé par les préfacteurs en représentation logarithmique où un
    argument peut devenir négatif (ordre μ > j+1, ε-limite, ...).
    """
    if not math.isfinite(x):
        raise DomainError(f"x doit être fini (reçu {x!r})")
    if x <= 0 and x == math.floor(x):
        raise DomainError(f"Γ a un pôle en {x!r}")
    return float(special.gammasgn(x)), float(special.gammaln(x))


def reciprocal_gamma(x: float) -> float:
    """1/Γ(x), fonction entière (nulle aux entiers négatifs ou nuls)"""
    if not math.isfinite(x):
        raise DomainError(f"x doit être fini (reçu {x!r})")
    return float(special.rgamma(x))
