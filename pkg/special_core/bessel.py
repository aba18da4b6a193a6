"""
Fonctions de Bessel d'argument réel et d'ordre réel.

Les noyaux numériques sont ceux de scipy.special (AMOS / Cephes : série
ascendante, développement de Hankel, récurrence de Miller selon la zone) ;
ce module ajoute la validation du domaine et les combinaisons entières
dont les développements asymptotiques ont besoin près de l'argument nul.
"""

import logging
import math

import mpmath
from scipy import special

from .exceptions import DomainError

logger = logging.getLogger(__name__)

MAX_ORDER = 200.0

# En dessous de ce seuil, K_0 + ln(Z/2)·I_0 et son analogue Y_0 passent par
# leur série entière (4 termes suffisent : t = Z²/4 < 2.5e-7).
SMALL_ARGUMENT = 1e-3

# (Z/2)^k K_k(Z) et (z/2)^k Y_k(z) sont remplacés par leur limite en 0.
ZERO_ARGUMENT = 1e-30


def _check_order(nu):
    if not math.isfinite(nu):
        raise DomainError(f"ordre de Bessel non fini : {nu!r}")
    if abs(nu) > MAX_ORDER:
        raise DomainError(f"|ν| = {abs(nu)} dépasse l'enveloppe supportée ({MAX_ORDER})")


def _check_argument(x, strict):
    if not math.isfinite(x):
        raise DomainError(f"argument de Bessel non fini : {x!r}")
    if strict and x <= 0:
        raise DomainError(f"l'argument doit être > 0 (reçu {x!r})")
    if x < 0:
        raise DomainError(f"l'argument doit être >= 0 (reçu {x!r})")


def bessel_j(nu: float, x: float) -> float:
    """J_ν(x), x ≥ 0"""
    _check_order(nu)
    _check_argument(x, strict=False)
    return float(special.jv(nu, x))


def bessel_y(nu: float, x: float) -> float:
    """Y_ν(x), x > 0"""
    _check_order(nu)
    _check_argument(x, strict=True)
    return float(special.yv(nu, x))


def bessel_i(nu: float, x: float) -> float:
    """I_ν(x), x ≥ 0"""
    _check_order(nu)
    _check_argument(x, strict=False)
    return float(special.iv(nu, x))


def bessel_k(nu: float, x: float) -> float:
    """K_ν(x), x > 0"""
    _check_order(nu)
    _check_argument(x, strict=True)
    return float(special.kv(nu, x))


def reduced_bessel(nu: float, u: float) -> float:
    """
    E_ν(u) = Σ_n (−u)^n / (n! Γ(ν+n+1)), fonction entière de u.

    Pour u = (z/2)² ≥ 0 on a E_ν = (z/2)^{−ν} J_ν(z) ; pour u = −(Z/2)² < 0,
    E_ν = (Z/2)^{−ν} I_ν(Z). Une seule évaluation couvre donc les deux côtés
    de x = 1 et reste finie quand z → 0.
    """
    _check_order(nu)
    if not math.isfinite(u):
        raise DomainError(f"argument réduit non fini : {u!r}")
    if nu + 1.0 <= 0.0 and nu == math.floor(nu):
        # E_{−n}(u) = (−u)^n E_n(u)
        n = int(-nu)
        return (-u) ** n * reduced_bessel(float(n), u)
    return float(special.rgamma(nu + 1.0) * special.hyp0f1(nu + 1.0, -u))


def log_reduced_bessel(nu: float, u: float) -> tuple[float, float]:
    """
    (signe, log|Γ(ν+1)·E_ν(u)|) = (signe, log|0F1(;ν+1;−u)|).

    Le régime lointain de Jacobi combine des ordres ν ~ 2j où Γ(ν+1) et
    J_ν déborderaient en double ; mpmath porte l'exposant sans limite.
    """
    if not (math.isfinite(nu) and math.isfinite(u)):
        raise DomainError(f"paramètres non finis : ν={nu!r}, u={u!r}")
    with mpmath.workdps(20):
        value = mpmath.hyp0f1(nu + 1, -u)
        if value == 0:
            return 0.0, -math.inf
        return (1.0 if value > 0 else -1.0), float(mpmath.log(abs(value)))


def scaled_bessel_k(k: int, z: float) -> float:
    """(Z/2)^k K_k(Z) pour k ≥ 1, prolongé par (k−1)!/2 en Z = 0"""
    _check_argument(z, strict=False)
    if k < 1:
        raise DomainError("scaled_bessel_k requiert k >= 1 (K_0 diverge en 0)")
    if z < ZERO_ARGUMENT:
        return math.factorial(k - 1) / 2.0
    return float((z / 2.0) ** k * special.kv(k, z))


def scaled_bessel_y(k: int, z: float) -> float:
    """(z/2)^k Y_k(z) pour k ≥ 1, prolongé par −(k−1)!/π en z = 0"""
    _check_argument(z, strict=False)
    if k < 1:
        raise DomainError("scaled_bessel_y requiert k >= 1 (Y_0 diverge en 0)")
    if z < ZERO_ARGUMENT:
        return -math.factorial(k - 1) / math.pi
    return float((z / 2.0) ** k * special.yv(k, z))


def _psi_series(t, alternating):
    total = 0.0
    term = 1.0
    for k in range(4):
        if k:
            term *= t / (k * k)
        sign = -1.0 if (alternating and k % 2) else 1.0
        total += sign * term * float(special.psi(k + 1))
    return total


def bessel_k0_log_regular(z: float) -> float:
    """
    K_0(Z) + ln(Z/2)·I_0(Z) = Σ ψ(k+1)(Z²/4)^k/(k!)², entière, vaut −γ en 0.
    """
    _check_argument(z, strict=False)
    if z < SMALL_ARGUMENT:
        return _psi_series(z * z / 4.0, alternating=False)
    return float(special.kv(0, z) + math.log(z / 2.0) * special.iv(0, z))


def bessel_y0_log_regular(z: float) -> float:
    """
    −(π/2)[Y_0(z) − (2/π)ln(z/2)·J_0(z)] = Σ (−1)^k ψ(k+1)(z²/4)^k/(k!)².
    """
    _check_argument(z, strict=False)
    if z < SMALL_ARGUMENT:
        return _psi_series(z * z / 4.0, alternating=True)
    return float(-0.5 * math.pi * special.yv(0, z) + math.log(z / 2.0) * special.jv(0, z))
