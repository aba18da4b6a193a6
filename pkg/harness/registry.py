"""
Fonctions disponibles pour les cartes d'erreur.

Chaque entrée associe une approximation (paramètres, niveau) → Approximant
à une référence paramètres → float. L'argument se donne par ``x``, par
``theta`` (x = cos θ), ou à argument de Bessel fixé : ``z`` sur la coupure
(x = 1 − z²/2Λ) et ``Z`` hors coupure (x = 1 + Z²/2Λ), Λ propre à la fonction.
"""

import math
from dataclasses import dataclass
from typing import Callable

from jacobi_asym.far import jacobi_q_asym_alt, jacobi_q_asym_far
from jacobi_asym.jacobi import jacobi_p_asym, jacobi_q_asym_near, jacobi_q_cut
from legendre_asym.legendre import (
    legendre_p_asym, legendre_p_macdonald, legendre_q_asym, legendre_q_cut,
)
from oracle.jacobi import jacobi_p_oracle, jacobi_q_oracle
from oracle.legendre import legendre_p_oracle, legendre_q_oracle
from rotation.wigner import (
    canonicalize, wigner_d_asym, wigner_d_exact, wigner_e_asym_large, wigner_e_cut_asym,
    wigner_e_cut_exact, wigner_e_exact_large,
)
from special_core.exceptions import DomainError


@dataclass(frozen=True)
class RegisteredFunction:
    name: str
    parameters: tuple
    approximate: Callable
    reference: Callable
    max_level: int = 2
    description: str = ''


def _legendre_lam(p):
    return p['j'] * (p['j'] + 1.0)


def _jacobi_lam(p):
    return p['j'] * (p['j'] + p.get('alpha', 0.0) + p.get('beta', 0.0) + 1.0)


def _rotation_lam(p):
    idx = _indices(p)
    return idx.degree * (idx.degree + 2.0 * float(idx.m_prime) + 1.0)


def _indices(p):
    return canonicalize(p['j'], p.get('m_prime', 0.0), p.get('m', 0.0))


def argument(p, lam=None) -> float:
    """x à partir de x, theta, z ou Z"""
    if 'x' in p:
        return p['x']
    if 'theta' in p:
        return math.cos(p['theta'])
    if 'z' not in p and 'Z' not in p:
        raise DomainError("il faut un des paramètres x, theta, z ou Z")
    if lam is None:
        raise DomainError("argument de Bessel fixé non supporté pour cette fonction")
    scale = 2.0 * lam(p)
    if scale <= 0.0:
        raise DomainError(f"Λ = {scale / 2.0} ≤ 0 : un argument de Bessel fixé ne détermine pas x")
    if 'z' in p:
        return 1.0 - p['z'] ** 2 / scale
    return 1.0 + p['Z'] ** 2 / scale


def _legendre_q_reference(p):
    """Récurrence de Q_n et 𝖰_n : degré entier, μ = 0"""
    if p.get('mu', 0.0) != 0.0:
        raise DomainError(f"pas de référence pour Q_j^μ avec μ = {p['mu']}")
    if p['j'] != math.floor(p['j']):
        raise DomainError(f"la référence de Q exige un degré entier (j = {p['j']})")
    return legendre_q_oracle(int(p['j']), argument(p, _legendre_lam)).value


def _jacobi_args(p, lam=_jacobi_lam):
    return p['j'], p.get('alpha', 0.0), p.get('beta', 0.0), argument(p, lam)


REGISTRY = {
    entry.name: entry for entry in (
        RegisteredFunction(
            'legendre_p', ('j', 'mu', 'x'),
            lambda p, level: legendre_p_asym(p['j'], p.get('mu', 0.0), argument(p, _legendre_lam), level=level),
            lambda p: legendre_p_oracle(p['j'], -p.get('mu', 0.0), argument(p, _legendre_lam)).value,
            description="P_j^{−μ}(x) près de x = 1",
        ),
        RegisteredFunction(
            'legendre_p_macdonald', ('j', 'x'),
            lambda p, level: legendre_p_macdonald(p['j'], argument(p), level=level),
            lambda p: legendre_p_oracle(p['j'], 0.0, argument(p)).value,
            max_level=1,
            description="série de MacDonald en 1/(j+½)",
        ),
        RegisteredFunction(
            'legendre_q', ('j', 'mu', 'x'),
            lambda p, level: legendre_q_asym(p['j'], p.get('mu', 0.0), argument(p, _legendre_lam), level=level),
            _legendre_q_reference,
            description="Q_j(x), x > 1",
        ),
        RegisteredFunction(
            'legendre_q_cut', ('j', 'x'),
            lambda p, level: legendre_q_cut(p['j'], argument(p, _legendre_lam), level=level),
            _legendre_q_reference,
            description="𝖰_j(x) sur la coupure",
        ),
        RegisteredFunction(
            'jacobi_p', ('j', 'alpha', 'beta', 'x'),
            lambda p, level: jacobi_p_asym(*_jacobi_args(p), level=level),
            lambda p: jacobi_p_oracle(*_jacobi_args(p)).value,
            description="P_j^{(α,β)}(x) près de x = 1",
        ),
        RegisteredFunction(
            'jacobi_q_near', ('j', 'alpha', 'beta', 'x'),
            lambda p, level: jacobi_q_asym_near(*_jacobi_args(p)),
            lambda p: jacobi_q_oracle(*_jacobi_args(p)).value,
            max_level=0,
            description="Q_j^{(α,β)}(x), 1 < x, terme de tête",
        ),
        RegisteredFunction(
            'jacobi_q_cut', ('j', 'alpha', 'beta', 'x'),
            lambda p, level: jacobi_q_cut(*_jacobi_args(p)),
            lambda p: jacobi_q_oracle(*_jacobi_args(p)).value,
            max_level=0,
            description="𝖰_j^{(α,β)}(x) sur la coupure, terme de tête",
        ),
        RegisteredFunction(
            'jacobi_q_far', ('j', 'alpha', 'beta', 'x'),
            lambda p, level: jacobi_q_asym_far(*_jacobi_args(p), level=level),
            lambda p: jacobi_q_oracle(*_jacobi_args(p)).value,
            description="Q_j^{(α,β)}(x), (x−1)/2 > 1",
        ),
        RegisteredFunction(
            'jacobi_q_alt', ('j', 'alpha', 'beta', 'x'),
            lambda p, level: jacobi_q_asym_alt(*_jacobi_args(p), level=level),
            lambda p: jacobi_q_oracle(*_jacobi_args(p)).value,
            description="Q_j^{(α,β)}(x), forme en 2/(x+1)",
        ),
        RegisteredFunction(
            'wigner_d', ('j', 'm_prime', 'm', 'x'),
            lambda p, level: wigner_d_asym(_indices(p), argument(p, _rotation_lam), level=level),
            lambda p: wigner_d_exact(_indices(p), math.acos(argument(p, _rotation_lam))),
            description="d^j_{m′m}(x = cos θ)",
        ),
        RegisteredFunction(
            'wigner_e_large', ('j', 'm_prime', 'm', 'x'),
            lambda p, level: wigner_e_asym_large(_indices(p), argument(p), level=level),
            lambda p: wigner_e_exact_large(_indices(p), argument(p)),
            description="e^j_{m′m}(x), (x−1)/2 > 1",
        ),
        RegisteredFunction(
            'wigner_e_cut', ('j', 'm_prime', 'm', 'x'),
            lambda p, level: wigner_e_cut_asym(_indices(p), argument(p, _rotation_lam)),
            lambda p: wigner_e_cut_exact(_indices(p), argument(p, _rotation_lam)),
            max_level=0,
            description="e^j_{m′m}(x) sur la coupure",
        ),
    )
}


def get_function(name) -> RegisteredFunction:
    try:
        return REGISTRY[name]
    except KeyError:
        raise DomainError(f"fonction inconnue '{name}' (disponibles : {', '.join(sorted(REGISTRY))})") from None
