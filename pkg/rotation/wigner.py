"""
Fonctions de rotation d^j_{m′m} et de seconde espèce e^j_{m′m}.

Après canonicalisation (j ≥ m′ ≥ |m|), avec n = j−m′, α = m′−m, β = m′+m :

    d^j_{m′m}(θ) = N (sin θ/2)^α (cos θ/2)^β P_n^{(α,β)}(cos θ)
    e^j_{m′m}(x) = N ((x−1)/2)^{α/2} ((x+1)/2)^{β/2} Q_n^{(α,β)}(x)

N = √[(j+m′)!(j−m′)!/((j+m)!(j−m)!)]. Sur la coupure e utilise (1−x)/2 et
la fonction 𝖰. Conventions d'Edmonds (rotations passives) ; ``rose=True``
multiplie le résultat par (−1)^{m′−m}.
"""

import logging
import math
from fractions import Fraction

import mpmath
from pydantic import ValidationError

from jacobi_asym.far import MAX_LOG, jacobi_q_asym_far
from jacobi_asym.jacobi import jacobi_q_asym_near, jacobi_q_cut
from jacobi_asym.schemas import CIRCLE_MARGIN, RegimeTag, jacobi_params
from legendre_asym.schemas import Approximant, check_level
from legendre_asym.series import p_series
from oracle.checks import working_dps
from oracle.jacobi import far_series_mp, jacobi_q_oracle
from oracle.recurrences import jacobi_p_forward
from special_core.exceptions import ConvergenceError, DomainError, InvalidIndexError, RegionError

from .halfint import HalfInt
from .schemas import RotationIndices

logger = logging.getLogger(__name__)


def _parity(value: HalfInt) -> int:
    """(−1)^value pour value entier"""
    return -1 if value.as_int() % 2 else 1


def canonicalize(j, m_prime, m) -> RotationIndices:
    """
    Ramène (j, m′, m) à j ≥ m′ ≥ |m| par d^j_{m′m} = (−1)^{m′−m} d^j_{mm′}
    = d^j_{−m,−m′} ; la phase accumulée est portée par le résultat.
    """
    j, a, b = HalfInt.of(j), HalfInt.of(m_prime), HalfInt.of(m)
    if j.twice < 0 or abs(a) > j or abs(b) > j:
        raise InvalidIndexError(f"indices hors bornes : j={j}, m′={a}, m={b}")
    if not ((j - a).is_integer and (j - b).is_integer):
        raise InvalidIndexError(f"j−m′ et j−m doivent être entiers (j={j}, m′={a}, m={b})")

    if a >= abs(b):
        canonical, phase = (a, b), 1
    elif b >= abs(a):
        canonical, phase = (b, a), _parity(a - b)
    elif -a >= abs(b):
        canonical, phase = (-a, -b), _parity(a - b)
    else:
        canonical, phase = (-b, -a), 1
    try:
        return RotationIndices(j=j, m_prime=canonical[0], m=canonical[1], phase=phase)
    except ValidationError as e:
        raise InvalidIndexError(f"indices invalides : {e.errors()[0]['msg']}") from e


def _output_sign(idx: RotationIndices, rose: bool) -> int:
    # α a la parité de m′−m pour les indices d'origine
    return idx.phase * ((-1) ** idx.alpha if rose else 1)


def _factorial_ratio(idx: RotationIndices, first_kind_series=False) -> Fraction:
    j, mp, m = idx.j, idx.m_prime, idx.m
    if first_kind_series:
        numerator = math.factorial((j + mp).as_int()) * math.factorial((j - m).as_int())
        denominator = math.factorial((j + m).as_int()) * math.factorial((j - mp).as_int())
    else:
        numerator = math.factorial((j + mp).as_int()) * math.factorial((j - mp).as_int())
        denominator = math.factorial((j + m).as_int()) * math.factorial((j - m).as_int())
    return Fraction(numerator, denominator)


def _sqrt_ratio(ratio: Fraction) -> float:
    if ratio == 1:
        return 1.0
    return math.exp(0.5 * (math.log(ratio.numerator) - math.log(ratio.denominator)))


def _log_sqrt_ratio(ratio: Fraction) -> float:
    return 0.5 * (math.log(ratio.numerator) - math.log(ratio.denominator))


def wigner_d_exact(idx: RotationIndices, theta, rose=False) -> float:
    """d^j_{m′m}(θ) par le polynôme de Jacobi et sa récurrence (référence)"""
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"θ = {theta} hors de [0, π]")
    half = theta / 2.0
    value, _ = jacobi_p_forward(idx.degree, float(idx.alpha), float(idx.beta), math.cos(theta))
    prefactor = _sqrt_ratio(_factorial_ratio(idx)) * math.sin(half) ** idx.alpha * math.cos(half) ** idx.beta
    return _output_sign(idx, rose) * prefactor * float(value)


def wigner_d_asym(idx: RotationIndices, x, level=2, footnote_argument=False, rose=False) -> Approximant:
    """
    d^j_{m′m}(x = cos θ) par la série de Bessel de Jacobi de degré j−m′,
    b = 2m′+1, Λ = (j−m′)(j+m′+1).

    ``footnote_argument`` remplace Λ par j(j+1) − [m′(m′+1) + m(m+1)]/2 ;
    cette variante est moins précise et ne sert qu'à la comparaison.
    """
    check_level(level)
    if not -1.0 < x <= 1.0:
        raise RegionError(f"x = {x} hors de (−1, 1]")
    n, alpha, beta = idx.degree, idx.alpha, idx.beta
    mp = float(idx.m_prime)
    b = 2.0 * mp + 1.0
    if footnote_argument:
        jf, mf = float(idx.j), float(idx.m)
        lam = jf * (jf + 1.0) - (mp * (mp + 1.0) + mf * (mf + 1.0)) / 2.0
    else:
        lam = n * (n + b)
    w = (1.0 - x) / 2.0
    result = p_series(float(alpha), lam, w, b, level)
    prefactor = (
        _sqrt_ratio(_factorial_ratio(idx, first_kind_series=True))
        * w ** (alpha / 2.0) * ((1.0 + x) / 2.0) ** (beta / 2.0)
    )
    return Approximant(
        value=_output_sign(idx, rose) * prefactor * result.value,
        err_estimate=prefactor * result.err_estimate,
        terms_used=result.terms_used,
    )


def _log_e_prefactor(idx: RotationIndices, x) -> float:
    """log de N |(x−1)/2|^{α/2} ((x+1)/2)^{β/2}"""
    log_value = _log_sqrt_ratio(_factorial_ratio(idx))
    if idx.alpha:
        log_value += idx.alpha / 2.0 * math.log(abs(x - 1.0) / 2.0)
    if idx.beta:
        log_value += idx.beta / 2.0 * math.log((x + 1.0) / 2.0)
    return log_value


def _scaled(approximant: Approximant, log_scale, sign) -> Approximant:
    """approximant × sign·exp(log_scale), en log quand l'approximant le porte"""
    if approximant.log_abs_value is None:
        scale = math.exp(log_scale)
        return Approximant(
            value=sign * scale * approximant.value,
            err_estimate=scale * approximant.err_estimate,
            terms_used=approximant.terms_used,
        )
    log_value = approximant.log_abs_value + log_scale
    log_err = None if approximant.log_err_estimate is None else approximant.log_err_estimate + log_scale
    value_sign = sign * math.copysign(1.0, approximant.value)
    return Approximant(
        value=math.copysign(math.inf, value_sign) if log_value > MAX_LOG else value_sign * math.exp(log_value),
        err_estimate=0.0 if log_err is None else (math.inf if log_err > MAX_LOG else math.exp(log_err)),
        terms_used=approximant.terms_used,
        log_abs_value=log_value,
        log_err_estimate=log_err,
    )


def wigner_e_exact_large(idx: RotationIndices, x, rose=False) -> float:
    """
    e^j_{m′m}(x) pour (x−1)/2 > 1, par 2F1(j−m′+1, j−m+1; 2j+2; 2/(1−x))
    sommée en double-double ; la grandeur est portée en log jusqu'au bout.
    """
    if not (x - 1.0) / 2.0 > 1.0:
        raise ConvergenceError(f"x = {x} : |2/(1−x)| ≥ 1, la série hypergéométrique ne converge pas")
    with mpmath.workdps(working_dps()):
        q_value, loss = far_series_mp(idx.degree, float(idx.alpha), float(idx.beta), x)
        logger.debug("e exacte j=%s m′=%s m=%s x=%s : %s chiffres perdus", idx.j, idx.m_prime, idx.m, x, loss)
        value = mpmath.exp(_log_e_prefactor(idx, x)) * q_value
        return _output_sign(idx, rose) * float(value)


def _circle_error(x) -> RegionError:
    return RegionError(f"x = {x} : couronne |x−1| ≈ 2 (marge {CIRCLE_MARGIN}), ni forme proche ni forme lointaine")


def wigner_e_asym_large(idx: RotationIndices, x, level=0, rose=False) -> Approximant:
    """
    e^j_{m′m}(x) pour (x−1)/2 > 1 : série J_{2j+1}(Z″) en 1/(j−m′+1), 1/(j−m+1).

    Dans la couronne 1 < (x−1)/2 ≤ 1 + CIRCLE_MARGIN aucune forme n'est fiable :
    RegionError.
    """
    check_level(level)
    if not (x - 1.0) / 2.0 > 1.0:
        raise RegionError(f"x = {x} : la forme lointaine exige (x−1)/2 > 1")
    params = jacobi_params(idx.degree, float(idx.alpha), float(idx.beta), x)
    if params.regime is not RegimeTag.FAR_LARGE:
        raise _circle_error(x)
    q = jacobi_q_asym_far(params.j, params.alpha, params.beta, x, level=level)
    return _scaled(q, _log_e_prefactor(idx, x), _output_sign(idx, rose))


def wigner_e_cut_asym(idx: RotationIndices, x, rose=False) -> Approximant:
    """e^j_{m′m}(x) sur la coupure, terme de tête en Y_{m′−m}, J_{m′−m}"""
    if not -1.0 < x < 1.0:
        raise RegionError(f"x = {x} n'est pas sur la coupure")
    q = jacobi_q_cut(idx.degree, float(idx.alpha), float(idx.beta), x)
    return _scaled(q, _log_e_prefactor(idx, x), _output_sign(idx, rose))


def wigner_e_cut_exact(idx: RotationIndices, x, rose=False) -> float:
    """e^j_{m′m}(x) sur la coupure par l'oracle de Jacobi (connexion et quadrature)"""
    if not -1.0 < x < 1.0:
        raise RegionError(f"x = {x} n'est pas sur la coupure")
    result = jacobi_q_oracle(idx.degree, float(idx.alpha), float(idx.beta), x)
    return _output_sign(idx, rose) * math.exp(_log_e_prefactor(idx, x)) * result.value


def wigner_e_from_jacobi(idx: RotationIndices, x, level=0, rose=False) -> Approximant:
    """e^j_{m′m}(x) pour tout x > −1, x ≠ 1, la forme de Jacobi suivant le régime"""
    check_level(level)
    params = jacobi_params(idx.degree, float(idx.alpha), float(idx.beta), x)
    regime = params.regime
    logger.debug("e par Jacobi j=%s m′=%s m=%s x=%s : régime %s", idx.j, idx.m_prime, idx.m, x, regime.value)
    if regime is RegimeTag.ON_CUT:
        return wigner_e_cut_asym(idx, x, rose=rose)
    if regime is RegimeTag.NEAR_ONE:
        q = jacobi_q_asym_near(params.j, params.alpha, params.beta, x)
    elif regime is RegimeTag.FAR_LARGE:
        q = jacobi_q_asym_far(params.j, params.alpha, params.beta, x, level=level)
    else:
        raise _circle_error(x)
    return _scaled(q, _log_e_prefactor(idx, x), _output_sign(idx, rose))
