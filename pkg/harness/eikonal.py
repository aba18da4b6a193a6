"""
Démonstration eikonale : somme en ondes partielles contre représentation
en paramètre d'impact pour un profil gaussien.

    f_pw(t)  = Σ_j (2j+1) f_j P_j(cos θ),  f_j = (e^{iχ(b_j)} − 1)/(2ip),  b_j = √(j(j+1))/p
    f_eik(t) = −ip ∫_0^∞ b J_0(qb) (e^{iχ(b)} − 1) db,  q² = −t,  cos θ = 1 + t/2p²
"""

import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy import integrate, special

from special_core.exceptions import DomainError, TruncationError

from .schemas import EikonalModel

logger = logging.getLogger(__name__)

# |f_j| au-delà de j_max
TAIL_TOL = 1e-12
# intégrande négligé au-delà de b_cut
QUAD_TAIL = 1e-14


class EikonalRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    t: float
    partial_wave_real: float
    partial_wave_imag: float
    eikonal_real: float
    eikonal_imag: float
    rel_diff: float

    @property
    def partial_wave(self) -> complex:
        return complex(self.partial_wave_real, self.partial_wave_imag)

    @property
    def eikonal(self) -> complex:
        return complex(self.eikonal_real, self.eikonal_imag)


def _profile(model: EikonalModel, b):
    return 1j * model.chi0 * np.exp(-np.square(b) / (2.0 * model.width ** 2))


def partial_wave_coefficients(model: EikonalModel, j_values):
    b = np.sqrt(j_values * (j_values + 1.0)) / model.p
    return (np.exp(1j * _profile(model, b)) - 1.0) / (2j * model.p)


def partial_wave_amplitude(model: EikonalModel, t, j_max) -> complex:
    x = 1.0 + t / (2.0 * model.p ** 2)
    if not -1.0 < x <= 1.0:
        raise DomainError(f"t = {t} : cos θ = {x} hors de (−1, 1]")
    tail = abs(partial_wave_coefficients(model, np.array([j_max + 1.0]))[0])
    if tail >= TAIL_TOL:
        raise TruncationError(f"j_max = {j_max} trop petit : |f_(j_max+1)| = {tail:.2e} ≥ {TAIL_TOL:.0e}")
    js = np.arange(j_max + 1, dtype=float)
    terms = (2.0 * js + 1.0) * partial_wave_coefficients(model, js) * special.eval_legendre(js, x)
    return complex(np.sum(terms))


def _cutoff(model: EikonalModel) -> float:
    """b au-delà duquel |e^{iχ} − 1| < QUAD_TAIL"""
    amplitude = max(abs(model.chi0), QUAD_TAIL)
    return model.width * math.sqrt(2.0 * math.log(amplitude / QUAD_TAIL) + 1.0)


def eikonal_amplitude(model: EikonalModel, t) -> complex:
    if t > 0.0:
        raise DomainError(f"t = {t} > 0")
    q = math.sqrt(-t)

    def kernel(b):
        return b * special.j0(q * b) * (np.exp(1j * _profile(model, b)) - 1.0)

    b_cut = _cutoff(model)
    options = {'limit': 200, 'epsabs': 1e-15, 'epsrel': 1e-12}
    real, _ = integrate.quad(lambda b: kernel(b).real, 0.0, b_cut, **options)
    imag, _ = integrate.quad(lambda b: kernel(b).imag, 0.0, b_cut, **options)
    return -1j * model.p * complex(real, imag)


def total_cross_section(model: EikonalModel, j_max) -> float:
    """Théorème optique : σ_tot = (4π/p) Im f(0)"""
    return 4.0 * math.pi / model.p * partial_wave_amplitude(model, 0.0, j_max).imag


def eikonal_demo(model: EikonalModel, t_values, j_max) -> list[EikonalRow]:
    rows = []
    for t in t_values:
        partial_wave = partial_wave_amplitude(model, t, j_max)
        eikonal = eikonal_amplitude(model, t)
        scale = abs(partial_wave)
        rel_diff = abs(partial_wave - eikonal) / scale if scale > 0.0 else abs(eikonal)
        logger.debug("t=%s : ondes partielles %s, eikonale %s, écart %.3e", t, partial_wave, eikonal, rel_diff)
        rows.append(EikonalRow(
            t=float(t),
            partial_wave_real=partial_wave.real, partial_wave_imag=partial_wave.imag,
            eikonal_real=eikonal.real, eikonal_imag=eikonal.imag,
            rel_diff=rel_diff,
        ))
    return rows
