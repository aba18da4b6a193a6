"""
Comparaison de la série en z = √(2j(j+1)(1−x)) et de la série de MacDonald.

Au niveau 0 et à j fixé, notre erreur décroît en sin⁴(θ/2) et celle de
MacDonald en sin²(θ/2) : l'ajustement en s² = sin²(θ/2) sépare les deux
pentes d'une unité. Les deux erreurs se croisent vers θ ≈ 0.02 à j = 50 ;
la fenêtre par défaut reste en dessous.
"""

import logging
from typing import NamedTuple

from .error_map import run_error_map
from .fitting import ConvergenceFit, fit_convergence
from .schemas import GridSpec

logger = logging.getLogger(__name__)

DEFAULT_THETAS = GridSpec(name='theta', minimum=0.002, maximum=0.015, count=8, scale='log')
FIT_ABSCISSA = 'sin^2(theta/2)'
EXPECTED_GAP = 1.0
GAP_TOL = 0.3


class MacDonaldComparison(NamedTuple):
    ours: list
    macdonald: list
    ours_fit: ConvergenceFit
    macdonald_fit: ConvergenceFit

    @property
    def pointwise_smaller(self) -> bool:
        return all(a.rel_err <= b.rel_err for a, b in zip(self.ours, self.macdonald))

    @property
    def slope_gap(self) -> float:
        return self.ours_fit.slope - self.macdonald_fit.slope

    @property
    def gap_as_expected(self) -> bool:
        return abs(self.slope_gap - EXPECTED_GAP) <= GAP_TOL


def compare_macdonald(j=50.0, thetas=DEFAULT_THETAS, level=0) -> MacDonaldComparison:
    """Erreurs des deux séries au même niveau, ajustées en sin²(θ/2)"""
    fixed = {'j': float(j), 'mu': 0.0}
    ours = list(run_error_map('legendre_p', [thetas], level, fixed=fixed))
    theirs = list(run_error_map('legendre_p_macdonald', [thetas], level, fixed={'j': float(j)}))
    comparison = MacDonaldComparison(
        ours, theirs,
        fit_convergence(ours, FIT_ABSCISSA),
        fit_convergence(theirs, FIT_ABSCISSA),
    )
    logger.info(
        "📊 MacDonald j=%s : pentes %.3f (z) contre %.3f (MacDonald) en sin²(θ/2)",
        j, comparison.ours_fit.slope, comparison.macdonald_fit.slope,
    )
    return comparison
