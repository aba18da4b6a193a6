"""
Contrôles nommés, exécutables par ``asymptotics preset <nom>``.

Chaque preset retourne un PresetResult : succès, lignes de compte rendu,
enregistrements produits et indicateur d'incohérence d'oracle.
"""

import logging
import math
from typing import Callable, NamedTuple

import mpmath
import numpy as np

from jacobi_asym.far import jacobi_q_asym_alt, jacobi_q_asym_far
from legendre_asym.legendre import legendre_p_asym, legendre_p_offset_series, legendre_q_asym, legendre_q_cut
from oracle.checks import require_agreement
from oracle.hypergeometric import legendre_p_hypergeometric
from oracle.jacobi import jacobi_q_oracle
from oracle.legendre import legendre_p_oracle, legendre_q_oracle
from rotation.wigner import canonicalize, wigner_d_asym, wigner_d_exact
from special_core.exceptions import OracleInconsistencyError

from .eikonal import eikonal_demo, total_cross_section
from .error_map import run_error_map
from .fitting import fit_convergence
from .macdonald import compare_macdonald
from .schemas import EikonalModel, GridSpec, RecordStatus
from .tables import verify_tables

logger = logging.getLogger(__name__)

DEGREES = GridSpec(name='j', values=(10, 20, 40, 80))
EIKONAL_TOL = 2e-3
# ordre exact −1 en j(j+1), atteint à la courbure près
Q_LEADING_SLOPE = -0.95


class PresetResult(NamedTuple):
    name: str
    passed: bool
    lines: list
    records: tuple = ()
    oracle_failure: bool = False


class Preset(NamedTuple):
    name: str
    description: str
    run: Callable


def _check(lines, label, ok):
    lines.append(f"{'✅' if ok else '❌'} {label}")
    return ok


def coefficient_reduction() -> PresetResult:
    report = verify_tables()
    return PresetResult('coefficient-reduction', report.passed, report.lines())


def hypergeometric_match() -> PresetResult:
    lines, passed = [], True
    deltas = (1e-2, 1e-3)
    for j in (2.0, 5.0, 17.3):
        for mu in (0.0, 0.4):
            residuals = []
            for delta in deltas:
                x = 1.0 - delta
                truncated = legendre_p_hypergeometric(j, mu, x, 6)
                residuals.append(abs(legendre_p_offset_series(j, mu, x, max_offset=6) - truncated))
            order = float(mpmath.log(residuals[0] / residuals[1]) / mpmath.log(deltas[0] / deltas[1]))
            passed &= _check(lines, f"j={j} μ={mu} : ordre du résidu {order:.2f} > 6.5", order > 6.5)
    return PresetResult('hypergeometric-match', passed, lines)


def remainder_order() -> PresetResult:
    lines, records, passed = [], [], True
    for z, levels in ((1.0, (0, 1)), (3.0, (0, 1, 2)), (6.0, (0, 1, 2))):
        for level in levels:
            batch = list(run_error_map('legendre_p', [DEGREES], level, fixed={'mu': 0.0, 'z': z}))
            records.extend(batch)
            fit = fit_convergence(batch, 'j(j+1)')
            ok = abs(fit.slope + (level + 1)) <= 0.4 and (level < 2 or fit.r_squared > 0.98)
            passed &= _check(lines, f"z={z} niveau {level} : pente {fit.slope:.3f}, r² {fit.r_squared:.4f}", ok)
    return PresetResult('remainder-order', passed, lines, tuple(records))


def macdonald_comparison() -> PresetResult:
    lines = []
    comparison = compare_macdonald()
    passed = _check(lines, "erreur ponctuellement plus petite que MacDonald", comparison.pointwise_smaller)
    passed &= _check(lines, f"écart des pentes en sin²(θ/2) : {comparison.slope_gap:.3f} ≈ 1", comparison.gap_as_expected)
    passed &= _check(lines, f"pente z : {comparison.ours_fit.slope:.3f} ≈ 2", abs(comparison.ours_fit.slope - 2.0) <= 0.25)
    passed &= _check(lines, f"pente MacDonald : {comparison.macdonald_fit.slope:.3f} ≈ 1",
                     abs(comparison.macdonald_fit.slope - 1.0) <= 0.25)
    return PresetResult('macdonald', passed, lines, tuple(comparison.ours + comparison.macdonald))


def q_leading() -> PresetResult:
    lines, records, passed = [], [], True
    for function_id, fixed in (('legendre_q', {'mu': 0.0, 'Z': 2.0}), ('legendre_q_cut', {'z': 2.0})):
        batch = list(run_error_map(function_id, [DEGREES], 0, fixed=fixed))
        records.extend(batch)
        fit = fit_convergence(batch, 'j(j+1)', error='abs_err')
        passed &= _check(lines, f"{function_id} : pente {fit.slope:.3f} ≤ {Q_LEADING_SLOPE}", fit.slope <= Q_LEADING_SLOPE)
    q0 = legendre_q_asym(0.0, 0.0, 3.0).value
    passed &= _check(lines, f"Q_0(3) = {q0!r}", abs(q0 - 0.5 * math.log(2.0)) <= 1e-10)
    q0_cut = legendre_q_cut(0.0, 0.0).value
    passed &= _check(lines, f"𝖰_0(0) = {q0_cut!r}", abs(q0_cut) <= 1e-10)
    return PresetResult('q-leading', passed, lines, tuple(records))


def jacobi_regimes() -> PresetResult:
    lines = []
    far = jacobi_q_asym_far(8.0, 0.25, 0.25, 6.0, level=2)
    alt = jacobi_q_asym_alt(8.0, 0.25, 0.25, 6.0, level=2)
    passed = _check(lines, "formes lointaine et alternative compatibles à (8, ¼, ¼, 6)",
                    abs(far.value - alt.value) <= 2.0 * (far.err_estimate + alt.err_estimate))
    grids = [GridSpec(name='j', values=(8.0, 12.0)), GridSpec(name='x', values=(5.0, 6.0, 7.0, 8.0, 10.0))]
    records = []
    for function_id in ('jacobi_q_far', 'jacobi_q_alt'):
        batch = list(run_error_map(function_id, grids, 2, fixed={'alpha': 0.25, 'beta': 0.25}))
        records.extend(batch)
        within = all(r.status is RecordStatus.OK and r.abs_err <= 3.0 * r.err_estimate for r in batch)
        passed &= _check(lines, f"{function_id} : {len(batch)} points dans l'estimation d'erreur", within)
    return PresetResult('jacobi-regimes', passed, lines, tuple(records))


def rotation_order() -> PresetResult:
    lines = []
    rng = np.random.default_rng(7)
    identical = True
    for _ in range(10):
        j = int(rng.integers(1, 200))
        x = float(rng.uniform(0.5, 1.0))
        identical &= wigner_d_asym(canonicalize(j, 0, 0), x).value == legendre_p_asym(j, 0.0, x).value
    passed = _check(lines, "d^j_00 identique à P_j (10 points)", identical)

    records = list(run_error_map('wigner_d', [DEGREES], 1, fixed={'m_prime': 2.0, 'm': 1.0, 'z': 3.0}))
    fit = fit_convergence(records, "(j-m')(j+m'+1)")
    passed &= _check(lines, f"pente niveau 1 : {fit.slope:.3f} ≈ −2", abs(fit.slope + 2.0) <= 0.4)

    idx = canonicalize(20, 2, 0)
    worse = True
    for theta in np.linspace(0.01, 0.05, 5):
        exact = wigner_d_exact(idx, theta)
        x = math.cos(theta)
        ours = abs(wigner_d_asym(idx, x, level=0).value - exact)
        footnote = abs(wigner_d_asym(idx, x, level=0, footnote_argument=True).value - exact)
        worse &= footnote > ours
    passed &= _check(lines, "argument alternatif moins précis sur θ ∈ [0.01, 0.05]", worse)
    return PresetResult('rotation', passed, lines, tuple(records))


def symmetry_unitarity() -> PresetResult:
    lines = []
    closure = 0.0
    theta = 1.1
    for twice_j in range(9):
        projections = [(k - twice_j) / 2 for k in range(0, 2 * twice_j + 1, 2)]
        for m_prime in projections:
            for m in projections:
                sign = -1 if round(m_prime - m) % 2 else 1
                direct = wigner_d_exact(canonicalize(twice_j / 2, m_prime, m), theta)
                swapped = wigner_d_exact(canonicalize(twice_j / 2, m, m_prime), theta)
                closure = max(closure, abs(swapped - sign * direct))
    passed = _check(lines, f"symétries j ≤ 4 : écart max {closure:.2e}", closure <= 1e-12)
    for twice_j in (2, 5, 20):
        projections = [(k - twice_j) / 2 for k in range(0, 2 * twice_j + 1, 2)]
        for theta in (0.3, 1.2, 2.5):
            worst = max(
                abs(sum(wigner_d_exact(canonicalize(twice_j / 2, m_prime, m), theta) ** 2 for m in projections) - 1.0)
                for m_prime in projections
            )
            passed &= _check(lines, f"j={twice_j / 2} θ={theta} : normalisation à {worst:.2e}", worst <= 1e-10)
    return PresetResult('symmetry', passed, lines)


def eikonal_consistency() -> PresetResult:
    lines = []
    model = EikonalModel(p=10.0, chi0=1.0, width=1.0)
    rows = eikonal_demo(model, np.linspace(-2.0, 0.0, 9), j_max=150)
    worst = max(row.rel_diff for row in rows)
    passed = _check(lines, f"écart relatif max {worst:.2e} ≤ {EIKONAL_TOL:.0e}", worst <= EIKONAL_TOL)
    sigma = total_cross_section(model, j_max=150)
    passed &= _check(lines, f"σ_tot = {sigma:.6g} > 0", sigma > 0.0)
    return PresetResult('eikonal', passed, lines)


def oracle_consistency() -> PresetResult:
    """Oracles à deux chemins ; une incohérence fait échouer le preset"""
    lines = []
    try:
        for mu, x in ((0, 0.3), (2, 0.95), (-2, 1.4)):
            recurrence = legendre_p_oracle(5, mu, x, method='recurrence').value
            series = legendre_p_oracle(5, mu, x, method='series').value
            require_agreement(f"P_5^{mu}({x})", recurrence, series)
            lines.append(f"✅ P_5^{mu}({x}) : récurrence = série")
        for j, alpha, beta, x in ((6, 0.5, 1.5, 6.0), (5, 0.5, 0.5, 1.8), (7, 0.4, 0.3, 0.95)):
            result = jacobi_q_oracle(j, alpha, beta, x)
            lines.append(f"✅ Q_{j}^({alpha},{beta})({x}) : accord {result.agreement}")
        legendre_q_oracle(10, 1.5)
    except OracleInconsistencyError as e:
        lines.append(f"❌ {e}")
        return PresetResult('oracle-consistency', False, lines, oracle_failure=True)
    return PresetResult('oracle-consistency', True, lines)


PRESETS = {
    preset.name: preset for preset in (
        Preset('coefficient-reduction', "tables c_{m,k} : Jacobi à b = 1 = Legendre", coefficient_reduction),
        Preset('hypergeometric-match', "série tronquée = 2F1 jusqu'à (1−x)⁶", hypergeometric_match),
        Preset('remainder-order', "ordre du reste de P à z fixé", remainder_order),
        Preset('macdonald', "comparaison avec MacDonald à j = 50", macdonald_comparison),
        Preset('q-leading', "termes de tête de Q et cas j = 0", q_leading),
        Preset('jacobi-regimes', "formes lointaine et alternative de Jacobi", jacobi_regimes),
        Preset('rotation', "réduction, ordre et argument alternatif des d", rotation_order),
        Preset('symmetry', "symétries et normalisation des d exactes", symmetry_unitarity),
        Preset('eikonal', "ondes partielles contre eikonale", eikonal_consistency),
        Preset('oracle-consistency', "accord des oracles à deux chemins", oracle_consistency),
    )
}
