import math
import warnings

import pytest
from scipy import special

from jacobi_asym.far import jacobi_q_asym_alt, jacobi_q_asym_far
from jacobi_asym.jacobi import jacobi_coeff_table, jacobi_p_asym, jacobi_q_asym_near, jacobi_q_cut
from jacobi_asym.schemas import RegimeTag, jacobi_params
from legendre_asym.coefficients import legendre_coeff_table
from legendre_asym.legendre import legendre_q_cut
from special_core.exceptions import ConditioningWarning, DomainError, RegionError


@pytest.mark.unit
class TestJacobiSchemasUnit:
    """
    Test unitaire: paramètres et régimes de Jacobi
    """

    def test_b_is_derived(self):
        params = jacobi_params(3.0, 0.5, 1.25, 0.2)
        assert params.b == 2.75
        assert params.lam == 3.0 * 5.75

    @pytest.mark.parametrize('x,regime', [
        (0.5, RegimeTag.ON_CUT),
        (1.0, RegimeTag.ON_CUT),
        (1.5, RegimeTag.NEAR_ONE),
        (3.0, RegimeTag.FAR_ALT),
        (6.0, RegimeTag.FAR_LARGE),
    ])
    def test_regime(self, x, regime):
        assert jacobi_params(2.0, 0.1, 0.2, x).regime is regime

    @pytest.mark.parametrize('alpha,beta', [(-1.0, 0.0), (0.0, -1.5), (math.nan, 0.0)])
    def test_invalid_parameters(self, alpha, beta):
        with pytest.raises(DomainError):
            jacobi_params(2.0, alpha, beta, 0.5)


@pytest.mark.unit
class TestJacobiFirstKindUnit:
    """
    Test unitaire: série P_j^{(α,β)}
    """

    def test_table_reduces_to_legendre(self):
        assert jacobi_coeff_table(1) == legendre_coeff_table()

    def test_table_entry_depends_on_b(self):
        assert jacobi_coeff_table(3)[1, 2] == 2

    @pytest.mark.parametrize('alpha,beta,x', [(0.5, 1.0, 0.3), (-0.4, 2.0, 1.6), (3.0, 0.0, -0.7)])
    def test_degree_zero_is_one(self, alpha, beta, x):
        result = jacobi_p_asym(0.0, alpha, beta, x)
        assert result.value == pytest.approx(1.0, rel=1e-14)
        assert result.err_estimate == 0.0

    def test_far_argument_rejected(self):
        with pytest.raises(RegionError):
            jacobi_p_asym(5.0, 0.5, 0.5, 3.5)


@pytest.mark.unit
class TestJacobiSecondKindUnit:
    """
    Test unitaire: termes de tête de Q et 𝖰
    """

    def test_near_without_correction(self):
        """α+β = 0 : il ne reste que (Γ(j+α+1)/Γ(j+1))(Z/2)^{−α}K_α(Z)"""
        j, alpha, x = 9.0, 0.5, 1.05
        big_z = math.sqrt(2.0 * j * (j + 1.0) * (x - 1.0))
        expected = math.gamma(j + alpha + 1) / math.gamma(j + 1) * (big_z / 2) ** (-alpha) * special.kv(alpha, big_z)
        assert jacobi_q_asym_near(j, alpha, -alpha, x).value == pytest.approx(expected, rel=1e-13)

    def test_cut_without_correction(self):
        """α+β = 0 sur la coupure : terme en Y_α seul"""
        j, alpha, x = 12.0, 0.5, math.cos(0.1)
        z = math.sqrt(2.0 * j * (j + 1.0) * (1.0 - x))
        expected = (
            -0.5 * math.pi * math.gamma(j + alpha + 1) / math.gamma(j + 1)
            * (z / 2) ** (-alpha) * special.yv(alpha, z)
        )
        assert jacobi_q_cut(j, alpha, -alpha, x).value == pytest.approx(expected, rel=1e-13)

    def test_legendre_case_delegates(self):
        assert jacobi_q_cut(10.0, 0.0, 0.0, 0.98).value == legendre_q_cut(10.0, 0.98, level=0).value

    def test_small_degree_is_finite(self):
        values = [jacobi_q_asym_near(j, 0.5, 0.5, 1.5).value for j in (1e-4, 1.01e-4)]
        assert all(math.isfinite(v) for v in values)
        assert values[0] == pytest.approx(values[1], rel=0.05)

    def test_zero_degree_rejected(self):
        with pytest.raises(DomainError):
            jacobi_q_cut(0.0, 0.5, 0.5, 0.5)

    def test_integer_alpha_warns(self):
        with pytest.warns(ConditioningWarning):
            result = jacobi_q_cut(7.0, 1.0, 0.3, 0.95)
        assert math.isfinite(result.value) and math.isfinite(result.err_estimate)

    def test_zero_alpha_uses_closed_limit(self):
        """α = 0, β ≠ 0 : limite fermée, sans avertissement"""
        with warnings.catch_warnings():
            warnings.simplefilter('error', ConditioningWarning)
            result = jacobi_q_cut(7.0, 0.0, 0.6, 0.95)
        around = 0.5 * (jacobi_q_cut(7.0, 1e-4, 0.6, 0.95).value + jacobi_q_cut(7.0, -1e-4, 0.6, 0.95).value)
        assert result.value == pytest.approx(around, rel=1e-6)
        assert result.err_estimate > 0.0

    @pytest.mark.parametrize('function,x', [
        (jacobi_q_asym_near, 2.9),
        (jacobi_q_asym_near, 0.5),
        (jacobi_q_cut, 1.5),
    ])
    def test_region_errors(self, function, x):
        with pytest.raises(RegionError):
            function(5.0, 0.5, 0.5, x)


@pytest.mark.unit
class TestJacobiFarUnit:
    """
    Test unitaire: formes lointaines en représentation logarithmique
    """

    def test_degree_zero_far(self):
        """Q_0(5) = ½ln(3/2)"""
        exact = 0.5 * math.log(1.5)
        level0 = jacobi_q_asym_far(0.0, 0.0, 0.0, 5.0, level=0)
        level2 = jacobi_q_asym_far(0.0, 0.0, 0.0, 5.0, level=2)
        assert abs(level0.value - exact) <= 2.0 * level0.err_estimate
        assert abs(level2.value - exact) < abs(level0.value - exact)

    def test_degree_zero_alt(self):
        """Q_0(3) = ½ln2"""
        exact = 0.5 * math.log(2.0)
        level0 = jacobi_q_asym_alt(0.0, 0.0, 0.0, 3.0, level=0)
        level2 = jacobi_q_asym_alt(0.0, 0.0, 0.0, 3.0, level=2)
        assert level0.value < level2.value < exact
        assert abs(level2.value - exact) < abs(level0.value - exact)

    def test_log_magnitude_is_consistent(self):
        result = jacobi_q_asym_far(6.0, 0.5, 1.5, 6.0, level=1)
        assert result.log_abs_value == pytest.approx(math.log(abs(result.value)), rel=1e-12)
        assert result.log_err_estimate == pytest.approx(math.log(result.err_estimate), rel=1e-12)

    def test_underflow_keeps_logarithm(self):
        result = jacobi_q_asym_far(400.0, 0.0, 0.0, 1000.0, level=0)
        assert result.value == pytest.approx(0.0, abs=1e-300)
        assert math.isfinite(result.log_abs_value)
        assert result.log_abs_value < -700.0

    def test_far_rejects_circle(self):
        with pytest.raises(RegionError):
            jacobi_q_asym_far(3.0, 0.5, 0.5, 3.0)

    def test_alt_rejects_cut(self):
        with pytest.raises(RegionError):
            jacobi_q_asym_alt(3.0, 0.5, 0.5, 0.5)
