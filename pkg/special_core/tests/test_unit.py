import math

import mpmath
import pytest
from scipy import special

from special_core.bessel import (
    bessel_i, bessel_j, bessel_k, bessel_k0_log_regular, bessel_y,
    bessel_y0_log_regular, log_reduced_bessel, reduced_bessel, scaled_bessel_k,
    scaled_bessel_y,
)
from special_core.exceptions import DomainError
from special_core.gamma import digamma, gamma_ratio, log_gamma, signed_log_gamma

EULER_GAMMA = 0.57721566490153286061


@pytest.mark.unit
class TestBesselFunctionsUnit:
    """
    Test unitaire: fonctions de Bessel J, Y, I, K d'ordre réel
    """

    def test_j0_at_origin(self):
        """J_0(0) = 1 par la série"""
        assert bessel_j(0, 0.0) == 1.0

    def test_half_order_closed_form(self):
        """J_{1/2}(π/2) = 2/π"""
        assert bessel_j(0.5, math.pi / 2) == pytest.approx(2 / math.pi, rel=1e-14)

    def test_j2_against_ascending_series(self):
        """J_2(1) contre la série ascendante sommée en précision étendue"""
        with mpmath.workdps(40):
            reference = mpmath.nsum(
                lambda k: (-1) ** k * mpmath.mpf(0.5) ** (2 * k + 2)
                / (mpmath.factorial(k) * mpmath.factorial(k + 2)),
                [0, mpmath.inf],
            )
        assert bessel_j(2, 1.0) == pytest.approx(float(reference), rel=1e-13)

    @pytest.mark.parametrize('nu,x', [(0.3, 0.7), (2.5, 12.0), (17.0, 25.0), (30.0, 49.0)])
    def test_j_against_mpmath(self, nu, x):
        """Erreur relative <= 1e-13 sur l'enveloppe 0 <= x <= 50, |ν| <= 30"""
        assert bessel_j(nu, x) == pytest.approx(float(mpmath.besselj(nu, x)), rel=1e-13)

    def test_k_half_order_closed_form(self):
        """K_{1/2}(1) = √(π/2)·e⁻¹"""
        assert bessel_k(0.5, 1.0) == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-1), rel=1e-14)

    def test_i0_at_origin(self):
        """I_0(0) = 1"""
        assert bessel_i(0, 0.0) == 1.0

    def test_k0_against_integral(self):
        """K_0(2) = ∫₀^∞ exp(−2 cosh t) dt, intégrande sous e^{−20000} au-delà de t = 10"""
        reference = mpmath.quad(lambda t: mpmath.exp(-2 * mpmath.cosh(t)), [0, 1, 3, 10])
        assert bessel_k(0, 2.0) == pytest.approx(float(reference), rel=1e-12)

    @pytest.mark.parametrize('func', [bessel_y, bessel_k])
    def test_second_kind_rejects_zero(self, func):
        """Y et K exigent x > 0"""
        with pytest.raises(DomainError):
            func(1.0, 0.0)

    @pytest.mark.parametrize('func', [bessel_j, bessel_i])
    def test_first_kind_rejects_negative(self, func):
        """Argument négatif refusé plutôt que prolongé"""
        with pytest.raises(DomainError):
            func(1.0, -0.5)

    def test_rejects_non_finite_and_large_order(self):
        """Entrées non finies et |ν| > 200 refusées"""
        with pytest.raises(DomainError):
            bessel_j(math.nan, 1.0)
        with pytest.raises(DomainError):
            bessel_i(250.0, 1.0)


@pytest.mark.unit
class TestBesselIdentitiesUnit:
    """
    Test unitaire: wronskiens, prolongement et limite d'ordre entier
    """

    @pytest.mark.parametrize('nu', [0.0, 0.5, 3.0, 10.0])
    @pytest.mark.parametrize('x', [0.1, 1.0, 7.5, 40.0])
    def test_wronskian_j_y(self, nu, x):
        """J_ν Y'_ν − J'_ν Y_ν = 2/(πx)"""
        jp = 0.5 * (bessel_j(nu - 1, x) - bessel_j(nu + 1, x))
        yp = 0.5 * (bessel_y(nu - 1, x) - bessel_y(nu + 1, x))
        wronskian = bessel_j(nu, x) * yp - jp * bessel_y(nu, x)
        assert wronskian == pytest.approx(2 / (math.pi * x), rel=1e-10)

    @pytest.mark.parametrize('nu', [0.0, 0.5, 3.0, 10.0])
    @pytest.mark.parametrize('x', [0.1, 1.0, 7.5, 40.0])
    def test_wronskian_i_k(self, nu, x):
        """I_ν K'_ν − I'_ν K_ν = −1/x"""
        ip = 0.5 * (bessel_i(nu - 1, x) + bessel_i(nu + 1, x))
        kp = -0.5 * (bessel_k(nu - 1, x) + bessel_k(nu + 1, x))
        wronskian = bessel_i(nu, x) * kp - ip * bessel_k(nu, x)
        assert wronskian == pytest.approx(-1 / x, rel=1e-10)

    @pytest.mark.parametrize('nu', [0.0, 1.0, 2.0, 0.5])
    @pytest.mark.parametrize('z', [0.1, 2.0, 20.0])
    @pytest.mark.parametrize('sign', [1, -1])
    def test_continuation_to_imaginary_argument(self, nu, z, sign):
        """K_ν(∓iz) = ±(iπ/2)e^{±iπν/2}[J_ν(z) ± iY_ν(z)]"""
        hankel = complex(bessel_j(nu, z), sign * bessel_y(nu, z))
        rebuilt = sign * 0.5j * math.pi * complex(mpmath.exp(sign * 0.5j * math.pi * nu)) * hankel
        reference = complex(mpmath.besselk(nu, mpmath.mpc(0, -sign * z)))
        assert abs(rebuilt - reference) <= 1e-10 * abs(reference)

    @pytest.mark.parametrize('x', [0.5, 2.0, 3.0])
    def test_integer_order_limit(self, x):
        """K_0 = limite de (π/2)(I_{−ν} − I_ν)/sin νπ, moyenne en ν = ±1e-4"""
        def k_from_i(nu):
            return 0.5 * math.pi * (special.iv(-nu, x) - special.iv(nu, x)) / math.sin(nu * math.pi)
        averaged = 0.5 * (k_from_i(1e-4) + k_from_i(-1e-4))
        assert bessel_k(0, x) == pytest.approx(averaged, rel=1e-6)


@pytest.mark.unit
class TestEntireCombinationsUnit:
    """
    Test unitaire: fonctions entières utilisées près de l'argument nul
    """

    @pytest.mark.parametrize('nu', [0.0, 0.4, 2.0, 5.5])
    @pytest.mark.parametrize('z', [0.3, 4.0, 11.0])
    def test_reduced_bessel_on_both_sides(self, nu, z):
        """E_ν((z/2)²) = (z/2)^{−ν}J_ν(z) et E_ν(−(z/2)²) = (z/2)^{−ν}I_ν(z)"""
        u = (z / 2) ** 2
        assert reduced_bessel(nu, u) == pytest.approx((z / 2) ** -nu * special.jv(nu, z), rel=1e-12, abs=1e-15)
        assert reduced_bessel(nu, -u) == pytest.approx((z / 2) ** -nu * special.iv(nu, z), rel=1e-12)

    def test_reduced_bessel_at_zero(self):
        """E_ν(0) = 1/Γ(ν+1)"""
        assert reduced_bessel(2.5, 0.0) == pytest.approx(1 / math.gamma(3.5), rel=1e-14)

    def test_reduced_bessel_negative_integer_order(self):
        """E_{−2}(u) = u²E_2(u), i.e. (z/2)²J_{−2}(z) = (z/2)²J_2(z)"""
        z = 1.7
        u = (z / 2) ** 2
        assert reduced_bessel(-2.0, u) == pytest.approx((z / 2) ** 2 * special.jv(2, z), rel=1e-13)

    def test_log_reduced_bessel_large_order(self):
        """log|0F1(;ν+1;−u)| fini là où Γ(ν+1) déborde"""
        sign, log_value = log_reduced_bessel(250.0, 40.0)
        assert sign == 1.0
        assert log_value == pytest.approx(float(mpmath.log(mpmath.hyp0f1(251, -40))), rel=1e-12)

    def test_k0_log_regular_limit(self):
        """K_0(Z) + ln(Z/2)I_0(Z) → −γ quand Z → 0"""
        assert bessel_k0_log_regular(0.0) == pytest.approx(-EULER_GAMMA, rel=1e-15)

    def test_k0_log_regular_is_continuous_at_threshold(self):
        """Série et évaluation directe se raccordent au seuil 1e-3"""
        below = bessel_k0_log_regular(0.999e-3)
        above = bessel_k0_log_regular(1.001e-3)
        assert below == pytest.approx(above, abs=1e-9)

    def test_y0_log_regular_limit(self):
        """−(π/2)[Y_0 − (2/π)ln(z/2)J_0] → −γ quand z → 0"""
        assert bessel_y0_log_regular(0.0) == pytest.approx(-EULER_GAMMA, rel=1e-15)
        assert bessel_y0_log_regular(0.999e-3) == pytest.approx(bessel_y0_log_regular(1.001e-3), abs=1e-9)

    @pytest.mark.parametrize('k', [1, 2, 3, 6])
    def test_scaled_second_kind_limits(self, k):
        """(Z/2)^k K_k(Z) → (k−1)!/2 et (z/2)^k Y_k(z) → −(k−1)!/π"""
        assert scaled_bessel_k(k, 0.0) == math.factorial(k - 1) / 2
        assert scaled_bessel_k(k, 1e-6) == pytest.approx(math.factorial(k - 1) / 2, rel=1e-5)
        assert scaled_bessel_y(k, 1e-6) == pytest.approx(-math.factorial(k - 1) / math.pi, rel=1e-5)


@pytest.mark.unit
class TestGammaFamilyUnit:
    """
    Test unitaire: logΓ, ψ et rapports de gamma
    """

    def test_log_gamma_one(self):
        """logΓ(1) = 0"""
        assert log_gamma(1.0) == 0.0

    def test_digamma_one(self):
        """ψ(1) = −γ"""
        assert digamma(1.0) == pytest.approx(-EULER_GAMMA, rel=1e-14)

    def test_digamma_recurrence(self):
        """ψ(51) = ψ(1) + Σ_{k=1}^{50} 1/k"""
        expected = -EULER_GAMMA + math.fsum(1 / k for k in range(1, 51))
        assert digamma(51.0) == pytest.approx(expected, rel=1e-13)

    @pytest.mark.parametrize('a,b,expected', [(3.0, 1.0, 2.0), (7.25, 7.25, 1.0), (50.5, 49.5, 49.5)])
    def test_gamma_ratio(self, a, b, expected):
        """Γ(a)/Γ(b) sur les cas fermés"""
        assert gamma_ratio(a, b) == pytest.approx(expected, rel=1e-12)

    def test_gamma_ratio_large_arguments(self):
        """Γ(400)/Γ(398) = 399·398 sans débordement"""
        assert gamma_ratio(400.0, 398.0) == pytest.approx(399.0 * 398.0, rel=1e-12)

    def test_domain_errors(self):
        """Arguments non positifs refusés"""
        with pytest.raises(DomainError):
            log_gamma(0.0)
        with pytest.raises(DomainError):
            digamma(-1.5)
        with pytest.raises(DomainError):
            gamma_ratio(1.0, -2.0)

    def test_signed_log_gamma_negative_argument(self):
        """Γ(−0.5) = −2√π"""
        sign, log_abs = signed_log_gamma(-0.5)
        assert sign == -1.0
        assert math.exp(log_abs) == pytest.approx(2 * math.sqrt(math.pi), rel=1e-14)
