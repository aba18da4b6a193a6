import math
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from legendre_asym.coefficients import (
    coefficient_table, elementary_symmetric, falling_factorial_coefficients,
    far_coefficients, legendre_coeff_table, printed_table,
)
from legendre_asym.legendre import (
    legendre_p_asym, legendre_p_cut, legendre_p_macdonald, legendre_q_asym,
    legendre_q_cut, legendre_q_from_p,
)
from legendre_asym.schemas import Approximant, RegionTag, check_level, legendre_params
from legendre_asym.series import p_series
from special_core.bessel import bessel_j
from special_core.exceptions import ConditioningWarning, DomainError, RegionError, TruncationError


@pytest.mark.unit
class TestCoefficientTableUnit:
    """
    Test unitaire: génération des coefficients c_{m,k}
    """

    def test_legendre_table_values(self):
        """b = 1 : valeurs de la table de Legendre jusqu'au second ordre"""
        table = legendre_coeff_table()
        assert table[0, 0] == -1
        assert table[1, 2] == 1
        assert table[1, 3] == Fraction(-1, 3)
        assert table[2, 3] == 2
        assert table[2, 4] == Fraction(-5, 2)
        assert table[2, 5] == Fraction(11, 15)
        assert table[2, 6] == Fraction(-1, 18)
        assert len(table) == 7

    def test_missing_entries_are_zero(self):
        """Une entrée absente vaut 0, pas de KeyError"""
        table = legendre_coeff_table()
        assert table[1, 0] == 0
        assert (1, 0) not in table

    def test_every_group_starts_above_its_order(self):
        """k ≥ m+1 pour m ≥ 1 : aucune puissance négative de u"""
        table = coefficient_table(Fraction(7, 3), max_order=3)
        for (m, k), _ in table.items():
            if m >= 1:
                assert k >= m + 1

    @pytest.mark.parametrize('b', [0, 1, 2, Fraction(1, 2), Fraction(-3, 4), 2.5])
    def test_generator_matches_printed_forms(self, b):
        """Le générateur reproduit les formes fermées des groupes 1 et 2"""
        generated = coefficient_table(b, max_order=2)
        assert generated.differences(printed_table(b)) == []
        assert generated == printed_table(b)

    @settings(max_examples=40, deadline=None)
    @given(
        numerator=st.integers(min_value=-20, max_value=40),
        denominator=st.integers(min_value=1, max_value=12),
    )
    def test_generator_matches_printed_forms_for_rational_b(self, numerator, denominator):
        """Accord exact pour b rationnel quelconque"""
        b = Fraction(numerator, denominator)
        assert coefficient_table(b, max_order=2) == printed_table(b)

    def test_table_is_immutable(self):
        table = legendre_coeff_table()
        with pytest.raises(AttributeError):
            table.foo = 1

    def test_restricted_drops_higher_groups(self):
        table = coefficient_table(1, max_order=3).restricted(1)
        assert table.max_order == 1
        assert table == coefficient_table(1, max_order=1)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            coefficient_table(1, max_order=-1)

    def test_elementary_symmetric(self):
        """e_m de {1, 2, 3}"""
        assert elementary_symmetric([1, 2, 3], 3) == [1, 6, 11, 6]

    def test_falling_factorial_basis(self):
        """n² = n^(2) + n^(1)"""
        assert falling_factorial_coefficients([0, 1, 4]) == [0, 1, 1]

    def test_far_coefficients_first_orders(self):
        """e_0 e_0 = 1 ; e_1(n) = n(n−1)/2 = n^(2)/2"""
        assert far_coefficients(0, 0) == ((0, 1),)
        assert far_coefficients(1, 0) == ((2, Fraction(1, 2)),)
        assert far_coefficients(0, 1) == far_coefficients(1, 0)


@pytest.mark.unit
class TestSchemasUnit:
    """
    Test unitaire: validation des paramètres et niveaux
    """

    def test_region_tag(self):
        assert legendre_params(3.0, 0.0, 0.5).region is RegionTag.ON_CUT
        assert legendre_params(3.0, 0.0, 1.0).region is RegionTag.ON_CUT
        assert legendre_params(3.0, 0.0, 1.5).region is RegionTag.OFF_CUT

    @pytest.mark.parametrize('j,mu,x', [
        (-1.0, 0.0, 0.5),
        (2.0, 0.0, -1.0),
        (math.nan, 0.0, 0.5),
        (2.0, math.inf, 0.5),
    ])
    def test_invalid_parameters_raise_domain_error(self, j, mu, x):
        with pytest.raises(DomainError):
            legendre_params(j, mu, x)

    @pytest.mark.parametrize('level', [-1, 3, 1.0, True])
    def test_invalid_levels(self, level):
        with pytest.raises(TruncationError):
            check_level(level)

    def test_approximant_rejects_negative_error(self):
        with pytest.raises(ValueError):
            Approximant(value=1.0, err_estimate=-1.0, terms_used=1)


@pytest.mark.unit
class TestLegendrePUnit:
    """
    Test unitaire: séries de Bessel de première espèce
    """

    @pytest.mark.parametrize('mu', [0.0, 0.3, 1.0, 2.5])
    @pytest.mark.parametrize('x', [-0.5, 0.2, 0.9, 1.5])
    def test_degree_zero_is_exact(self, mu, x):
        """j = 0 : P_0^{−μ} = |(1−x)/(1+x)|^{μ/2}/Γ(1+μ), erreur nulle"""
        result = legendre_p_asym(0.0, mu, x)
        expected = abs((1.0 - x) / (1.0 + x)) ** (mu / 2.0) / math.gamma(1.0 + mu)
        assert result.value == pytest.approx(expected, rel=1e-14)
        assert result.err_estimate == 0.0

    def test_value_at_one(self):
        """P_j(1) = 1 pour μ = 0"""
        assert legendre_p_asym(7.3, 0.0, 1.0).value == pytest.approx(1.0, abs=1e-15)

    def test_small_degree_is_continuous(self):
        """j → 0 sans singularité"""
        near = legendre_p_asym(1e-9, 0.3, 0.5).value
        at_zero = legendre_p_asym(0.0, 0.3, 0.5).value
        assert near == pytest.approx(at_zero, rel=1e-7)

    def test_level_zero_is_the_bessel_function(self):
        """Niveau 0, μ = 0 : J_0(z), z = √(2j(j+1)(1−x))"""
        j, x = 12.0, 0.97
        z = math.sqrt(2.0 * j * (j + 1.0) * (1.0 - x))
        assert legendre_p_asym(j, 0.0, x, level=0).value == pytest.approx(bessel_j(0, z), rel=1e-13)

    def test_levels_reduce_error_estimate(self):
        errs = [legendre_p_asym(20.0, 0.5, 0.99, level=level).err_estimate for level in (0, 1, 2)]
        assert errs[0] > errs[1] > errs[2] > 0.0

    def test_series_engine_counts_terms(self):
        """Niveau 2 : 1 + 2 + 4 fonctions de Bessel"""
        assert p_series(0.0, 30.0, 0.01, 1.0, 2).terms_used == 7

    def test_far_argument_rejected(self):
        with pytest.raises(RegionError):
            legendre_p_asym(5.0, 0.0, 3.5)

    def test_cut_requires_cut(self):
        with pytest.raises(RegionError):
            legendre_p_cut(5.0, 0.0, 1.5)

    def test_positive_order_on_cut(self):
        """𝖯^{+μ} est la même série avec −μ"""
        assert legendre_p_cut(10.0, 0.4, 0.9, positive_order=True).value == legendre_p_cut(10.0, -0.4, 0.9).value

    def test_macdonald_level_zero(self):
        """Niveau 0 : J_0((j+½)√(2(1−x)))"""
        j, x = 40.0, math.cos(0.01)
        z = (j + 0.5) * math.sqrt(2.0 * (1.0 - x))
        result = legendre_p_macdonald(j, x, level=0)
        assert result.value == pytest.approx(bessel_j(0, z), rel=1e-14)
        assert result.terms_used == 1

    def test_macdonald_rejects_off_cut(self):
        with pytest.raises(RegionError):
            legendre_p_macdonald(10.0, 1.2)


@pytest.mark.unit
class TestLegendreQUnit:
    """
    Test unitaire: seconde espèce
    """

    def test_degree_zero_closed_form(self):
        """Q_0(x) = ½ln|(1+x)/(1−x)|"""
        assert legendre_q_cut(0.0, 0.5).value == pytest.approx(0.5 * math.log(3.0), rel=1e-15)
        assert legendre_q_asym(0.0, 0.0, 2.0).value == pytest.approx(0.5 * math.log(3.0), rel=1e-15)

    def test_cut_rejects_endpoints(self):
        for x in (1.0, 1.5):
            with pytest.raises(DomainError):
                legendre_q_cut(3.0, x)

    def test_printed_form_stops_at_level_one(self):
        with pytest.raises(TruncationError):
            legendre_q_cut(3.0, 0.9, level=2, printed=True)

    def test_off_cut_rejects_cut(self):
        with pytest.raises(RegionError):
            legendre_q_asym(3.0, 0.0, 0.5)

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            legendre_q_asym(3.0, -0.5, 1.2)

    def test_nonzero_order_only_leading(self):
        with pytest.raises(TruncationError):
            legendre_q_asym(3.0, 0.5, 1.2, level=1)

    def test_integer_order_warns(self):
        with pytest.warns(ConditioningWarning):
            result = legendre_q_asym(10.0, 1.0, 1.05)
        assert math.isfinite(result.value)
        assert math.isfinite(result.err_estimate)

    def test_non_integer_order_does_not_warn(self):
        with warnings.catch_warnings():
            warnings.simplefilter('error', ConditioningWarning)
            legendre_q_asym(10.0, 0.5, 1.05)

    def test_from_p_rejects_integer_order(self):
        with pytest.raises(DomainError):
            legendre_q_from_p(10.0, 2.0, 0.9)

    def test_from_p_singular_at_one(self):
        with pytest.raises(DomainError):
            legendre_q_from_p(10.0, 0.5, 1.0)
