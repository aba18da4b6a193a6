import math

import mpmath
import pytest

from special_core.limits import epsilon_limit_with_group, symmetric_epsilon_limit
from special_core.precision import DoubleDouble, _two_prod, _two_sum


@pytest.mark.unit
class TestDoubleDoubleUnit:
    """
    Test unitaire: scalaire double-double des oracles
    """

    def test_two_sum_is_exact(self):
        """s + e == a + b exactement"""
        s, e = _two_sum(1.0, 1e-20)
        assert s == 1.0 and e == 1e-20

    def test_two_prod_is_exact(self):
        """p + e == a·b exactement"""
        a, b = 1.0 + 2 ** -30, 1.0 - 2 ** -30
        p, e = _two_prod(a, b)
        assert mpmath.mpf(p) + mpmath.mpf(e) == mpmath.mpf(a) * mpmath.mpf(b)

    def test_third_times_three(self):
        """(1/3)·3 = 1 à ~1e-31 près"""
        third = DoubleDouble(1.0) / 3
        product = third * 3
        with mpmath.workdps(40):
            assert abs(product.to_mpf() - 1) < mpmath.mpf('1e-31')

    def test_repeated_sum_beats_double(self):
        """Σ 0.1 (dix fois) garde l'erreur de représentation de 0.1 et rien d'autre"""
        total = DoubleDouble(0.0)
        for _ in range(10):
            total = total + 0.1
        with mpmath.workprec(200):
            expected = 10 * mpmath.mpf(0.1)
            assert abs(total.to_mpf() - expected) < mpmath.mpf('1e-30')

    def test_round_trip_from_mpf(self):
        """Conversion mpf → double-double → float = arrondi de hi + lo"""
        with mpmath.workdps(40):
            value = mpmath.log(2)
        dd = DoubleDouble.from_mpf(value)
        assert float(dd) == float(value)
        assert abs(dd.lo) <= math.ulp(dd.hi) / 2

    def test_ordering_and_immutability(self):
        """Comparaisons totales, objet immuable"""
        a = DoubleDouble(1.0, 1e-20)
        assert a > 1.0
        assert -a < 0
        with pytest.raises(AttributeError):
            a.hi = 2.0

    def test_division_by_zero(self):
        """Division par zéro signalée"""
        with pytest.raises(ZeroDivisionError):
            DoubleDouble(1.0) / 0.0


@pytest.mark.unit
class TestEpsilonLimitUnit:
    """
    Test unitaire: limite ε symétrique et extrapolation de Richardson
    """

    def test_smooth_function_is_reproduced(self):
        """Sur une fonction régulière, la limite est sa valeur"""
        value, err = symmetric_epsilon_limit(lambda a: (math.exp(a), 0.0), 0.3)
        assert value == pytest.approx(math.exp(0.3), rel=1e-12)
        assert err < 1e-10

    def test_simple_pole_cancels(self):
        """Le pôle 1/sin(πα) disparaît dans la moyenne symétrique"""
        value, _ = symmetric_epsilon_limit(
            lambda a: (math.cos(a) + 1.0 / math.sin(math.pi * a), 0.0), 0.0,
        )
        assert value == pytest.approx(1.0, abs=1e-10)

    def test_requires_three_steps(self):
        """Trois pas ε obligatoires"""
        with pytest.raises(ValueError):
            symmetric_epsilon_limit(lambda a: (a, 0.0), 1.0, epsilons=(1e-3, 5e-4))

    def test_group_pole_cancels_before_absolute_value(self):
        """Le groupe signé passe par la limite avant la valeur absolue"""
        value, err = epsilon_limit_with_group(
            lambda a: (math.exp(a), 0.5 + 1e-3 / math.sin(math.pi * a)), 0.0,
        )
        assert value == pytest.approx(1.0, abs=1e-10)
        assert err == pytest.approx(0.5, abs=1e-8)
