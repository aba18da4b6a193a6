"""
Coefficients rationnels c_{m,k} des corrections en 1/(j(j+b))^m.

Le produit (−j)_n (j+b)_n = Π_{i<n} (i(i+b) − Λ), Λ = j(j+b), se
développe en Σ_m e_m(n) (−Λ)^{n−m} où e_m(n) est le polynôme symétrique
élémentaire des valeurs {i(i+b) : i < n}. Écrit dans la base des
factorielles descendantes n^(k), e_m(n) = Σ_k a_{m,k} n^(k), ce qui
ramène chaque somme sur n à une fonction de Bessel d'ordre μ+k :
c_{m,k} = (−1)^{m+k+1} a_{m,k}. Tout est calculé en fractions exactes.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial
from types import MappingProxyType


def _as_fraction(b):
    # un float devient la fraction exacte de sa représentation binaire
    return b if isinstance(b, Fraction) else Fraction(b)


class CoefficientTable:
    """
    Table immuable (m, k) → c_{m,k}.

    Les entrées absentes valent 0 ; c_{0,0} = −1 porte le terme de tête.
    """
    __slots__ = ('_b', '_entries', '_floats')

    def __init__(self, b, entries):
        object.__setattr__(self, '_b', _as_fraction(b))
        clean = {key: Fraction(value) for key, value in entries.items() if value != 0}
        object.__setattr__(self, '_entries', MappingProxyType(clean))
        object.__setattr__(self, '_floats', {})

    def __setattr__(self, name, value):
        raise AttributeError("CoefficientTable est immuable")

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def max_order(self) -> int:
        return max((m for m, _ in self._entries), default=0)

    def __getitem__(self, key) -> Fraction:
        return self._entries.get(tuple(key), Fraction(0))

    def __contains__(self, key):
        return tuple(key) in self._entries

    def __iter__(self):
        return iter(sorted(self._entries))

    def __len__(self):
        return len(self._entries)

    def items(self):
        return [(key, self._entries[key]) for key in sorted(self._entries)]

    def group(self, m) -> tuple:
        """Couples (k, c_{m,k}) du groupe d'ordre m, triés par k"""
        return tuple((k, c) for (order, k), c in self.items() if order == m)

    def float_group(self, m) -> tuple:
        cached = self._floats.get(m)
        if cached is None:
            cached = tuple((k, float(c)) for k, c in self.group(m))
            self._floats[m] = cached
        return cached

    def restricted(self, max_order) -> 'CoefficientTable':
        """Copie limitée aux groupes m ≤ max_order"""
        return CoefficientTable(self._b, {key: c for key, c in self._entries.items() if key[0] <= max_order})

    def differences(self, other) -> list:
        """Entrées qui diffèrent : [((m, k), ici, là-bas), ...]"""
        keys = sorted(set(self._entries) | set(other._entries))
        return [(key, self[key], other[key]) for key in keys if self[key] != other[key]]

    def __eq__(self, other):
        if not isinstance(other, CoefficientTable):
            return NotImplemented
        return dict(self._entries) == dict(other._entries)

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        body = ', '.join(f"{key}: {value}" for key, value in self.items())
        return f"CoefficientTable(b={self._b}, {{{body}}})"

    def format_rows(self) -> list:
        return [f"m={m} k={k} c={c}" for (m, k), c in self.items()]


def elementary_symmetric(values, order) -> list:
    """[e_0, ..., e_order] des valeurs données"""
    e = [Fraction(1)] + [Fraction(0)] * order
    for v in values:
        for m in range(order, 0, -1):
            e[m] += v * e[m - 1]
    return e


def falling_factorial_coefficients(samples) -> list:
    """
    Coefficients a_k tels que f(n) = Σ_k a_k n^(k), à partir de f(0..d).

    Différences avancées de Newton : a_k = Δ^k f(0) / k!.
    """
    diffs = [Fraction(s) for s in samples]
    coeffs = []
    for k in range(len(samples)):
        coeffs.append(diffs[0] / factorial(k))
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    return coeffs


@lru_cache(maxsize=128)
def _general_entries(b: Fraction, max_order: int) -> tuple:
    degree = 3 * max_order
    samples = [[] for _ in range(max_order + 1)]
    state = [Fraction(1)] + [Fraction(0)] * max_order
    for n in range(degree + 1):
        for m in range(max_order + 1):
            samples[m].append(state[m])
        value = n * (n + b)
        for m in range(max_order, 0, -1):
            state[m] += value * state[m - 1]
    entries = []
    for m in range(max_order + 1):
        for k, a in enumerate(falling_factorial_coefficients(samples[m])):
            if a != 0:
                sign = -1 if (m + k + 1) % 2 else 1
                entries.append(((m, k), sign * a))
    return tuple(entries)


def coefficient_table(b, max_order=3) -> CoefficientTable:
    """Table générale c_{m,k}(b) pour m ≤ max_order"""
    if max_order < 0:
        raise ValueError("max_order doit être >= 0")
    b = _as_fraction(b)
    return CoefficientTable(b, dict(_general_entries(b, max_order)))


def legendre_coeff_table() -> CoefficientTable:
    """Table de Legendre (b = 1) jusqu'au second ordre"""
    return coefficient_table(1, max_order=2)


def printed_table(b) -> CoefficientTable:
    """
    Formes fermées des groupes m = 1, 2 en fonction de b, telles qu'on les
    écrit à la main ; sert de référence indépendante au générateur.
    """
    b = _as_fraction(b)
    return CoefficientTable(b, {
        (0, 0): Fraction(-1),
        (1, 2): (b + 1) / 2,
        (1, 3): Fraction(-1, 3),
        (2, 3): (b + 1) * (b + 2) / 3,
        (2, 4): -(11 + 8 * b + b * b) / 8,
        (2, 5): (17 + 5 * b) / 30,
        (2, 6): Fraction(-1, 18),
    })


@lru_cache(maxsize=64)
def far_coefficients(p: int, q: int) -> tuple:
    """
    Couples (k, a_k) de e_p(n)·e_q(n) = Σ_k a_k n^(k), e sur {0, ..., n−1}.

    Ce sont les poids des termes j₁^{−p} j₂^{−q} du développement des
    symboles (j₁)_n (j₂)_n / (j₁ j₂)^n.
    """
    order = max(p, q)
    degree = 2 * (p + q)
    samples = []
    for n in range(degree + 1):
        e = elementary_symmetric(range(n), order)
        samples.append(e[p] * e[q])
    return tuple((k, a) for k, a in enumerate(falling_factorial_coefficients(samples)) if a != 0)
