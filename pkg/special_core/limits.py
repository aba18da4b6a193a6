"""
Limite ε symétrique avec extrapolation de Richardson.

Sert aux formes en π/(2 sin πα) et cot πα des fonctions de seconde
espèce quand l'ordre α est entier : la moyenne g(ε) = [f(n+ε) + f(n−ε)]/2
élimine le pôle, puis deux passes de Richardson en ε² éliminent les
termes O(ε²) et O(ε⁴).
"""

import logging

logger = logging.getLogger(__name__)

EPSILONS = (1e-3, 5e-4, 2.5e-4)


def symmetric_epsilon_limit(evaluate, center, epsilons=EPSILONS):
    """
    Retourne (valeur, incertitude) pour la limite de evaluate(α) en α = center.

    ``evaluate`` renvoie un couple (valeur, erreur estimée) ; l'incertitude
    combine la plus grande erreur estimée et l'écart entre les deux
    derniers niveaux d'extrapolation.
    """
    if len(epsilons) != 3:
        raise ValueError("trois pas ε sont nécessaires (pas successifs divisés par 2)")
    averages = []
    worst = 0.0
    for eps in epsilons:
        upper, err_upper = evaluate(center + eps)
        lower, err_lower = evaluate(center - eps)
        averages.append(0.5 * (upper + lower))
        worst = max(worst, err_upper, err_lower)
    g0, g1, g2 = averages
    # ε_{i+1} = ε_i / 2 : facteurs 4 puis 16
    r0 = (4.0 * g1 - g0) / 3.0
    r1 = (4.0 * g2 - g1) / 3.0
    value = (16.0 * r1 - r0) / 15.0
    logger.debug("ε-limite en %s : g=%s, extrapolé=%s", center, averages, value)
    return value, worst + abs(value - r1)


def epsilon_limit_with_group(evaluate, center, epsilons=EPSILONS):
    """
    Limite ε d'une valeur et d'un groupe de correction signé.

    ``evaluate`` renvoie (valeur, groupe signé) ; les deux passent par la
    moyenne symétrique, ce qui élimine aussi le pôle en 1/sin πα du groupe.
    Retourne (valeur, |groupe| + incertitudes d'extrapolation).
    """
    value, value_spread = symmetric_epsilon_limit(lambda a: (evaluate(a)[0], 0.0), center, epsilons)
    group, group_spread = symmetric_epsilon_limit(lambda a: (evaluate(a)[1], 0.0), center, epsilons)
    return value, abs(group) + value_spread + group_spread
