"""Vérification exacte des tables de coefficients c_{m,k}(b)"""

import logging
from fractions import Fraction
from typing import NamedTuple

from jacobi_asym.jacobi import jacobi_coeff_table
from legendre_asym.coefficients import CoefficientTable, legendre_coeff_table, printed_table

logger = logging.getLogger(__name__)


class TableCheck(NamedTuple):
    label: str
    differences: list

    @property
    def passed(self) -> bool:
        return not self.differences


class TableReport(NamedTuple):
    checks: list
    tables: dict

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def lines(self) -> list:
        out = []
        for check in self.checks:
            out.append(f"{'✅' if check.passed else '❌'} {check.label}")
            for key, ours, theirs in check.differences:
                out.append(f"   (m, k) = {key} : {ours} ≠ {theirs}")
        for label, table in self.tables.items():
            out.append(f"📊 {label}")
            out.extend(f"   {row}" for row in table.format_rows())
        return out


def perturbed(table: CoefficientTable, changes) -> CoefficientTable:
    """Copie de ``table`` avec c_{m,k} += delta pour chaque ((m, k), delta)"""
    entries = {key: value for key, value in table.items()}
    for key, delta in changes.items():
        entries[key] = entries.get(key, Fraction(0)) + Fraction(delta)
    return CoefficientTable(table.b, entries)


def verify_tables(perturbation=None) -> TableReport:
    """
    Compare en arithmétique rationnelle la table de Jacobi à b = 1 et la
    table de Legendre, puis le générateur aux formes fermées à b = 1 et b = 2.

    ``perturbation`` ({(m, k): delta}) modifie la table de Jacobi testée ;
    sert de contrôle négatif.
    """
    jacobi_one = jacobi_coeff_table(1)
    if perturbation:
        jacobi_one = perturbed(jacobi_one, perturbation)
    legendre = legendre_coeff_table()
    jacobi_two = jacobi_coeff_table(2)
    checks = [
        TableCheck("table de Jacobi à b = 1 = table de Legendre", jacobi_one.differences(legendre)),
        TableCheck("générateur = formes fermées à b = 1", legendre.differences(printed_table(1))),
        TableCheck("générateur = formes fermées à b = 2", jacobi_two.differences(printed_table(2))),
    ]
    report = TableReport(checks, {'b = 1': legendre, 'b = 2': jacobi_two})
    logger.debug("vérification des tables : %s", 'succès' if report.passed else 'échec')
    return report
