# -*- coding: utf-8 -*-
"""
Created on Fri Oct 16 14:21:08 2026
"""

import fractions
import json
import pathlib
import unittest

import numpy

from unitary_genera import errors, genera, manifolds, vanishing


class TheoremCheckTest(unittest.TestCase):
    """A class to test the numeric side of the vanishing engine on synthetic tables
    that satisfy the relation {exp(k x/2) A-hat}[M] = 0, on perturbed tables and on
    tables of manifolds whose first Chern class is torsion.

    Tests run include:
        1. test_synthetic_tables_pass - Test every conclusion is exactly zero
        2. test_synthesizer - Test determinism and non-zero individual numbers
        3. test_perturbation_is_detected - Test a changed number gives a residual
        4. test_torsion_tables - Test the degenerate corollary data pass
        5. test_projective_space_relation - Test the relation on CP^4 for several k
        6. test_errors - Test the errors of unsuitable tables
    """

    @classmethod
    def setUpClass(cls):
        """Load the cases and synthesize the tables"""

        file_path = pathlib.Path().cwd() / pathlib.Path(
            "tests/test_theorem_check/instruction.json"
        )
        with open(file_path, "r") as file_pointer:
            cls.instructions = json.load(file_pointer)["instructions"]
        cls.tables = {
            (n, k0, seed): vanishing.synthesize_consistent_table(n, k0, seed)
            for n, k0 in cls.instructions["synthetic_cases"]
            for seed in cls.instructions["seeds"]
        }

    def test_synthetic_tables_pass(self):
        """Test every conclusion is exactly zero"""

        for (n, k0, seed), table in self.tables.items():
            report = vanishing.check_theorem(table)
            label = f"n = {n}, k0 = {k0}, seed = {seed}"
            self.assertEqual(report.mode, "numeric")
            self.assertTrue(report.passed, f"{label}\n{report.render_text()}")
            self.assertTrue(report.premise_holds, label)
            self.assertTrue(
                numpy.all([c.residual == 0 for c in report.conclusions]), label
            )
            self.assertTrue(
                numpy.all([c.status == vanishing.VERIFIED for c in report.conclusions]), label
            )
            for k in vanishing.admissible_ks(n, k0):
                self.assertEqual(vanishing.verify_hattori_relation(table, k), 0, label)

    def test_synthesizer(self):
        """Test determinism and non-zero individual numbers"""

        case = self.instructions["generic"]
        table = vanishing.synthesize_consistent_table(case["n"], case["k0"], case["seed"])
        self.assertEqual(table, self.tables[(case["n"], case["k0"], case["seed"])])
        self.assertTrue(table.is_complete())
        for monomial in case["nonzero"]:
            self.assertNotEqual(table.number(monomial), 0, monomial)
        self.assertEqual(table.number("x^4"), 0)
        self.assertEqual(table.number("x^2 c_2"), 0)
        ahat_2 = genera.ahat_in_chern(4)[2]
        self.assertEqual(manifolds.evaluate_mixed(table, 0, ahat_2), 0)
        self.assertTrue(table.hypotheses["nontrivial_circle_action"])
        with self.assertRaises(errors.InsufficientBound):
            vanishing.synthesize_consistent_table(4, 5, 1)

    def test_perturbation_is_detected(self):
        """Test a changed number gives a residual"""

        case = self.instructions["perturbed"]
        table = self.tables[(case["n"], case["k0"], case["seed"])]
        free = {key: value for key, value in table.numbers.items() if key[1] == 0}
        target = manifolds.parse_monomial(case["monomial"], case["n"])
        free[target] += 1
        perturbed = manifolds.consistent_table(case["n"], case["k0"], free, table.hypotheses)
        report = vanishing.check_theorem(perturbed)
        self.assertFalse(report.passed)
        self.assertFalse(report.premise_holds)
        self.assertEqual(report.conclusions[0].residual, 1)
        self.assertEqual(report.conclusions[0].status, vanishing.VIOLATED)
        self.assertIn("FAIL", report.render_text())

        # changing a single c_1 entry breaks c_1 = k0 x itself
        numbers = dict(table.numbers)
        numbers[(3, 1, 0, 0, 0)] += 1
        with self.assertRaises(errors.InvariantViolation):
            manifolds.CharacteristicTable(4, True, case["k0"], numbers)

    def test_torsion_tables(self):
        """Test the degenerate corollary data pass"""

        for n, k0 in self.instructions["torsion_cases"]:
            table = vanishing.torsion_table(n, k0, seed=5)
            self.assertTrue(
                all(value == 0 for key, value in table.numbers.items() if key[0] + key[1] > 0)
            )
            report = vanishing.check_theorem(table)
            self.assertTrue(report.passed, report.render_text())
            self.assertTrue(numpy.all([c.residual == 0 for c in report.conclusions]))
            self.assertEqual(manifolds.evaluate_genus(table, genera.AHat()), 0)
        table = vanishing.torsion_table(4, 6, seed=5)
        self.assertNotEqual(table.number("c_2^2"), 0)
        self.assertEqual(table.number("c_4"), 3 * table.number("c_2^2"))

    def test_projective_space_relation(self):
        """Test the relation on CP^4 for several k"""

        cp4 = manifolds.cp_table(4)
        for k, value in self.instructions["cp4_relation"].items():
            self.assertEqual(
                vanishing.verify_hattori_relation(cp4, int(k)), fractions.Fraction(value), f"k = {k}"
            )
        self.assertEqual(manifolds.evaluate_genus(cp4, genera.Todd()), 1)
        with self.assertRaises(errors.InsufficientBound):
            vanishing.check_theorem(cp4)

    def test_errors(self):
        """Test the errors of unsuitable tables"""

        product = manifolds.product_table(manifolds.cp_table(1), manifolds.cp_table(1))
        with self.assertRaises(errors.NoDistinguishedClass):
            vanishing.check_theorem(product)
        with self.assertRaises(errors.NoDistinguishedClass):
            vanishing.verify_hattori_relation(product, 2)
        no_k0 = manifolds.CharacteristicTable(2, True, None, dict(manifolds.cp_table(2).numbers))
        with self.assertRaises(errors.NoDistinguishedClass):
            vanishing.check_theorem(no_k0)
        small = manifolds.consistent_table(1, 5, {"x": 1})
        with self.assertRaises(errors.DimensionTooSmall):
            vanishing.check_theorem(small)


if __name__ == "__main__":
    unittest.main()
