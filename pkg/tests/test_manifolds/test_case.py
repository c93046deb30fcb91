# -*- coding: utf-8 -*-
"""
Created on Thu Oct 15 15:48:19 2026
"""

import fractions
import json
import pathlib
import unittest

import numpy

from unitary_genera import errors, genera, manifolds, symmetric


class ManifoldsTest(unittest.TestCase):
    """A class to test the characteristic number tables of projective spaces,
    hypersurfaces and products, and the evaluation of genera on them.

    Tests run include:
        1. test_projective_spaces - Test Chern numbers of CP^n and Td(CP^n) = 1
        2. test_hypersurfaces - Test K3 and the degree one hypersurface
        3. test_classical_genera - Test L, A-hat and A_2 on CP^2
        4. test_mixed_numbers - Test x^a P[M] evaluations and their errors
        5. test_products - Test products, the point as unit and multiplicativity
        6. test_route_agreement - Test A_k[M] = k^n A_{1/k}[M] on every fixture
        7. test_table_invariants - Test weights, the c_1 = k0 x relation and parsing
    """

    @classmethod
    def setUpClass(cls):
        """Load the expected characteristic numbers and build the fixture tables"""

        file_path = pathlib.Path().cwd() / pathlib.Path("tests/test_manifolds/instruction.json")
        with open(file_path, "r") as file_pointer:
            cls.instructions = json.load(file_pointer)["instructions"]
        cls.projective = {n: manifolds.cp_table(n) for n in range(1, 5)}
        k3 = cls.instructions["k3"]
        cls.k3 = manifolds.hypersurface_table(k3["n"], k3["d"])

    def test_projective_spaces(self):
        """Test Chern numbers of CP^n and Td(CP^n) = 1"""

        for n, numbers in self.instructions["cp"].items():
            table = manifolds.cp_table(int(n))
            self.assertEqual(table.k0, int(n) + 1)
            self.assertTrue(table.is_complete())
            for monomial, value in numbers.items():
                self.assertEqual(
                    table.number(monomial), fractions.Fraction(value), f"{monomial}[CP^{n}]"
                )
        todd = [
            manifolds.evaluate_genus(manifolds.cp_table(n), genera.Todd())
            for n in range(1, self.instructions["todd_cp_max_n"] + 1)
        ]
        self.assertTrue(numpy.all([value == 1 for value in todd]), f"Td(CP^n) = {todd}")

    def test_hypersurfaces(self):
        """Test K3 and the degree one hypersurface"""

        k3 = self.instructions["k3"]
        self.assertEqual(self.k3.k0, 0)
        self.assertEqual(self.k3.number("c_1^2"), fractions.Fraction(k3["c_1^2"]))
        self.assertEqual(self.k3.number("c_2"), fractions.Fraction(k3["c_2"]))
        self.assertEqual(
            manifolds.evaluate_genus(self.k3, genera.Todd()), fractions.Fraction(k3["todd"])
        )
        self.assertEqual(
            manifolds.evaluate_genus(self.k3, genera.AHat()), fractions.Fraction(k3["ahat"])
        )
        self.assertEqual(manifolds.hypersurface_table(1, 2).number("c_1"), 2)
        self.assertEqual(manifolds.hypersurface_table(1, 3).number("c_1"), 0)
        for n in range(1, 5):
            self.assertEqual(manifolds.hypersurface_table(n, 1), manifolds.cp_table(n))

    def test_classical_genera(self):
        """Test L, A-hat and A_2 on CP^2"""

        cp2 = self.projective[2]
        expected = self.instructions["cp2_genera"]
        self.assertEqual(manifolds.evaluate_genus(cp2, genera.LGenus()), fractions.Fraction(expected["L"]))
        self.assertEqual(manifolds.evaluate_genus(cp2, genera.AHat()), fractions.Fraction(expected["ahat"]))
        self.assertEqual(manifolds.evaluate_genus(cp2, genera.AK(2)), fractions.Fraction(expected["a_k(2)"]))
        self.assertEqual(manifolds.pontrjagin_numbers(cp2), {symmetric.Partition((1,)): 3})
        self.assertEqual(manifolds.pontrjagin_numbers(self.projective[3]), {})
        l_1 = genera.LGenus().sequence(1)[0]
        self.assertEqual(manifolds.evaluate_pontrjagin(cp2, l_1), 1)
        self.assertEqual(manifolds.evaluate_genus(self.projective[3], genera.AHat()), 0)

    def test_mixed_numbers(self):
        """Test x^a P[M] evaluations and their errors"""

        cp4 = self.projective[4]
        ahat_1 = genera.AHat().sequence(1)[0]
        self.assertEqual(
            manifolds.evaluate_mixed(cp4, 2, ahat_1), fractions.Fraction(self.instructions["cp4_x2_ahat_1"])
        )
        self.assertEqual(
            manifolds.evaluate_mixed(cp4, 2, genera.ahat_in_chern(4)[1]),
            fractions.Fraction(self.instructions["cp4_x2_ahat_1"]),
        )
        self.assertEqual(
            manifolds.evaluate_mixed(cp4, 4, symmetric.GradedPolynomial.one(symmetric.chern_grading(4))), 1
        )
        self.assertEqual(
            manifolds.evaluate_mixed(cp4, 1, symmetric.GradedPolynomial.zero(symmetric.chern_grading(4))), 0
        )
        with self.assertRaises(errors.WeightMismatch):
            manifolds.evaluate_mixed(cp4, 3, ahat_1)
        product = manifolds.product_table(self.projective[1], self.projective[1])
        with self.assertRaises(errors.NoDistinguishedClass):
            manifolds.evaluate_mixed(product, 0, genera.ahat_in_chern(2)[1])

    def test_products(self):
        """Test products, the point as unit and multiplicativity"""

        product = manifolds.product_table(self.projective[1], self.projective[1])
        self.assertFalse(product.has_x)
        for monomial, value in self.instructions["product_cp1_cp1"].items():
            self.assertEqual(product.number(monomial), fractions.Fraction(value))
        with_point = manifolds.product_table(self.projective[2], manifolds.point_table())
        self.assertEqual(with_point.chern_numbers(), self.projective[2].chern_numbers())
        self.assertEqual(
            manifolds.evaluate_genus(manifolds.product_table(self.projective[1], self.projective[2]), genera.Todd()), 1
        )

        specs = [genera.genus_spec(name, k) for name, k in self.instructions["multiplicative_genera"]]
        for a in range(1, 4):
            for b in range(1, 4):
                product = manifolds.product_table(self.projective[a], self.projective[b])
                for spec in specs:
                    self.assertEqual(
                        manifolds.evaluate_genus(product, spec),
                        manifolds.evaluate_genus(self.projective[a], spec)
                        * manifolds.evaluate_genus(self.projective[b], spec),
                        f"{spec.label} is not multiplicative on CP^{a} x CP^{b}",
                    )

    def test_route_agreement(self):
        """Test A_k[M] = k^n A_{1/k}[M] on every fixture"""

        tables = list(self.projective.values()) + [
            self.k3,
            manifolds.hypersurface_table(3, 2),
            manifolds.product_table(self.projective[1], self.projective[2]),
        ]
        for table in tables:
            for k in self.instructions["route_ks"]:
                self.assertEqual(
                    manifolds.evaluate_genus(table, genera.AK(k)),
                    k**table.half_dim * manifolds.evaluate_genus(table, genera.ARecipK(k)),
                )

    def test_table_invariants(self):
        """Test weights, the c_1 = k0 x relation, builder arguments and parsing"""

        with self.assertRaises(errors.InvariantViolation):
            manifolds.CharacteristicTable(1, True, 2, {(1, 0): 1, (0, 1): 3})
        with self.assertRaises(errors.InvariantViolation):
            manifolds.CharacteristicTable(2, True, None, {(1, 0, 0): 1})
        with self.assertRaises(errors.InvariantViolation):
            manifolds.CharacteristicTable(1, False, None, {(1, 0): 1})
        with self.assertRaises(errors.MissingMonomial):
            manifolds.CharacteristicTable(1, True, 2, {(1, 0): 1}).number("c_1")
        # c_1^2 given without x c_1, so the value cannot be tied to x^2
        with self.assertRaises(errors.InvariantViolation):
            manifolds.CharacteristicTable(2, True, 6, {(0, 2, 0): 999, (0, 0, 1): 5, (2, 0, 0): 1})
        for n, d in [(0, 1), (-1, 1), (2, 0), (1, -3)]:
            with self.assertRaises(errors.BadDimension, msg=f"n = {n}, d = {d}"):
                manifolds.hypersurface_table(n, d)
        for n in [0, -2]:
            with self.assertRaises(errors.BadDimension, msg=f"n = {n}"):
                manifolds.cp_table(n)

        table = manifolds.consistent_table(2, 6, {"x^2": 1, "c_2": 5})
        self.assertEqual(table.number("c_1^2"), 36)
        self.assertEqual(table.number("x c_1"), 6)
        self.assertEqual(table.key((1, 1, 0)), "x c_1")
        with self.assertRaises(errors.MissingMonomial):
            manifolds.consistent_table(2, 6, {"x^2": 1})
        with self.assertRaises(errors.InvariantViolation):
            manifolds.consistent_table(2, 6, {"x^2": 1, "c_2": 5, "c_1^2": 36})

        self.assertEqual(manifolds.parse_monomial("x^2 c_1 c_3", 5), (2, 1, 0, 1, 0, 0))
        self.assertEqual(manifolds.parse_monomial("1", 2), (0, 0, 0))
        for text in ["c_7", "y", "c_1 c_1", "c_0", "x^0"]:
            with self.assertRaises(errors.ParseError, msg=text):
                manifolds.parse_monomial(text, 5)
        self.assertEqual(len(manifolds.all_monomials(4, True)), 12)
        self.assertEqual(len(manifolds.all_monomials(4, False)), 5)


if __name__ == "__main__":
    unittest.main()
