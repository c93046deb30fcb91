# -*- coding: utf-8 -*-
"""
Created on Thu Oct 15 13:15:52 2026
"""

import json
import pathlib
import unittest

import numpy

from unitary_genera import errors, genera, series, symmetric


class GeneraTest(unittest.TestCase):
    """A class to test the genus registry, the conversion between Pontrjagin and Chern
    classes and the symbolic identities used by the vanishing engine.

    Tests run include:
        1. test_registry - Test lookup, labels and the parameterized families
        2. test_chern_to_pontrjagin - Test p_1 and p_2 in Chern classes
        3. test_todd_decomposition - Test T_k in terms of c_1 and A-hat for k <= n <= 6
        4. test_exp_identity - Test the exponential factorization of A_{1/k}
        5. test_ak_scaling - Test A_k = k^n A_{1/k} in every degree
        6. test_a2_is_ahat - Test A_2 = x / sinh(x) and A_2 = 2^n A-hat
        7. test_a_sequence_and_a1 - Test A_s = 2^(4s) A-hat_s and A_1 = Todd
        8. test_recip_factorization - Test A_{1/k} = exp((1/k - 1/2) c_1) A-hat
        9. test_failed_witness - Test a failing check reports its witness
    """

    @classmethod
    def setUpClass(cls):
        """Load the ranges of the identity checks"""

        file_path = pathlib.Path().cwd() / pathlib.Path("tests/test_genera/instruction.json")
        with open(file_path, "r") as file_pointer:
            cls.instructions = json.load(file_pointer)["instructions"]

    def test_registry(self):
        """Test lookup, labels and the parameterized families"""

        self.assertEqual(genera.genus_spec("TODD"), genera.Todd())
        self.assertEqual(genera.genus_spec("l"), genera.LGenus())
        self.assertEqual(genera.genus_spec("a_k", 3).label, "a_k(3)")
        self.assertEqual(genera.ARecipK(4).SYMBOL, "A1/4")
        self.assertNotEqual(genera.AK(2), genera.AK(3))
        with self.assertRaises(errors.BadK):
            genera.genus_spec("a_k")
        with self.assertRaises(errors.BadK):
            genera.AK(1)
        with self.assertRaises(ValueError):
            genera.genus_spec("witten")
        with self.assertRaises(TypeError):
            genera.GenusSpec()
        for spec in [genera.AHat(), genera.LGenus(), genera.ASequence()]:
            self.assertTrue(spec.series(8).is_even(), f"{spec} must have an even series")
        self.assertEqual(
            genera.ASequence().series(8),
            series.series_scale_arg(series.x_over_sinh_series(8), 2),
        )

    def test_chern_to_pontrjagin(self):
        """Test p_1 and p_2 in Chern classes"""

        grading = symmetric.chern_grading(4)
        c1, c2, c3, c4 = (symmetric.GradedPolynomial.variable(grading, v) for v in grading.variables)
        p1, p2, p3, p4 = genera.chern_to_pontrjagin(4)
        self.assertEqual(p1, c1**2 - 2 * c2)
        self.assertEqual(p2, c2**2 - 2 * c1 * c3 + 2 * c4)
        self.assertEqual(p4, c4**2)
        one = symmetric.chern_grading(1)
        self.assertEqual(
            genera.chern_to_pontrjagin(1), [symmetric.GradedPolynomial.variable(one, "c_1") ** 2]
        )
        ahat_1 = genera.ahat_in_chern(4)[1]
        self.assertEqual(ahat_1, -(c1**2 - 2 * c2) / 24)

    def test_todd_decomposition(self):
        """Test T_k in terms of c_1 and A-hat for k <= n <= 6"""

        max_n = self.instructions["todd_decomposition_max_n"]
        results = [
            genera.verify_todd_decomposition(k, n)
            for n in range(1, max_n + 1)
            for k in range(1, n + 1)
        ]
        self.assertTrue(
            numpy.all([result.passed for result in results]),
            f"Failed: {[r.describe() for r in results if not r]}",
        )
        self.assertTrue(results[0].witness.is_zero())

    def test_exp_identity(self):
        """Test the exponential factorization of A_{1/k}"""

        settings = self.instructions["exp_identity"]
        for k in settings["ks"]:
            self.assertTrue(genera.verify_exp_identity(k, settings["order"]), f"k = {k}")
        self.assertTrue(genera.verify_exp_identity(settings["large_k"], settings["large_k_order"]))
        self.assertTrue(series.a_recip_k_series(2, 8).is_even())

    def test_ak_scaling(self):
        """Test A_k = k^n A_{1/k} in every degree"""

        settings = self.instructions["ak_scaling"]
        for k in settings["ks"]:
            for n in range(1, settings["max_n"] + 1):
                result = genera.verify_ak_scaling(k, n)
                self.assertTrue(result, result.describe())
        # k = 3, n = 4 scales by 81
        self.assertEqual(
            genera.AK(3).chern_polynomial(4), 81 * genera.ARecipK(3).chern_polynomial(4)
        )

    def test_a2_is_ahat(self):
        """Test A_2 = x / sinh(x) and A_2 = 2^n A-hat"""

        for n in range(1, self.instructions["a2_is_ahat_max_n"] + 1):
            result = genera.verify_a2_is_ahat(n)
            self.assertTrue(result, result.describe())
        self.assertTrue(genera.AK(2).chern_polynomial(1).is_zero())
        self.assertEqual(
            genera.AK(2).chern_polynomial(2), 4 * genera.AHat().chern_polynomial(2)
        )

    def test_a_sequence_and_a1(self):
        """Test A_s = 2^(4s) A-hat_s and A_1 = Todd"""

        for s in range(1, self.instructions["a_sequence_max_s"] + 1):
            result = genera.verify_a_sequence_scaling(s)
            self.assertTrue(result, result.describe())
        self.assertTrue(genera.verify_a1_is_todd(self.instructions["a1_is_todd_order"]))

    def test_recip_factorization(self):
        """Test A_{1/k} = exp((1/k - 1/2) c_1) A-hat"""

        settings = self.instructions["recip_factorization"]
        for k in settings["ks"]:
            for n in range(1, settings["max_n"] + 1):
                result = genera.verify_recip_factorization(k, n)
                self.assertTrue(result, result.describe())

    def test_failed_witness(self):
        """Test a failing check reports its witness"""

        witness = genera.Todd().chern_polynomial(2) - genera.AHat().chern_polynomial(2)
        result = genera.Verification("todd-is-ahat", witness.is_zero(), witness)
        self.assertFalse(result)
        self.assertTrue(result.describe().startswith("FAIL  todd-is-ahat"))
        self.assertIn("c_1^2", result.describe())


if __name__ == "__main__":
    unittest.main()
