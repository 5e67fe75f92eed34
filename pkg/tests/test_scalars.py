import unittest
from fractions import Fraction

from src.core.linalg import EchelonBasis, nullspace, rank
from src.core.models import ScalarError, SpecError
from src.core.scalars import (CycScalar, SparsePoly, cyclotomic_polynomial, embed, format_scalar, inverse,
                              parse_scalar, poly_arith, root_of_unity, scalar_arith, scalar_order)


class TestScalars(unittest.TestCase):

    def test_cyclotomic_coefficients(self):
        """Test cyclotomic polynomials come back constant term first."""
        self.assertEqual(cyclotomic_polynomial(1), (-1, 1))
        self.assertEqual(cyclotomic_polynomial(4), (1, 0, 1))
        self.assertEqual(cyclotomic_polynomial(3), (1, 1, 1))

    def test_root_of_unity_powers_demote_to_rationals(self):
        """Test zeta_4 squared is the rational -1."""
        i = root_of_unity(4, 1)
        self.assertIsInstance(i, CycScalar)
        self.assertEqual(i * i, Fraction(-1))
        self.assertIsInstance(i * i, Fraction)
        self.assertEqual(root_of_unity(2, 1), Fraction(-1))

    def test_cube_roots_sum_to_zero(self):
        """Test 1 + w + w^2 = 0 for a primitive cube root w."""
        w = root_of_unity(3, 1)
        self.assertEqual(1 + w + w * w, Fraction(0))

    def test_inverse(self):
        """Test inverses in Q(zeta_5) and in Q."""
        z = root_of_unity(5, 1) + 2
        self.assertEqual(z * inverse(z), Fraction(1))
        self.assertEqual(inverse(Fraction(3, 4)), Fraction(4, 3))

    def test_inverse_of_zero_raises(self):
        """Test inverting zero raises a ScalarError that is also an ArithmeticError."""
        with self.assertRaises(ScalarError):
            inverse(Fraction(0))
        with self.assertRaises(ArithmeticError):
            scalar_arith(0, op="inv")

    def test_mixed_orders_raise(self):
        """Test arithmetic across orders needs an explicit embedding."""
        with self.assertRaises(ScalarError):
            root_of_unity(3, 1) + root_of_unity(4, 1)
        lifted = embed(root_of_unity(3, 1), 6)
        self.assertEqual(lifted, root_of_unity(6, 2))

    def test_scalar_arith_dispatch(self):
        """Test the add/mul/neg/eq dispatch on rationals."""
        self.assertEqual(scalar_arith(Fraction(1, 2), Fraction(1, 3), "add"), Fraction(5, 6))
        self.assertEqual(scalar_arith(2, 3, "mul"), Fraction(6))
        self.assertEqual(scalar_arith(2, op="neg"), Fraction(-2))
        self.assertTrue(scalar_arith(Fraction(2, 4), Fraction(1, 2), "eq"))

    def test_format_and_parse(self):
        """Test exact string formatting and parsing of scalars."""
        self.assertEqual(format_scalar(Fraction(-3, 6)), "-1/2")
        self.assertEqual(format_scalar(Fraction(4)), "4")
        i = root_of_unity(4, 1)
        self.assertEqual(format_scalar(i), {"order": "4", "coeffs": ["0", "1"]})
        self.assertEqual(parse_scalar(format_scalar(i)), i)
        self.assertEqual(parse_scalar("2/6"), Fraction(1, 3))

    def test_scalar_order(self):
        """Test rationals live in order 1 and zeta_4 embedded into order 12 reports 12."""
        self.assertEqual(scalar_order(Fraction(3, 2)), 1)
        self.assertEqual(scalar_order(root_of_unity(2, 1)), 1)
        lifted = embed(root_of_unity(4, 1), 12)
        self.assertEqual(scalar_order(lifted), 12)
        self.assertEqual(lifted, root_of_unity(12, 3))
        self.assertEqual(lifted * lifted, -1)

    def test_parse_rejects_floats(self):
        """Test floating-point and malformed inputs are spec errors."""
        with self.assertRaises(SpecError):
            parse_scalar(0.5)
        with self.assertRaises(SpecError):
            parse_scalar("one half")

    def test_sparse_poly_arithmetic(self):
        """Test (x + y)^2 expands to x^2 + 2xy + y^2."""
        x = SparsePoly.variable(2, 0)
        y = SparsePoly.variable(2, 1)
        s = x + y
        sq = poly_arith(s, s, "mul")
        self.assertEqual(sq.terms, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
        self.assertFalse(s - s)
        self.assertEqual([e for e, _ in sq.sorted_terms()], [(0, 2), (1, 1), (2, 0)])


class TestLinearAlgebra(unittest.TestCase):

    def test_rank_and_membership(self):
        """Test rank, membership and dependent insertions."""
        ech = EchelonBasis()
        self.assertTrue(ech.add({0: 1, 1: 1}))
        self.assertTrue(ech.add({1: 1, 2: 1}))
        self.assertFalse(ech.add({0: 1, 2: -1}))
        self.assertEqual(ech.rank, 2)
        self.assertTrue(ech.contains({0: 2, 1: 4, 2: 2}))
        self.assertFalse(ech.contains({2: 1}))

    def test_nullspace(self):
        """Test the kernel of [1 1 0; 0 1 1] is spanned by (1, -1, 1)."""
        kernel = nullspace([{0: 1, 1: 1}, {1: 1, 2: 1}], range(3))
        self.assertEqual(len(kernel), 1)
        self.assertEqual(kernel[0], {2: 1, 1: -1, 0: 1})
        self.assertEqual(rank([{0: 1}, {0: 2}]), 1)

    def test_cyclotomic_entries(self):
        """Test elimination with entries in Q(i)."""
        i = root_of_unity(4, 1)
        ech = EchelonBasis([{0: i, 1: 1}])
        self.assertTrue(ech.contains({0: -1, 1: i}))


if __name__ == '__main__':
    unittest.main()
