import unittest

from src.algebras.constructors import twisted_group_algebra
from src.core.groups import direct_product, make_cyclic
from src.core.models import ValidationError
from src.kemer.witnesses import full_witness_simple, matrix_unit_tour
from src.polynomials.operators import is_alternating
from tests import corpus


class TestMatrixUnitTour(unittest.TestCase):

    def test_tour_of_two(self):
        """Test the 2 x 2 tour E11 E12 E22 E21."""
        self.assertEqual(matrix_unit_tour(2), [(0, 0), (0, 1), (1, 1), (1, 0)])

    def test_tour_of_three(self):
        """Test the 3 x 3 tour visits every unit once in a chain from E11 back to column 1."""
        tour = matrix_unit_tour(3)
        self.assertEqual(len(set(tour)), 9)
        self.assertEqual(tour[0], (0, 0))
        self.assertEqual(tour[-1][1], 0)
        for (_, j), (i, _) in zip(tour, tour[1:]):
            self.assertEqual(j, i)

    def test_empty_tour(self):
        """Test k must be positive."""
        with self.assertRaises(ValidationError):
            matrix_unit_tour(0)


class TestFullWitness(unittest.TestCase):

    def test_graded_matrices(self):
        """Test the witness on M_2 with the (e, g) grading evaluates to E11."""
        w = full_witness_simple(corpus.m2_eg())
        self.assertEqual(w.alpha, (2, 2))
        self.assertEqual(w.value, {0: 1})
        self.assertEqual(len(w.sets), 2)
        self.assertEqual(w.correcting, "E11")
        for S in w.sets:
            self.assertTrue(is_alternating(w.polynomial, S))

    def test_two_folds(self):
        """Test two folds double the alternating sets."""
        w = full_witness_simple(corpus.m2_eg(), nu=2)
        self.assertEqual(len(w.sets), 4)
        self.assertEqual(w.alpha, (2, 2))
        self.assertEqual(w.nu, 2)

    def test_group_algebra(self):
        """Test FZ/2 closes every fold with b_g."""
        w = full_witness_simple(corpus.fz2())
        self.assertEqual(w.alpha, (1, 1))
        self.assertEqual(w.value, {0: 1})
        self.assertEqual(w.correcting, "bg*E11")

    def test_twisted_klein_group(self):
        """Test the witness survives a nontrivial cocycle."""
        klein = direct_product(make_cyclic(2), make_cyclic(2))
        A = twisted_group_algebra(klein, corpus.klein_cocycle(klein))
        w = full_witness_simple(A)
        self.assertTrue(w.value)
        self.assertEqual(w.alpha, (1, 1, 1, 1))

    def test_requires_bsz_algebra(self):
        """Test non-simple algebras are refused."""
        with self.assertRaises(ValidationError):
            full_witness_simple(corpus.ut2())
        with self.assertRaises(ValidationError):
            full_witness_simple(corpus.m2(), nu=0)


if __name__ == '__main__':
    unittest.main()
