import unittest

from src.core.models import BudgetRefusal, Relation, ValidationError
from src.identities.evaluation import is_identity
from src.identities.spaces import identity_space, multilinear_words, profiles, tideals_compare, word_vector
from src.polynomials.models import GradedPolynomial, variables
from src.polynomials.operators import standard
from tests import corpus


class TestIdentitySpace(unittest.TestCase):

    def test_commutative_field(self):
        """Test the degree-2 identities of F are spanned by the commutator."""
        space = identity_space(corpus.field(), (0, 0))
        self.assertEqual(space.dimension, 1)
        self.assertEqual(space.polynomials()[0].normalized().terms, {(1, 2): 1, (2, 1): -1})

    def test_matrices_have_no_low_degree_identities(self):
        """Test M_2 has no multilinear identities of degree 2 or 3."""
        self.assertEqual(identity_space(corpus.m2(), (0, 0)).dimension, 0)
        self.assertEqual(identity_space(corpus.m2(), (0, 0, 0)).dimension, 0)

    def test_standard_polynomial_spans_degree_four(self):
        """Test the degree-4 identities of M_2 are spanned by s_4."""
        space = identity_space(corpus.m2(), (0, 0, 0, 0))
        self.assertEqual(space.dimension, 1)
        s4 = word_vector(standard(4), space.words)
        self.assertTrue(space.echelon().contains(s4))

    def test_vacuous_profile(self):
        """Test a profile through an empty component returns the full flagged space."""
        space = identity_space(corpus.field(corpus.Z2), (0, 1))
        self.assertTrue(space.vacuous)
        self.assertEqual(space.dimension, 2)

    def test_degree_guard(self):
        """Test profiles beyond the configured degree are refused with an estimate."""
        with self.assertRaises(BudgetRefusal) as ctx:
            identity_space(corpus.field(), (0,) * 7)
        self.assertIn("5040", str(ctx.exception))

    def test_kernel_vectors_are_identities(self):
        """Test every basis polynomial of a kernel evaluates to zero."""
        A = corpus.ut2()
        space = identity_space(A, (0, 0, 0, 0))
        self.assertGreater(space.dimension, 0)
        for f in space.polynomials():
            self.assertTrue(is_identity(f, A).holds)

    def test_profiles(self):
        """Test degree multisets over Z/2 in lexicographic order."""
        self.assertEqual(profiles(2, 2), [(0, 0), (0, 1), (1, 1)])
        self.assertEqual(len(multilinear_words(3)), 6)

    def test_word_vector_rejects_foreign_words(self):
        """Test coordinates are only defined for multilinear words of the profile."""
        f = GradedPolynomial.monomial((1, 1), variables([0]))
        with self.assertRaises(ValidationError):
            word_vector(f, multilinear_words(2))


class TestComparison(unittest.TestCase):

    def test_product_with_itself(self):
        """Test id(A) = id(A x A) at bounded degree."""
        from src.algebras.constructors import direct_product
        A = corpus.fz2()
        result = tideals_compare(A, direct_product(A, A), 3)
        self.assertEqual(result.relation, Relation.EQUAL)
        self.assertIsNone(result.witness)
        self.assertEqual(result.profiles_checked, 2 + 3 + 4)

    def test_group_algebra_against_field(self):
        """Test FZ/2 and F over Z/2 are separated by a g-variable profile."""
        result = tideals_compare(corpus.fz2(), corpus.field(corpus.Z2), 2)
        self.assertEqual(result.relation, Relation.A_IN_B)
        self.assertEqual(result.profile, (1,))
        self.assertEqual(result.witness_holds_in, "B")

    def test_matrices_against_upper_triangular(self):
        """Test id(M_2) is strictly inside id(UT_2) at degree 4."""
        result = tideals_compare(corpus.m2(), corpus.ut2(), 4)
        self.assertEqual(result.relation, Relation.A_IN_B)
        self.assertEqual(result.profile, (0, 0, 0, 0))
        self.assertTrue(is_identity(result.witness, corpus.ut2()).holds)
        self.assertFalse(is_identity(result.witness, corpus.m2()).holds)

    def test_even_envelope_matches_its_algebra(self):
        """Test the envelope of M_2 with every basis element even has the identities of M_2 up to degree 3."""
        from src.algebras.constructors import as_superalgebra, grassmann_envelope
        from src.core.groups import direct_product
        B = as_superalgebra(corpus.m2(), [0, 0, 0, 0], direct_product(corpus.Z2, corpus.Z1))
        env = grassmann_envelope(B, 2)
        self.assertEqual(env.dim, 8)
        result = tideals_compare(env, corpus.m2(), 3)
        self.assertEqual(result.relation, Relation.EQUAL)

    def test_groups_must_match(self):
        """Test comparing algebras over different groups is refused."""
        with self.assertRaises(ValidationError):
            tideals_compare(corpus.m2(), corpus.fz2(), 2)


if __name__ == '__main__':
    unittest.main()
