import unittest
from fractions import Fraction

from src.algebras.constructors import (as_superalgebra, bsz_simple, direct_product, field_algebra,
                                       grassmann, grassmann_envelope, grassmann_sign, group_algebra_grading,
                                       matrix_algebra, twisted_group_algebra, upper_triangular)
from src.algebras.models import GradedAlgebra
from src.algebras.radical import g_par, radical
from src.core import groups
from src.core.models import ValidationError
from src.core.scalars import root_of_unity
from src.identities.spaces import identity_space
from tests.corpus import klein_cocycle


class TestConstructors(unittest.TestCase):

    def setUp(self):
        self.Z1 = groups.make_cyclic(1)
        self.Z2 = groups.make_cyclic(2)

    def test_matrix_algebra_elementary_grading(self):
        """Test M_2 graded by (e, g) puts E12 and E21 in degree g."""
        A = matrix_algebra(self.Z2, [0, 1])
        self.assertEqual(A.labels, ("E11", "E12", "E21", "E22"))
        self.assertEqual(A.deg, (0, 1, 1, 0))
        self.assertIsNone(A.validate())
        self.assertEqual(A.mul_basis(1, 2), {0: 1})

    def test_bsz_dimension_and_unit(self):
        """Test F^f H (x) M_k has dimension |H| k^2 and validates."""
        H = groups.subgroup(self.Z2, [0, 1])
        A = bsz_simple(self.Z2, H, groups.trivial_cocycle(H.sub), [0, 1])
        self.assertEqual(A.dim, 8)
        self.assertIsNone(A.validate())
        self.assertEqual(A.component_dims(), (4, 4))

    def test_twisted_klein_algebra_is_valid(self):
        """Test the twisted group algebra of Z/2 x Z/2 is associative with anticommuting generators."""
        klein = groups.direct_product(self.Z2, self.Z2)
        A = twisted_group_algebra(klein, klein_cocycle(klein))
        self.assertIsNone(A.validate())
        ab = A.mul({1: 1}, {2: 1})
        ba = A.mul({2: 1}, {1: 1})
        self.assertEqual(ab, {3: Fraction(-1)})
        self.assertEqual(ba, {3: Fraction(1)})

    def test_tuple_must_start_at_identity(self):
        """Test elementary tuples are normalized with g_1 = e."""
        with self.assertRaises(ValidationError):
            matrix_algebra(self.Z2, [1, 0])

    def test_upper_triangular(self):
        """Test UT_2 has basis E11, E12, E22 and E12 E22 = E12."""
        A = upper_triangular(self.Z1, [0, 0])
        self.assertEqual(A.labels, ("E11", "E12", "E22"))
        self.assertEqual(A.mul_basis(1, 2), {1: 1})
        self.assertEqual(A.mul_basis(2, 1), {})
        self.assertIsNone(A.validate())

    def test_grassmann_signs(self):
        """Test e2 e1 = -e1e2 and overlapping products vanish."""
        self.assertEqual(grassmann_sign((2,), (1,)), -1)
        self.assertEqual(grassmann_sign((1,), (2,)), 1)
        self.assertEqual(grassmann_sign((1, 2), (2,)), 0)
        self.assertEqual(grassmann_sign((2, 3), (1,)), 1)

    def test_grassmann_dimensions(self):
        """Test E(2) splits as (2, 2) over Z/2."""
        E = grassmann(2)
        self.assertEqual(E.dim, 4)
        self.assertEqual(E.component_dims(), (2, 2))
        self.assertIsNone(E.validate())

    def test_envelope_dimension(self):
        """Test the envelope of a superalgebra has dim B0 * 2^(N-1) + dim B1 * 2^(N-1)."""
        ZG = groups.direct_product(self.Z2, self.Z1)
        M2 = matrix_algebra(self.Z1, [0, 0])
        B = as_superalgebra(M2, [0, 1, 1, 0], ZG)
        env = grassmann_envelope(B, 3)
        self.assertEqual(env.dim, 2 * 4 + 2 * 4)
        self.assertIsNone(env.validate())
        self.assertEqual(env.provenance["kind"], "envelope")

    def test_envelope_needs_product_group(self):
        """Test the envelope refuses a group that is not Z/2 x G."""
        with self.assertRaises(ValidationError):
            grassmann_envelope(field_algebra(self.Z2), 2)

    def test_direct_product(self):
        """Test F x F is block diagonal with relabelled factors and a joint unit."""
        P = direct_product(field_algebra(self.Z1), field_algebra(self.Z1))
        self.assertEqual(P.labels, ("L.1", "R.1"))
        self.assertEqual(P.unit, {0: 1, 1: 1})
        self.assertEqual(P.mul_basis(0, 1), {})
        self.assertEqual(len(P.provenance["factors"]), 2)
        self.assertIsNone(P.validate())

    def test_direct_product_flattens_factors(self):
        """Test nested products record every factor once."""
        F = field_algebra(self.Z1)
        P = direct_product(direct_product(F, F), F)
        self.assertEqual(len(P.provenance["factors"]), 3)

    def test_direct_product_of_mixed_cyclotomic_orders(self):
        """Test factors over Q(zeta_4) and Q(zeta_3) meet in Q(zeta_12) and still compute identities."""
        A = twisted_group_algebra(self.Z2, groups.make_cocycle(self.Z2, 4, [[0, 0], [0, 1]]))
        B = twisted_group_algebra(self.Z2, groups.make_cocycle(self.Z2, 3, [[0, 0], [0, 1]]))
        self.assertEqual((A.cyclotomic_order(), B.cyclotomic_order()), (4, 3))
        P = direct_product(A, B)
        self.assertEqual(P.cyclotomic_order(), 12)
        self.assertEqual(P.mul_basis(1, 1), {0: root_of_unity(12, 3)})
        self.assertEqual(P.mul_basis(3, 3), {2: root_of_unity(12, 4)})
        self.assertIsNone(P.validate())
        self.assertEqual(identity_space(P, (1, 1)).dimension, 1)

    def test_group_algebra_grading(self):
        """Test A (x) FZ/2 doubles the dimension and grades by the group factor."""
        A = upper_triangular(self.Z1, [0, 0])
        T = group_algebra_grading(A, self.Z2)
        self.assertEqual(T.dim, 6)
        self.assertEqual(T.deg, (0, 1, 0, 1, 0, 1))
        self.assertIsNone(T.validate())

    def test_validate_reports_grading_violation(self):
        """Test a product landing in the wrong degree is reported."""
        A = GradedAlgebra(self.Z2, [1], {(0, 0): [(0, 1)]})
        violation = A.validate()
        self.assertEqual(violation.kind, "grading")

    def test_validate_reports_non_associativity(self):
        """Test a non-associative table is caught at the first failing triple."""
        structure = {(0, 0): [(1, 1)], (0, 1): [(0, 1)]}
        A = GradedAlgebra(self.Z1, [0, 0], structure)
        violation = A.validate()
        self.assertEqual(violation.kind, "associativity")
        self.assertEqual(violation.location, (0, 0, 0))

    def test_validate_reports_bad_unit(self):
        """Test a declared unit that fails to fix a basis element."""
        A = GradedAlgebra(self.Z1, [0, 0], {(0, 0): [(0, 1)]}, unit={0: 1})
        self.assertEqual(A.validate().kind, "unit")


class TestRadical(unittest.TestCase):

    def setUp(self):
        self.Z1 = groups.make_cyclic(1)
        self.Z2 = groups.make_cyclic(2)

    def test_upper_triangular_radical(self):
        """Test J(UT_2) = span{E12} with n_A = 2."""
        A = upper_triangular(self.Z1, [0, 0])
        data = radical(A)
        self.assertEqual(data.basis, [{1: 1}])
        self.assertEqual(data.nilpotency_index, 2)
        self.assertEqual(g_par(A), ((2,), 1))

    def test_adapted_basis_of_upper_triangular(self):
        """Test the homogeneous complement of J(UT_2) is {E11, E22}."""
        data = radical(upper_triangular(self.Z1, [0, 0]))
        complement = [a.vector for a in data.adapted_basis if not a.radical]
        self.assertEqual(complement, [{0: 1}, {2: 1}])

    def test_semisimple_matrix_algebra(self):
        """Test M_2 graded by (e, g) has G-Par ((2, 2); 0)."""
        self.assertEqual(g_par(matrix_algebra(self.Z2, [0, 1])), ((2, 2), 0))

    def test_group_algebra(self):
        """Test FZ/2 has G-Par ((1, 1); 0)."""
        self.assertEqual(g_par(twisted_group_algebra(self.Z2)), ((1, 1), 0))

    def test_grassmann_radical(self):
        """Test J(E(3)) is spanned by the seven nonempty monomials with n_A = 4."""
        data = radical(grassmann(3))
        self.assertEqual(data.dim, 7)
        self.assertEqual(data.nilpotency_index, 4)
        self.assertEqual(data.d, (1, 0))

    def test_graded_upper_triangular(self):
        """Test UT_2 graded by (e, g) keeps its radical in degree g."""
        A = upper_triangular(self.Z2, [0, 1])
        data = radical(A)
        self.assertEqual(data.d, (2, 0))
        self.assertEqual(len(data.components[1]), 1)
        self.assertEqual(data.components[0], [])

    def test_non_unital_nilpotent_algebra(self):
        """Test an algebra with x^2 = y and y nilpotent is its own radical."""
        A = GradedAlgebra(self.Z1, [0, 0], {(0, 0): [(1, 1)]})
        data = radical(A)
        self.assertEqual(data.dim, 2)
        self.assertEqual(data.nilpotency_index, 3)
        self.assertEqual(g_par(A), ((0,), 2))


if __name__ == '__main__':
    unittest.main()
