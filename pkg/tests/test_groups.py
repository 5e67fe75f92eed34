import unittest

from src.core.groups import (coboundary_twist, direct_product, lift_cocycle, make_cocycle, make_cyclic,
                             make_from_table, split_product_index, subgroup, symmetric_group, trivial_cocycle,
                             validate_cocycle)
from src.core.models import ValidationError
from src.core.scalars import embed
from tests.corpus import klein_cocycle


class TestGroups(unittest.TestCase):

    def test_cyclic_labels_and_inverses(self):
        """Test Z/3 labels and inverses."""
        g = make_cyclic(3)
        self.assertEqual(g.labels, ("e", "g", "g^2"))
        self.assertEqual(g.inverse(1), 2)
        self.assertEqual(g.product([1, 1, 1]), 0)
        self.assertEqual(g.index("g^2"), 2)

    def test_unknown_label(self):
        """Test resolving a missing element label raises."""
        with self.assertRaises(ValidationError):
            make_cyclic(2).index("h")

    def test_rejects_non_associative_table(self):
        """Test a table with an identity and inverses but no associativity is refused."""
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with self.assertRaises(ValidationError):
            make_from_table(table)

    def test_rejects_missing_identity(self):
        """Test element 0 must act as the identity."""
        with self.assertRaises(ValidationError):
            make_from_table([[1, 0], [0, 1]])

    def test_direct_product_indexing(self):
        """Test (a, b) lives at a * |G2| + b."""
        k = direct_product(make_cyclic(2), make_cyclic(2))
        self.assertEqual(k.order, 4)
        self.assertEqual(k.labels[3], "(g,g)")
        self.assertEqual(k.mul(1, 2), 3)
        self.assertEqual(split_product_index(k, 3), (1, 1))

    def test_symmetric_group_is_non_abelian(self):
        """Test Sym(3) has order 6 and two non-commuting transpositions."""
        s3 = symmetric_group(3)
        self.assertEqual(s3.order, 6)
        a, b = s3.index("213"), s3.index("132")
        self.assertNotEqual(s3.mul(a, b), s3.mul(b, a))

    def test_subgroup_embedding(self):
        """Test {0, 2} is a subgroup of Z/4 and {0, 1} is not."""
        z4 = make_cyclic(4)
        emb = subgroup(z4, [2, 0])
        self.assertEqual(emb.images, (0, 2))
        self.assertEqual(emb.sub.order, 2)
        with self.assertRaises(ValidationError):
            subgroup(z4, [0, 1])


class TestCocycles(unittest.TestCase):

    def test_trivial_cocycle_is_valid(self):
        """Test the trivial cocycle passes validation."""
        self.assertIsNone(validate_cocycle(trivial_cocycle(make_cyclic(3))))

    def test_bilinear_cocycle_on_klein_group(self):
        """Test the bilinear sign cocycle on Z/2 x Z/2 and one of its coboundary twists."""
        klein = direct_product(make_cyclic(2), make_cyclic(2))
        c = klein_cocycle(klein)
        self.assertIsNone(validate_cocycle(c))
        self.assertIsNone(validate_cocycle(coboundary_twist(c, [0, 1, 1, 0])))

    def test_unnormalized_table_fails(self):
        """Test a table with f(e, g) != 1 reports a normalization violation."""
        c = make_cocycle(make_cyclic(2), 2, [[0, 1], [0, 0]])
        violation = validate_cocycle(c)
        self.assertEqual(violation.kind, "normalization")

    def test_non_cocycle_fails(self):
        """Test a normalized table breaking the cocycle identity is reported."""
        c = make_cocycle(make_cyclic(3), 2, [[0, 0, 0], [0, 1, 0], [0, 0, 0]])
        violation = validate_cocycle(c)
        self.assertEqual(violation.kind, "cocycle")

    def test_cocycle_shape(self):
        """Test a cocycle table of the wrong size is refused."""
        with self.assertRaises(ValidationError):
            make_cocycle(make_cyclic(2), 2, [[0]])

    def test_coboundary_must_be_trivial_at_identity(self):
        """Test a coboundary with delta(e) != 0 is refused instead of yielding an unnormalized table."""
        klein = direct_product(make_cyclic(2), make_cyclic(2))
        with self.assertRaises(ValidationError):
            coboundary_twist(klein_cocycle(klein), [1, 0, 0, 0])
        self.assertIsNone(validate_cocycle(coboundary_twist(klein_cocycle(klein), [2, 1, 0, 1])))

    def test_lift_cocycle_scales_exponents(self):
        """Test lifting a zeta_4 cocycle to order 12 keeps its values."""
        z2 = make_cyclic(2)
        c = make_cocycle(z2, 4, [[0, 0], [0, 1]])
        lifted = lift_cocycle(c, 12)
        self.assertEqual(lifted.m, 12)
        self.assertEqual(lifted.exponents, ((0, 0), (0, 3)))
        self.assertEqual(lifted.value(1, 1), embed(c.value(1, 1), 12))
        self.assertIsNone(validate_cocycle(lifted))
        with self.assertRaises(ValidationError):
            lift_cocycle(c, 6)


if __name__ == '__main__':
    unittest.main()
