import unittest

from src.algebras.constructors import grassmann
from src.algebras.radical import radical
from src.core.models import ValidationError
from src.identities.checks import (capelli_audit, count_radical_substitutions, property_k_check,
                                   random_matrices, transfer_check, verify_theorem_j, zr_audit, zr_family)
from src.polynomials.models import GradedPolynomial, variables
from src.polynomials.operators import alternate, capelli, commutator, is_alternating
from tests import corpus


def comm():
    ab = variables([0, 0])
    x, y = (GradedPolynomial.monomial((i,), ab) for i in (1, 2))
    return commutator(x, y)


class TestPropertyK(unittest.TestCase):

    def test_commutator_on_upper_triangular(self):
        """Test [x1, x2] vanishes on the diagonal of UT_2 and is a non-identity."""
        res = property_k_check(comm(), corpus.ut2())
        self.assertTrue(res.holds)
        self.assertEqual(res.nilpotency_index, 2)
        self.assertEqual(res.checked, 4)

    def test_single_variable_fails(self):
        """Test x1 is nonzero on a semisimple substitution."""
        x1 = GradedPolynomial.monomial((1,), variables([0]))
        res = property_k_check(x1, corpus.ut2())
        self.assertFalse(res.holds)
        self.assertIsNotNone(res.witness)

    def test_identity_fails(self):
        """Test an identity of UT_2 never has property K."""
        ab = variables([0, 0, 0, 0])
        x = [GradedPolynomial.monomial((i,), ab) for i in (1, 2, 3, 4)]
        f = commutator(x[0], x[1]) * commutator(x[2], x[3])
        res = property_k_check(f, corpus.ut2())
        self.assertFalse(res.holds)
        self.assertEqual(res.reason, "polynomial is an identity")

    def test_radical_substitution_count(self):
        """Test counting substitutions from the radical part of the adapted basis."""
        A = corpus.ut2()
        rad = radical(A)
        j = [n for n, a in enumerate(rad.adapted_basis) if a.radical][0]
        s = [n for n, a in enumerate(rad.adapted_basis) if not a.radical][0]
        self.assertEqual(count_radical_substitutions({1: j, 2: s, 3: j}, A, rad), 2)


class TestTheoremJ(unittest.TestCase):

    def setUp(self):
        self.A = corpus.m2()
        self.f = capelli(4, 0, [0] * 4)
        self.asg = {1: 0, 2: 1, 3: 2, 4: 3, 5: 0, 6: 0, 7: 0, 8: 0}

    def test_random_matrices(self):
        """Test the trace identity on M_2 for twenty random integer matrices."""
        for T in random_matrices(4, 20, seed=0):
            res = verify_theorem_j(self.A, self.f, [1, 2, 3, 4], self.asg, T)
            self.assertTrue(res.holds)

    def test_identity_and_zero(self):
        """Test T = I gives t * f and T = 0 gives zero on both sides."""
        identity = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
        res = verify_theorem_j(self.A, self.f, [1, 2, 3, 4], self.asg, identity)
        self.assertTrue(res.holds)
        self.assertEqual(res.trace, 4)
        zero = [[0] * 4 for _ in range(4)]
        res = verify_theorem_j(self.A, self.f, [1, 2, 3, 4], self.asg, zero)
        self.assertTrue(res.holds)
        self.assertEqual(res.lhs, {})

    def test_dependent_values(self):
        """Test a repeated value in the frame is refused."""
        asg = dict(self.asg)
        asg[2] = 0
        with self.assertRaises(ValidationError):
            verify_theorem_j(self.A, self.f, [1, 2, 3, 4], asg, random_matrices(4, 1, 0)[0])

    def test_non_alternating_polynomial(self):
        """Test the trace identity needs f alternating in the frame variables."""
        f = GradedPolynomial.monomial((1, 2), variables([0, 0]))
        with self.assertRaises(ValidationError):
            verify_theorem_j(self.A, f, [1, 2], {1: 0, 2: 3}, [[1, 0], [0, 1]])

    def test_matrix_shape(self):
        """Test T must be square of the frame size."""
        with self.assertRaises(ValidationError):
            verify_theorem_j(self.A, self.f, [1, 2, 3, 4], self.asg, [[1, 0], [0, 1]])

    def test_seeded_matrices_are_reproducible(self):
        """Test the same seed yields the same matrices."""
        self.assertEqual(random_matrices(3, 2, 7), random_matrices(3, 2, 7))


class TestCapelliAudit(unittest.TestCase):

    def test_group_algebra(self):
        """Test the Capelli sweep on FZ/2 holds in both degrees with witnesses for c_1."""
        entries = capelli_audit(corpus.fz2())
        self.assertEqual([e.dimension for e in entries], [1, 1])
        for entry in entries:
            self.assertFalse(entry.violated)
            self.assertFalse(entry.beyond_cap)
            self.assertIsNotNone(entry.witness)

    def test_matrices_beyond_cap(self):
        """Test c_5 on M_2 is beyond the degree cap while c_4 has a witness."""
        entry = capelli_audit(corpus.m2())[0]
        self.assertTrue(entry.beyond_cap)
        self.assertFalse(entry.violated)
        self.assertIsNotNone(entry.witness)
        self.assertFalse(entry.exhausted)

    def test_budget_exhausts(self):
        """Test a tiny assignment budget is reported as exhausted."""
        entry = capelli_audit(corpus.m2(), max_assignments=1)[0]
        self.assertTrue(entry.exhausted or entry.witness is not None)
        self.assertLessEqual(entry.checked, 1)

    def test_truncated_grassmann_is_refused_per_entry(self):
        """Test E(4) records a refusal for each degree instead of aborting the audit."""
        entries = capelli_audit(grassmann(4))
        self.assertEqual([e.dimension for e in entries], [8, 8])
        for entry in entries:
            self.assertTrue(entry.beyond_cap)
            self.assertIn("N >= 32", entry.refused)
            self.assertIsNone(entry.witness)
            self.assertFalse(entry.violated)

    def test_acceptance_corpus(self):
        """Test the audit runs to completion without violations over the whole corpus."""
        for name, A in (("M2", corpus.m2()), ("UT2", corpus.ut2()), ("FZ2", corpus.fz2()),
                        ("M2eg", corpus.m2_eg()), ("E4", grassmann(4))):
            with self.subTest(algebra=name):
                entries = capelli_audit(A)
                self.assertEqual(len(entries), A.group.order)
                self.assertFalse(any(e.violated for e in entries))
                for e in entries:
                    if not e.refused and e.dimension:
                        self.assertIsNotNone(e.witness)


class TestZubrilinRazmyslov(unittest.TestCase):

    def test_family_is_alternating_and_deduplicated(self):
        """Test the plain family alternates in the x's and has no repeats up to sign."""
        family = zr_family(2, 1)
        keys = [f.normalized().key() for f in family]
        self.assertEqual(len(keys), len(set(keys)))
        for f in family:
            self.assertTrue(is_alternating(f, [1, 2]))

    def test_commutative_product(self):
        """Test the plain audit on F x F has non-vacuous hits and no violations."""
        audit = zr_audit(corpus.fxf(), 1, borders=1)
        self.assertGreater(audit.nonvacuous_hits, 0)
        self.assertEqual(audit.violations, [])

    def test_upper_triangular_at_full_dimension(self):
        """Test n = dim UT_2 gives genuine premises, a non-vacuous hit and no violations."""
        audit = zr_audit(corpus.ut2(), 3, borders=0)
        self.assertEqual(audit.polynomials, 4)
        self.assertEqual(audit.premise_hits, 4)
        self.assertGreaterEqual(audit.nonvacuous_hits, 1)
        self.assertEqual(audit.formal_premises, 0)
        self.assertEqual(audit.violations, [])

    def test_matrices_at_full_dimension(self):
        """Test the 4-alternating x1 y x2 x3 x4 on M_2 is a non-vacuous hit whose obstruction vanishes."""
        word = GradedPolynomial.monomial((1, 5, 2, 3, 4), variables([0] * 5))
        f = alternate(word, [1, 2, 3, 4])
        audit = zr_audit(corpus.m2(), 4, polynomials=[f])
        self.assertEqual(audit.family, "explicit")
        self.assertEqual(audit.premise_hits, 1)
        self.assertEqual(audit.nonvacuous_hits, 1)
        self.assertEqual(audit.violations, [])

    def test_symmetrized_family_is_a_formal_premise(self):
        """Test x1x2 + x2x1 has f~ = 0, so its surviving obstruction on UT_2 is not a violation."""
        audit = zr_audit(corpus.ut2(), 1, family="symmetrized", borders=0)
        self.assertEqual(audit.polynomials, 1)
        self.assertEqual(audit.formal_premises, 1)
        self.assertEqual(audit.premise_hits, 0)
        self.assertEqual(audit.violations, [])
        self.assertEqual(len(audit.formal_failures), 1)
        self.assertEqual(audit.formal_failures[0].f.terms, {(1, 2): 1, (2, 1): 1})

    def test_explicit_polynomial_must_alternate(self):
        """Test an explicit polynomial that is not alternating in the x's is refused."""
        f = GradedPolynomial.monomial((1, 2, 3), variables([0] * 3))
        with self.assertRaises(ValidationError):
            zr_audit(corpus.ut2(), 2, polynomials=[f])

    def test_unknown_family(self):
        """Test an unknown family name is refused."""
        with self.assertRaises(ValidationError):
            zr_family(1, 0, "mixed")


class TestTransfer(unittest.TestCase):

    def test_field(self):
        """Test the commutator transfers to FZ/2 under every degree assignment."""
        res = transfer_check(corpus.field(), corpus.Z2, 2)
        self.assertEqual(res.identities, 1)
        self.assertEqual(res.checked, 4)
        self.assertEqual(res.failures, [])

    def test_matrices(self):
        """Test s_4 lifts to M_2 (x) FZ/2 under all sixteen degree assignments."""
        res = transfer_check(corpus.m2(), corpus.Z2, 4)
        self.assertEqual(res.identities, 1)
        self.assertEqual(res.checked, 16)
        self.assertEqual(res.failures, [])


if __name__ == '__main__':
    unittest.main()
