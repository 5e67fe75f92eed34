"""
Multilinear identity spaces and bounded T-ideal comparison.

For a profile (g_1, ..., g_m) the multilinear polynomials in x_1..x_m with
deg x_i = g_i are coefficient vectors over the m! orderings. The identities of
A form the kernel of the evaluation map; rows of that map are produced one
admissible assignment at a time and fed to an incremental echelon form.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations, product
from math import factorial, prod
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebras.models import GradedAlgebra
from src.config import config
from src.core.linalg import EchelonBasis, Vector
from src.core.models import BudgetRefusal, Relation, ValidationError
from src.identities.evaluation import all_word_values, check_grassmann_capacity
from src.logger import logger
from src.polynomials.models import GradedPolynomial, Word, variables


@dataclass
class IdentitySpace:
    profile: Tuple[int, ...]
    words: List[Word]
    basis: List[Vector]
    vacuous: bool = False
    assignments: int = 0

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def polynomial(self, vector: Vector) -> GradedPolynomial:
        return GradedPolynomial(variables(self.profile), {self.words[i]: c for i, c in vector.items()})

    def polynomials(self) -> List[GradedPolynomial]:
        return [self.polynomial(v) for v in self.basis]

    def echelon(self) -> EchelonBasis:
        return EchelonBasis(self.basis)


def multilinear_words(m: int) -> List[Word]:
    return list(permutations(range(1, m + 1)))


def word_vector(f: GradedPolynomial, words: Sequence[Word]) -> Vector:
    """Coordinates of a multilinear f in x1..xm over the ordered word list."""
    position = {w: i for i, w in enumerate(words)}
    vec = {}
    for w, c in f.terms.items():
        if w not in position:
            raise ValidationError(f"word {w} is not a multilinear word of the profile")
        vec[position[w]] = c
    return vec


def identity_space(A: GradedAlgebra, profile: Sequence[int],
                   max_degree: Optional[int] = None) -> IdentitySpace:
    """Kernel of the evaluation map on multilinear polynomials of the profile."""
    profile = tuple(profile)
    m = len(profile)
    limit = max_degree if max_degree is not None else config.get("identities", "max_profile_degree", 6)
    if m > limit:
        estimate = factorial(m) * prod(len(A.component(g)) for g in profile)
        raise BudgetRefusal(f"profile of degree {m} exceeds the guard {limit}: "
                            f"{factorial(m)} words, about {estimate} evaluations")
    check_grassmann_capacity(A, m)
    words = multilinear_words(m)
    columns = range(len(words))
    if any(not A.component(g) for g in profile):
        return IdentitySpace(profile, words, [{i: 1} for i in columns], vacuous=True)

    ech = EchelonBasis()
    assignments = 0
    for choice in product(*(A.component(g) for g in profile)):
        assignments += 1
        values = all_word_values(A, [{i: 1} for i in choice])
        rows: Dict[int, Vector] = {}
        for w, value in enumerate(values):
            for k, c in value.items():
                rows.setdefault(k, {})[w] = c
        for k in sorted(rows):
            ech.add(rows[k])
        # only full rank stops early; a stable partial rank still visits every assignment
        if ech.rank == len(words):
            break
    kernel = ech.kernel(columns)
    logger.info(f"identity space of {A!r} at profile "
                f"{[A.group.label(g) for g in profile]}: dim {len(kernel)} of {len(words)}")
    return IdentitySpace(profile, words, kernel, assignments=assignments)


def profiles(group_order: int, degree: int) -> List[Tuple[int, ...]]:
    """Multisets of degrees of the given size, as sorted tuples in lexicographic order."""
    return list(combinations_with_replacement(range(group_order), degree))


# ============================================================================
# BOUNDED T-IDEAL COMPARISON
# ============================================================================

@dataclass
class Comparison:
    relation: Relation
    max_degree: int
    profiles_checked: int = 0
    profile: Optional[Tuple[int, ...]] = None
    witness: Optional[GradedPolynomial] = None
    witness_holds_in: str = ""
    per_profile: List[Tuple[Tuple[int, ...], Relation]] = field(default_factory=list)


def _missing(space: IdentitySpace, other: EchelonBasis) -> Optional[Vector]:
    for v in space.basis:
        if not other.contains(v):
            return v
    return None


def _combine(current: Relation, local: Relation) -> Relation:
    if local == Relation.EQUAL:
        return current
    if current == Relation.EQUAL:
        return local
    return current if current == local else Relation.INCOMPARABLE


def tideals_compare(A: GradedAlgebra, B: GradedAlgebra, max_degree: int) -> Comparison:
    """Compare id(A) and id(B) on every multilinear profile up to max_degree."""
    if A.group != B.group:
        raise ValidationError("T-ideal comparison needs a common grading group")
    result = Comparison(relation=Relation.EQUAL, max_degree=max_degree)
    for m in range(1, max_degree + 1):
        for prof in profiles(A.group.order, m):
            KA = identity_space(A, prof)
            KB = identity_space(B, prof)
            only_a = _missing(KA, KB.echelon())
            only_b = _missing(KB, KA.echelon())
            if only_a is None and only_b is None:
                local = Relation.EQUAL
            elif only_a is None:
                local = Relation.A_IN_B
            elif only_b is None:
                local = Relation.B_IN_A
            else:
                local = Relation.INCOMPARABLE
            result.profiles_checked += 1
            result.per_profile.append((prof, local))
            combined = _combine(result.relation, local)
            if local != Relation.EQUAL and result.witness is None or combined == Relation.INCOMPARABLE:
                vec = only_b if only_b is not None else only_a
                result.witness = KA.polynomial(vec)
                result.witness_holds_in = "B" if only_b is not None else "A"
                result.profile = prof
            result.relation = combined
            if combined == Relation.INCOMPARABLE:
                logger.info(f"T-ideals incomparable at profile {prof}")
                return result
    return result
