"""
Constructive non-identities for BSZ-simple algebras.

Each fold walks every b_h (x) E_ij once, h in subgroup order and (i, j) along a
fixed tour of the matrix units whose product is E_11. Every factor is preceded
by the border 1 (x) E_ii; the fold closes with 1 (x) E_11 and the correcting
element b_(h*)^-1 (x) E_11, h* the product of the h^(k^2). Because of the
borders only the identity permutation of each alternating set survives, so
the designated evaluation is the nonzero product of the designated values.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from src.algebras.models import GradedAlgebra
from src.core.models import ConsistencyError, ValidationError
from src.core.linalg import Vector
from src.identities.evaluation import evaluate
from src.logger import logger
from src.polynomials.models import GradedPolynomial, VarSpec
from src.polynomials.operators import alternate_sets, is_alternating


def matrix_unit_tour(k: int) -> List[Tuple[int, int]]:
    """Zero-based (i, j) pairs visiting all k^2 units, consecutive and with product E_11."""
    if k < 1:
        raise ValidationError(f"tour needs k >= 1, got {k}")
    tour = [(0, 0)]
    for n in range(1, k):
        tour += [(0, n), (n, n)]
        for m in range(1, n):
            tour += [(n, m), (m, n)]
        tour.append((n, 0))
    return tour


@dataclass
class SimpleWitness:
    polynomial: GradedPolynomial
    assignment: Dict[int, int]
    sets: List[List[int]]
    value: Vector
    tour: List[Tuple[int, int]]
    correcting: str
    nu: int
    alpha: Tuple[int, ...] = field(default_factory=tuple)


def full_witness_simple(A: GradedAlgebra, nu: int = 1) -> SimpleWitness:
    """Polynomial with nu folds of alternating g-sets of size dim A_g and its nonzero evaluation."""
    prov = A.provenance
    if prov.get("kind") != "bsz":
        raise ValidationError("constructive witness needs an algebra built by bsz_simple")
    if nu < 1:
        raise ValidationError(f"fold count must be positive, got {nu}")
    H = prov["subgroup"].sub
    k = prov["k"]
    index = lambda h, i, j: (h * k + i) * k + j
    tour = matrix_unit_tour(k)

    h_star = 0
    for h in range(H.order):
        for _ in range(k * k):
            h_star = H.mult[h_star][h]
    correcting = index(H.inverse(h_star), 0, 0)

    alphabet: List[VarSpec] = []
    asg: Dict[int, int] = {}
    sets: List[List[int]] = []

    def place(value: int) -> int:
        var = len(alphabet) + 1
        alphabet.append(VarSpec(var, A.deg[value]))
        asg[var] = value
        return var

    for _ in range(nu):
        fold: Dict[int, List[int]] = {}
        for h in range(H.order):
            for i, j in tour:
                place(index(0, i, i))
                var = place(index(h, i, j))
                fold.setdefault(A.deg[index(h, i, j)], []).append(var)
        place(index(0, 0, 0))
        place(correcting)
        sets += [fold[g] for g in sorted(fold)]

    word = tuple(range(1, len(alphabet) + 1))
    f = alternate_sets(GradedPolynomial.monomial(word, alphabet), sets)
    value = evaluate(f, A, asg)
    if not value:
        logger.error(f"designated evaluation of the constructive witness on {A!r} vanishes")
        raise ConsistencyError("constructive witness evaluates to zero")
    for S in sets:
        if len(S) > 1 and not is_alternating(f, S):
            raise ConsistencyError(f"constructive witness is not alternating in {S}")
    alpha = tuple(sum(len(S) for S in sets if alphabet[S[0] - 1].degree == g) // nu
                  for g in range(A.group.order))
    logger.info(f"constructive witness on {A!r}: degree {len(word)}, {len(sets)} alternating sets")
    return SimpleWitness(polynomial=f, assignment=asg, sets=sets, value=value, tour=tour,
                         correcting=A.labels[correcting], nu=nu, alpha=alpha)
