"""
ALGEBRA CONSTRUCTORS
====================

Every constructor returns a ``GradedAlgebra`` whose ``provenance`` records how
it was built, so later stages (border budgets, Kemer witnesses, product
checks) can recover the construction data.
"""

from fractions import Fraction
from itertools import combinations, product
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebras.models import GradedAlgebra
from src.core.groups import (FiniteGroup, SubgroupEmbedding, TwoCocycle, make_cyclic,
                             split_product_index, subgroup, trivial_cocycle, trivial_subgroup,
                             validate_cocycle)
from src.core.models import ValidationError
from src.logger import logger

ONE = Fraction(1)


def _check_tuple(group: FiniteGroup, elements: Sequence[int], k: int) -> Tuple[int, ...]:
    if len(elements) != k:
        raise ValidationError(f"elementary tuple needs {k} entries, got {len(elements)}")
    if k and elements[0] != 0:
        raise ValidationError("elementary tuple must start with the identity")
    for g in elements:
        if not 0 <= g < group.order:
            raise ValidationError(f"tuple entry {g} is not a group element")
    return tuple(elements)


def bsz_simple(group: FiniteGroup, H: SubgroupEmbedding, cocycle: TwoCocycle,
               elements: Sequence[int]) -> GradedAlgebra:
    """Twisted group algebra F^f H tensored with M_k, elementary-graded by ``elements``."""
    if H.ambient != group:
        raise ValidationError("subgroup is not embedded in the grading group")
    if cocycle.group != H.sub:
        raise ValidationError("cocycle is not defined on the subgroup")
    violation = validate_cocycle(cocycle)
    if violation is not None:
        raise ValidationError(f"invalid cocycle: {violation.kind} at {violation.location}")
    k = len(elements)
    elements = _check_tuple(group, elements, k)
    if k == 0:
        raise ValidationError("elementary tuple must be nonempty")

    hs = H.sub.order
    index = lambda h, i, j: (h * k + i) * k + j
    deg, labels = [], []
    for h, i, j in product(range(hs), range(k), range(k)):
        g = group.mult[group.mult[group.inverse(elements[i])][H.image(h)]][elements[j]]
        deg.append(g)
        labels.append(f"b{H.sub.label(h)}*E{i + 1}{j + 1}" if hs > 1 else f"E{i + 1}{j + 1}")

    structure: Dict[Tuple[int, int], List] = {}
    for h1, i, j, h2, l in product(range(hs), range(k), range(k), range(hs), range(k)):
        h = H.sub.mult[h1][h2]
        structure[(index(h1, i, j), index(h2, j, l))] = [(index(h, i, l), cocycle.value(h1, h2))]
    unit = {index(0, i, i): ONE for i in range(k)}
    provenance = {"kind": "bsz", "subgroup": H, "cocycle": cocycle, "tuple": elements, "k": k}
    return GradedAlgebra(group, deg, structure, unit=unit, labels=labels, provenance=provenance)


def matrix_algebra(group: FiniteGroup, elements: Sequence[int]) -> GradedAlgebra:
    """M_k with the elementary grading deg E_ij = g_i^-1 g_j."""
    H = trivial_subgroup(group)
    return bsz_simple(group, H, trivial_cocycle(H.sub), elements)


def twisted_group_algebra(group: FiniteGroup, cocycle: Optional[TwoCocycle] = None) -> GradedAlgebra:
    """F^f G with its canonical grading (BSZ with H = G and k = 1)."""
    H = subgroup(group, range(group.order))
    return bsz_simple(group, H, cocycle or trivial_cocycle(H.sub), [0])


def field_algebra(group: FiniteGroup) -> GradedAlgebra:
    """F concentrated in degree e."""
    return GradedAlgebra(group, [0], {(0, 0): [(0, ONE)]}, unit={0: ONE}, labels=["1"],
                         provenance={"kind": "field"})


def upper_triangular(group: FiniteGroup, elements: Sequence[int]) -> GradedAlgebra:
    """UT_k, span{E_ij : i <= j} with deg E_ij = g_i^-1 g_j."""
    k = len(elements)
    elements = _check_tuple(group, elements, k)
    pairs = [(i, j) for i in range(k) for j in range(i, k)]
    index = {p: n for n, p in enumerate(pairs)}
    deg = [group.mult[group.inverse(elements[i])][elements[j]] for i, j in pairs]
    labels = [f"E{i + 1}{j + 1}" for i, j in pairs]
    structure = {}
    for (i, j), (j2, l) in product(pairs, pairs):
        if j == j2:
            structure[(index[(i, j)], index[(j2, l)])] = [(index[(i, l)], ONE)]
    unit = {index[(i, i)]: ONE for i in range(k)}
    return GradedAlgebra(group, deg, structure, unit=unit if k else None, labels=labels,
                         provenance={"kind": "ut", "tuple": elements, "k": k})


# ============================================================================
# GRASSMANN ALGEBRAS AND ENVELOPES
# ============================================================================

def grassmann_basis(N: int) -> List[Tuple[int, ...]]:
    """Subsets of {1..N}, by size and then lexicographically."""
    return [s for r in range(N + 1) for s in combinations(range(1, N + 1), r)]


def grassmann_sign(S: Tuple[int, ...], T: Tuple[int, ...]) -> int:
    """Sign of e_S e_T = sign * e_(S u T); 0 when S and T overlap."""
    if set(S) & set(T):
        return 0
    inversions = sum(1 for s in S for t in T if s > t)
    return -1 if inversions % 2 else 1


def _subset_label(S: Tuple[int, ...]) -> str:
    return "1" if not S else "".join(f"e{s}" for s in S)


def grassmann(N: int) -> GradedAlgebra:
    """E(N) graded by Z/2 through the parity of monomial length."""
    if N < 0:
        raise ValidationError(f"Grassmann generator count must be nonnegative, got {N}")
    Z2 = make_cyclic(2)
    basis = grassmann_basis(N)
    index = {S: n for n, S in enumerate(basis)}
    structure = {}
    for S, T in product(basis, basis):
        sign = grassmann_sign(S, T)
        if sign:
            structure[(index[S], index[T])] = [(index[tuple(sorted(S + T))], Fraction(sign))]
    deg = [len(S) % 2 for S in basis]
    return GradedAlgebra(Z2, deg, structure, unit={index[()]: ONE},
                         labels=[_subset_label(S) for S in basis],
                         provenance={"kind": "grassmann", "N": N, "odd_part": N > 0})


def grassmann_envelope(B: GradedAlgebra, N: int) -> GradedAlgebra:
    """B* = B_0 (x) E_0 + B_1 (x) E_1 for a Z/2 x G-graded B, graded by G."""
    ZG = B.group
    if len(ZG.factors) != 2 or ZG.factors[0].order != 2:
        raise ValidationError("envelope needs a group built as Z/2 x G with Z/2 first")
    G = ZG.factors[1]
    words = grassmann_basis(N)
    parity = [split_product_index(ZG, d)[0] for d in B.deg]
    gdeg = [split_product_index(ZG, d)[1] for d in B.deg]

    pairs = [(b, w) for b in range(B.dim) for w in words if len(w) % 2 == parity[b]]
    index = {p: n for n, p in enumerate(pairs)}
    structure = {}
    for (b1, w1), (b2, w2) in product(pairs, pairs):
        sign = grassmann_sign(w1, w2)
        if not sign:
            continue
        terms = B.product_terms(b1, b2)
        if not terms:
            continue
        w = tuple(sorted(w1 + w2))
        structure[(index[(b1, w1)], index[(b2, w2)])] = [(index[(k, w)], c * sign) for k, c in terms]
    unit = None
    if B.unit is not None:
        unit = {index[(k, ())]: c for k, c in B.unit.items()}
    labels = [f"{B.labels[b]}@{_subset_label(w)}" for b, w in pairs]
    logger.info(f"envelope of {B!r} with N={N}: dimension {len(pairs)}")
    return GradedAlgebra(G, [gdeg[b] for b, _ in pairs], structure, unit=unit, labels=labels,
                         provenance={"kind": "envelope", "inner": B, "N": N,
                                     "odd_part": any(parity)})


def as_superalgebra(A: GradedAlgebra, parity: Sequence[int], ZG: FiniteGroup) -> GradedAlgebra:
    """Regrade A by Z/2 x G from a parity per basis element; the G-degree is kept."""
    if len(ZG.factors) != 2 or ZG.factors[0].order != 2 or ZG.factors[1] != A.group:
        raise ValidationError("target group must be Z/2 x (the algebra's group)")
    n = A.group.order
    return A.regraded(ZG, lambda i: parity[i] * n + A.deg[i])


# ============================================================================
# PRODUCTS AND GROUP-ALGEBRA GRADINGS
# ============================================================================

def group_algebra_grading(A: GradedAlgebra, group: FiniteGroup) -> GradedAlgebra:
    """A (x) FG with basis a_i (x) g and deg(a_i (x) g) = g; A's own grading is ignored."""
    r = group.order
    deg = [g for _ in range(A.dim) for g in range(r)]
    labels = [f"{A.labels[i]}@{group.label(g)}" for i in range(A.dim) for g in range(r)]
    structure = {}
    for i, j, terms in A.structure_items():
        for g, h in product(range(r), repeat=2):
            gh = group.mult[g][h]
            structure[(i * r + g, j * r + h)] = [(k * r + gh, c) for k, c in terms]
    unit = None if A.unit is None else {k * r: c for k, c in A.unit.items()}
    return GradedAlgebra(group, deg, structure, unit=unit, labels=labels,
                         provenance={"kind": "tensor_fg", "inner": A})


def direct_product(A: GradedAlgebra, B: GradedAlgebra) -> GradedAlgebra:
    """Block-diagonal product A x B over a common grading group."""
    if A.group != B.group:
        raise ValidationError("direct product needs both factors graded by the same group")
    order = lcm(A.cyclotomic_order(), B.cyclotomic_order())
    if order > 1:
        logger.debug(f"direct product lifted into cyclotomic order {order}")
        A, B = A.embedded(order), B.embedded(order)
    n = A.dim
    structure = {}
    for i, j, terms in A.structure_items():
        structure[(i, j)] = list(terms)
    for i, j, terms in B.structure_items():
        structure[(n + i, n + j)] = [(n + k, c) for k, c in terms]
    unit = None
    if A.unit is not None and B.unit is not None:
        unit = dict(A.unit)
        unit.update({n + k: c for k, c in B.unit.items()})
    elif A.dim == 0:
        unit = None if B.unit is None else {k: c for k, c in B.unit.items()}
    elif B.dim == 0:
        unit = A.unit
    factors = _factors(A) + _factors(B)
    labels = list(A.labels) + list(B.labels)
    if len(set(labels)) != len(labels):
        labels = [f"L.{x}" for x in A.labels] + [f"R.{x}" for x in B.labels]
    return GradedAlgebra(A.group, list(A.deg) + list(B.deg), structure, unit=unit, labels=labels,
                         provenance={"kind": "product", "factors": factors})


def _factors(A: GradedAlgebra) -> Tuple[GradedAlgebra, ...]:
    if A.provenance.get("kind") == "product":
        return tuple(A.provenance["factors"])
    if A.dim == 0:
        return ()
    return (A,)


def zero_algebra(group: FiniteGroup) -> GradedAlgebra:
    return GradedAlgebra(group, [], {}, provenance={"kind": "zero"})
