"""
Bounded multilinear consequences of a polynomial in its T-ideal.

The multilinear part of <f> at a target profile is spanned by the polynomials
u * f(w_1, ..., w_k) * v where the w_i are monomials substituted for the
variables of f and u, v are (possibly empty) monomials, every target variable
used exactly once. Each target variable is assigned to a slot (left factor, one
of the k variables of f, or right factor); the orders inside slots are then
enumerated. Both loops run in lexicographic order.
"""

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.groups import FiniteGroup
from src.core.models import ValidationError
from src.logger import logger
from src.polynomials.models import GradedPolynomial, Word, variables


@dataclass
class ConsequenceFamily:
    polynomials: List[GradedPolynomial] = field(default_factory=list)
    complete: bool = True
    reason: str = ""
    patterns: int = 0


def _substitute(f: GradedPolynomial, slots: Dict[int, Word], left: Word, right: Word,
                alphabet) -> GradedPolynomial:
    terms: Dict[Word, object] = {}
    for w, c in f.terms.items():
        nw = left + tuple(x for v in w for x in slots[v]) + right
        terms[nw] = terms.get(nw, 0) + c
    return GradedPolynomial(alphabet, terms)


def multilinear_consequences(f: GradedPolynomial, target_profile: Sequence[int], group: FiniteGroup,
                             budget: Optional[int] = None) -> ConsequenceFamily:
    """Generating family of the multilinear component of <f> at ``target_profile``."""
    if not f.multilinear():
        raise ValidationError("consequence generation needs a multilinear polynomial")
    family = ConsequenceFamily()
    fvars = list(f.ids)
    k = len(fvars)
    targets = variables(target_profile)
    tdeg = {v.id: v.degree for v in targets}
    if len(targets) < k:
        family.reason = f"target profile has {len(targets)} variables, f needs at least {k}"
        return family

    LEFT, RIGHT = k, k + 1
    for assignment in product(range(k + 2), repeat=len(targets)):
        buckets: List[List[int]] = [[] for _ in range(k + 2)]
        for v, slot in zip(targets, assignment):
            buckets[slot].append(v.id)
        if any(not buckets[s] for s in range(k)):
            continue
        orders = [list(permutations(b)) for b in buckets]
        for choice in product(*orders):
            if any(group.product(tdeg[x] for x in choice[s]) != f.degree_of(fvars[s]) for s in range(k)):
                continue
            family.patterns += 1
            slots = {fvars[s]: tuple(choice[s]) for s in range(k)}
            g = _substitute(f, slots, tuple(choice[LEFT]), tuple(choice[RIGHT]), targets)
            if not g:
                continue
            if budget is not None and len(family.polynomials) >= budget:
                family.complete = False
                family.reason = f"budget of {budget} polynomials reached"
                logger.warning(f"consequence enumeration truncated at {budget}")
                return family
            family.polynomials.append(g)
    if not family.polynomials:
        family.reason = "no substitution pattern matches the target profile"
    return family
