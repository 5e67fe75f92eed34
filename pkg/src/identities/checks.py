"""
IDENTITY AUDITS
===============

Checks built on top of evaluation:

  * property K (vanishing below n_A - 1 radical substitutions)
  * the trace identity Tr(T) f = sum_k f(..., T a_k, ...)
  * the Capelli sweep c_{dim A_g + 1, g} / c_{dim A_g, g}
  * the Zubrilin-Razmyslov implication sweep
  * transfer of ungraded identities to A (x) FG
"""

import random
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from src.algebras.constructors import group_algebra_grading
from src.algebras.models import GradedAlgebra
from src.algebras.radical import RadicalData, radical
from src.config import config
from src.core.groups import FiniteGroup, make_cyclic
from src.core.linalg import EchelonBasis, Vector, add_scaled, scaled
from src.core.models import BudgetRefusal, ValidationError
from src.identities.evaluation import (evaluate, evaluate_generic, evaluate_vectors, is_identity,
                                       unrealizable_degrees)
from src.identities.spaces import identity_space
from src.logger import logger
from src.polynomials.models import GradedPolynomial, VarSpec, variables
from src.polynomials.operators import (alternate, capelli, is_alternating, zr_obstruction,
                                       zr_tilde)


# ============================================================================
# PROPERTY K
# ============================================================================

@dataclass
class PropertyKResult:
    holds: bool
    reason: str
    nilpotency_index: int
    witness: Optional[Dict[int, int]] = None
    value: Optional[Vector] = None
    checked: int = 0


def count_radical_substitutions(asg: Mapping[int, int], A: GradedAlgebra,
                                rad: Optional[RadicalData] = None) -> int:
    """Number of variables sent to a radical element of the adapted basis."""
    rad = rad or radical(A)
    return sum(1 for i in asg.values() if rad.adapted_basis[i].radical)


def property_k_check(f: GradedPolynomial, A: GradedAlgebra) -> PropertyKResult:
    """f vanishes on every evaluation with fewer than n_A - 1 radical substitutions and is a non-identity."""
    if not f.multilinear():
        raise ValidationError("property K is checked on multilinear polynomials")
    rad = radical(A)
    n = rad.nilpotency_index
    limit = n - 1
    ids = list(f.ids)
    options = [rad.adapted_component(f.degree_of(x)) for x in ids]
    checked = 0
    for choice in product(*options):
        asg = dict(zip(ids, choice))
        if count_radical_substitutions(asg, A, rad) >= limit:
            continue
        checked += 1
        values = {x: rad.adapted_basis[i].vector for x, i in asg.items()}
        value = evaluate_vectors(f, A, values)
        if value:
            return PropertyKResult(False, f"nonzero with fewer than {limit} radical substitutions",
                                   n, witness=asg, value=value, checked=checked)
    if is_identity(f, A).holds:
        return PropertyKResult(False, "polynomial is an identity", n, checked=checked)
    return PropertyKResult(True, "", n, checked=checked)


# ============================================================================
# TRACE IDENTITY
# ============================================================================

@dataclass
class TheoremJResult:
    holds: bool
    trace: object
    lhs: Vector
    rhs: Vector


def _as_vector(x) -> Vector:
    return {x: 1} if isinstance(x, int) else dict(x)


def verify_theorem_j(A: GradedAlgebra, f: GradedPolynomial, alternating: Sequence[int],
                     asg: Mapping[int, object], T: Sequence[Sequence]) -> TheoremJResult:
    """Tr(T) f(a; b) == sum_k f(a_1, ..., T a_k, ..., a_t; b), T acting by columns on the frame."""
    alternating = list(alternating)
    t = len(alternating)
    if len(T) != t or any(len(row) != t for row in T):
        raise ValidationError(f"T must be a {t}x{t} matrix")
    if not is_alternating(f, alternating):
        raise ValidationError(f"polynomial is not alternating in {alternating}")
    frame = [_as_vector(asg[x]) for x in alternating]
    if EchelonBasis(frame).rank != t:
        raise ValidationError("substituted values are linearly dependent")

    base = {x: _as_vector(v) for x, v in asg.items()}
    trace = 0
    for k in range(t):
        trace = trace + T[k][k]
    lhs = scaled(evaluate(f, A, base), trace)
    rhs: Vector = {}
    for k, x in enumerate(alternating):
        image: Vector = {}
        for j in range(t):
            add_scaled(image, T[j][k], frame[j])
        add_scaled(rhs, 1, evaluate(f, A, {**base, x: image}))
    return TheoremJResult(lhs == rhs, trace, lhs, rhs)


def random_matrices(t: int, trials: int, seed: int, low: int = -5, high: int = 5) -> List[List[List[int]]]:
    rng = random.Random(seed)
    return [[[rng.randint(low, high) for _ in range(t)] for _ in range(t)] for _ in range(trials)]


# ============================================================================
# CAPELLI SWEEP
# ============================================================================

@dataclass
class CapelliPattern:
    y_degrees: Tuple[int, ...]
    holds: bool
    vacuous: bool = False


@dataclass
class CapelliEntry:
    degree: int
    dimension: int
    identity_patterns: List[CapelliPattern] = field(default_factory=list)
    beyond_cap: bool = False
    witness_pattern: Optional[Tuple[int, ...]] = None
    witness: Optional[Dict[int, int]] = None
    witness_value: Optional[Vector] = None
    checked: int = 0
    exhausted: bool = False
    refused: str = ""

    @property
    def violated(self) -> bool:
        return any(not p.holds for p in self.identity_patterns)


def _y_patterns(group: FiniteGroup, n: int):
    return product(range(group.order), repeat=n)


def capelli_audit(A: GradedAlgebra, max_degree: Optional[int] = None,
                  max_assignments: Optional[int] = None) -> List[CapelliEntry]:
    """Per degree g: c_{dim A_g + 1, g} on every y-pattern, and a non-identity pattern for c_{dim A_g, g}."""
    cap = max_degree if max_degree is not None else config.get("identities", "capelli_max_degree", 6)
    budget = max_assignments if max_assignments is not None else config.get("identities", "max_assignments", 20000)
    G = A.group
    entries = []
    for g in range(G.order):
        d = len(A.component(g))
        entry = CapelliEntry(degree=g, dimension=d)
        n = d + 1
        if 2 * n > cap:
            entry.beyond_cap = True
        else:
            try:
                _identity_half(A, g, n, entry)
            except BudgetRefusal as exc:
                entry.refused = str(exc)
                logger.warning(f"⚠️ Capelli identity check for degree {G.label(g)} refused: {exc}")
        if d and not entry.refused:
            try:
                _non_identity_half(A, g, d, budget, entry)
            except BudgetRefusal as exc:
                entry.refused = str(exc)
                logger.warning(f"⚠️ Capelli non-identity search for degree {G.label(g)} refused: {exc}")
        entries.append(entry)
    return entries


def _identity_half(A: GradedAlgebra, g: int, n: int, entry: CapelliEntry):
    G = A.group
    for ys in _y_patterns(G, n):
        f = capelli(n, g, ys)
        if unrealizable_degrees(f, A):
            entry.identity_patterns.append(CapelliPattern(ys, True, vacuous=True))
            continue
        res = is_identity(f, A, alternating=range(1, n + 1))
        entry.identity_patterns.append(CapelliPattern(ys, res.holds))
        if not res.holds:
            logger.error(f"c_{n} of degree {G.label(g)} fails on {A!r} for y-degrees {ys}")


def _non_identity_half(A: GradedAlgebra, g: int, d: int, budget: int, entry: CapelliEntry):
    G = A.group
    remaining = budget
    for ys in _y_patterns(G, d):
        f = capelli(d, g, ys)
        if unrealizable_degrees(f, A):
            continue
        res = is_identity(f, A, alternating=range(1, d + 1), budget=remaining)
        entry.checked += res.checked
        remaining -= res.checked
        if not res.holds:
            entry.witness_pattern = ys
            entry.witness = res.witness
            entry.witness_value = res.value
            return
        if not res.complete or remaining <= 0:
            entry.exhausted = True
            logger.warning(f"Capelli non-identity search for degree {G.label(g)} "
                           f"stopped after {entry.checked} assignments")
            return


# ============================================================================
# ZUBRILIN-RAZMYSLOV SWEEP
# ============================================================================

@dataclass
class ZRViolation:
    f: GradedPolynomial
    tilde: GradedPolynomial
    obstruction: GradedPolynomial


@dataclass
class ZRAudit:
    n: int
    family: str
    borders: int
    polynomials: int = 0
    premise_hits: int = 0
    nonvacuous_hits: int = 0
    violations: List[ZRViolation] = field(default_factory=list)
    formal_premises: int = 0
    formal_failures: List[ZRViolation] = field(default_factory=list)


def zr_family(n: int, borders: int, family: str = "plain") -> List[GradedPolynomial]:
    """Alternated words on x_1..x_{n+1} and up to ``borders`` border variables, deduplicated up to sign."""
    if family not in ("plain", "symmetrized"):
        raise ValidationError(f"unknown family {family!r}")
    x_ids = list(range(1, n + 1))
    extra = n + 1
    seen = set()
    out = []
    for b in range(borders + 1):
        alphabet = variables([0] * (n + 1 + b))
        for word in permutations(range(1, n + 2 + b)):
            f = GradedPolynomial.monomial(word, alphabet)
            if family == "symmetrized":
                f = f + f.rename({x_ids[-1]: extra, extra: x_ids[-1]})
                if not f:
                    continue
            f = alternate(f, x_ids)
            if not f:
                continue
            key = f.normalized().key()
            if key in seen:
                continue
            seen.add(key)
            out.append(f)
    return out


def zr_audit(A: GradedAlgebra, n: int, family: str = "plain", borders: Optional[int] = None,
             polynomials: Optional[Sequence[GradedPolynomial]] = None) -> ZRAudit:
    """Whenever f~ is a nonzero identity of A, the obstruction sum must be one too.

    A polynomial whose f~ is already the zero polynomial satisfies the premise
    formally; it is counted under ``formal_premises`` and a nonzero obstruction
    there lands in ``formal_failures``, never in ``violations``. Explicit
    ``polynomials`` replace the generated family; each must alternate in
    x_1..x_n and contain x_{n+1}.
    """
    borders = borders if borders is not None else config.get("zr_audit", "borders", 2)
    if n < 1:
        raise ValidationError(f"n must be at least 1, got {n}")
    if polynomials is None:
        polynomials = zr_family(n, borders, family)
    else:
        family = "explicit"
    audit = ZRAudit(n=n, family=family, borders=borders)
    x_ids = list(range(1, n + 1))
    extra = n + 1
    for f in polynomials:
        audit.polynomials += 1
        tilde = zr_tilde(f, x_ids, extra)
        formal = not tilde
        if formal:
            audit.formal_premises += 1
        elif evaluate_generic(tilde, A).value:
            continue
        else:
            audit.premise_hits += 1
            if not is_identity(f, A).holds:
                audit.nonvacuous_hits += 1
        z = max(f.ids) + 1
        obstruction = zr_obstruction(f, x_ids, extra, z)
        if not evaluate_generic(obstruction, A).value:
            continue
        if formal:
            logger.info(f"obstruction of {f!r} survives on {A!r} although f~ is zero")
            audit.formal_failures.append(ZRViolation(f, tilde, obstruction))
        else:
            logger.warning(f"⚠️ obstruction of {f!r} is not an identity of {A!r}")
            audit.violations.append(ZRViolation(f, tilde, obstruction))
    logger.info(f"ZR audit on {A!r}: {audit.polynomials} polynomials, {audit.premise_hits} premise hits, "
                f"{audit.nonvacuous_hits} non-vacuous, {audit.formal_premises} formal, "
                f"{len(audit.violations)} violations")
    return audit


# ============================================================================
# TRANSFER TO A (x) FG
# ============================================================================

@dataclass
class TransferResult:
    max_degree: int
    identities: int = 0
    checked: int = 0
    skipped: int = 0
    failures: List[Tuple[GradedPolynomial, Tuple[int, ...]]] = field(default_factory=list)


def trivially_graded(A: GradedAlgebra) -> GradedAlgebra:
    if A.group.order == 1:
        return A
    return A.regraded(make_cyclic(1), lambda i: 0, provenance={"kind": "regraded", "inner": A})


def transfer_check(A: GradedAlgebra, group: FiniteGroup, max_degree: int) -> TransferResult:
    """Every ungraded multilinear identity, given any degrees, is a graded identity of A (x) FG."""
    plain = trivially_graded(A)
    lifted_algebra = group_algebra_grading(plain, group)
    result = TransferResult(max_degree=max_degree)
    for m in range(1, max_degree + 1):
        space = identity_space(plain, (0,) * m)
        for f in space.polynomials():
            result.identities += 1
            for degrees in product(range(group.order), repeat=m):
                lifted = GradedPolynomial(variables(degrees), f.terms)
                if not lifted.strongly_homogeneous(group):
                    result.skipped += 1
                    continue
                result.checked += 1
                if not is_identity(lifted, lifted_algebra).holds:
                    result.failures.append((lifted, degrees))
    logger.info(f"transfer to {lifted_algebra!r}: {result.checked} lifts, {len(result.failures)} failures")
    return result
