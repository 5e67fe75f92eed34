"""
EVALUATION ON GRADED ALGEBRAS
=============================

Admissible evaluation of graded polynomials, exhaustive identity decision on
the multilinear layer and the generic-element oracle for everything else.
"""

from dataclasses import dataclass, field
from itertools import combinations, product
from math import factorial
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from src.algebras.models import GradedAlgebra
from src.core.linalg import Vector
from src.core.models import BudgetRefusal, ValidationError
from src.core.scalars import SparsePoly
from src.logger import logger
from src.polynomials.models import GradedPolynomial

Value = Union[int, Vector]


@dataclass
class IdentityResult:
    holds: bool
    witness: Optional[Dict[int, int]] = None
    value: Optional[Vector] = None
    vacuous: bool = False
    checked: int = 0
    complete: bool = True
    method: str = "exhaustive"


def check_grassmann_capacity(A: GradedAlgebra, degree: int):
    """Refuse checks on a truncated Grassmann algebra that is too small for the degree."""
    kind = A.provenance.get("kind")
    if kind in ("grassmann", "envelope") and A.provenance.get("odd_part"):
        N = A.provenance["N"]
        if N < 2 * degree:
            raise BudgetRefusal(f"E({N}) cannot stand in for E at total degree {degree}; "
                                f"need N >= {2 * degree}")


def check_alphabet(f: GradedPolynomial, A: GradedAlgebra):
    """Every variable degree of f must be an element of A's grading group."""
    for v in f.alphabet:
        if not 0 <= v.degree < A.group.order:
            raise ValidationError(f"variable {v.id} has degree index {v.degree}, outside the "
                                  f"grading group of {A!r}")


def resolve_assignment(f: GradedPolynomial, A: GradedAlgebra,
                       assignment: Mapping[int, Value]) -> Dict[int, Vector]:
    """Vectors for every variable of f, checking admissibility."""
    check_alphabet(f, A)
    values = {}
    for v in f.alphabet:
        if v.id not in assignment:
            raise ValidationError(f"assignment does not cover variable {v.id}")
        x = assignment[v.id]
        if isinstance(x, int) and not isinstance(x, bool):
            if not 0 <= x < A.dim:
                raise ValidationError(f"variable {v.id} is assigned basis index {x} out of range")
            if A.deg[x] != v.degree:
                raise ValidationError(
                    f"variable {v.id} of degree {A.group.label(v.degree)} cannot take "
                    f"{A.labels[x]} of degree {A.group.label(A.deg[x])}")
            values[v.id] = {x: 1}
        else:
            x = dict(x)
            bad = [i for i in x if A.deg[i] != v.degree]
            if bad:
                raise ValidationError(f"variable {v.id} is assigned a non-homogeneous or "
                                      f"wrong-degree value (basis {A.labels[bad[0]]})")
            values[v.id] = x
    return values


def evaluate_vectors(f: GradedPolynomial, A: GradedAlgebra, values: Mapping[int, Any]) -> Dict[int, Any]:
    """sum of c * w(values) over the terms, sharing common word prefixes."""
    total: Dict[int, Any] = {}
    stack: List[Tuple[int, Dict[int, Any]]] = []
    previous: Tuple[int, ...] = ()
    for word, c in f.sorted_terms():
        common = 0
        while common < min(len(word), len(previous)) and word[common] == previous[common]:
            common += 1
        del stack[common:]
        current = stack[-1][1] if stack else None
        for x in word[len(stack):]:
            if current is None:
                current = values[x]
            elif current:
                current = A.mul(current, values[x])
            stack.append((x, current))
        previous = word
        if not word or not current:
            continue
        for k, a in current.items():
            t = a * c
            total[k] = total[k] + t if k in total else t
    return {k: x for k, x in total.items() if x}


def evaluate(f: GradedPolynomial, A: GradedAlgebra, assignment: Mapping[int, Value]) -> Vector:
    """Exact value of f under an admissible assignment (basis indices or vectors)."""
    return evaluate_vectors(f, A, resolve_assignment(f, A, assignment))


def all_word_values(A: GradedAlgebra, values: Sequence[Vector]) -> List[Vector]:
    """Values of every ordering of ``values``, in lexicographic order of index permutations."""
    m = len(values)
    out: List[Vector] = []

    def walk(current, used, depth):
        if depth == m:
            out.append(current)
            return
        for i in range(m):
            if used >> i & 1:
                continue
            if current is None:
                nxt = values[i]
            else:
                nxt = A.mul(current, values[i]) if current else {}
            if not nxt:
                out.extend({} for _ in range(factorial(m - depth - 1)))
                continue
            walk(nxt, used | (1 << i), depth + 1)

    if m == 0:
        return []
    walk(None, 0, 0)
    return out


def admissible_assignments(f: GradedPolynomial, A: GradedAlgebra,
                           alternating: Sequence[int] = ()) -> Iterator[Dict[int, int]]:
    """Basis assignments in lexicographic order; strictly increasing on the alternating set."""
    alternating = tuple(sorted(alternating))
    blocks = []
    placed = False
    for v in f.alphabet:
        if v.id in alternating:
            if not placed:
                block_degree = {f.degree_of(x) for x in alternating}
                if len(block_degree) != 1:
                    raise ValidationError("alternating hint mixes degrees")
                blocks.append((alternating, list(combinations(A.component(v.degree), len(alternating)))))
                placed = True
            continue
        blocks.append(((v.id,), [(i,) for i in A.component(v.degree)]))
    for choice in product(*(options for _, options in blocks)):
        asg = {}
        for (ids, _), vals in zip(blocks, choice):
            asg.update(zip(ids, vals))
        yield asg


def unrealizable_degrees(f: GradedPolynomial, A: GradedAlgebra) -> List[int]:
    check_alphabet(f, A)
    return sorted({v.degree for v in f.alphabet if not A.component(v.degree)})


def is_identity(f: GradedPolynomial, A: GradedAlgebra, alternating: Sequence[int] = (),
                budget: Optional[int] = None) -> IdentityResult:
    """Decide whether f is a graded identity of A; returns the first counterexample if not."""
    if not f.multilinear():
        generic = evaluate_generic(f, A)
        return IdentityResult(holds=not generic.value, vacuous=generic.vacuous, method="generic")
    check_grassmann_capacity(A, f.total_degree())
    if not f:
        return IdentityResult(holds=True)
    if unrealizable_degrees(f, A):
        return IdentityResult(holds=True, vacuous=True)
    checked = 0
    for asg in admissible_assignments(f, A, alternating):
        if budget is not None and checked >= budget:
            logger.warning(f"identity check stopped after {checked} assignments")
            return IdentityResult(holds=True, checked=checked, complete=False)
        checked += 1
        values = {x: {i: 1} for x, i in asg.items()}
        value = evaluate_vectors(f, A, values)
        if value:
            return IdentityResult(holds=False, witness=asg, value=value, checked=checked)
    return IdentityResult(holds=True, checked=checked)


# ============================================================================
# GENERIC ELEMENTS
# ============================================================================

@dataclass
class GenericResult:
    value: Dict[int, SparsePoly] = field(default_factory=dict)
    vacuous: bool = False
    nvars: int = 0


def generic_elements(A: GradedAlgebra, profile: Sequence[int]) -> Tuple[List[Dict[int, SparsePoly]], int]:
    """y_i = sum_j b_j lambda_(i,j) over the basis of A_{profile[i]}, lambdas numbered consecutively."""
    nvars = sum(len(A.component(g)) for g in profile)
    elements = []
    offset = 0
    for g in profile:
        comp = A.component(g)
        if not comp:
            raise ValidationError(f"degree {A.group.label(g)} is not realized in {A!r}")
        elements.append({j: SparsePoly.variable(nvars, offset + n) for n, j in enumerate(comp)})
        offset += len(comp)
    return elements, nvars


def evaluate_generic(f: GradedPolynomial, A: GradedAlgebra) -> GenericResult:
    """Value of f on generic elements; zero iff f is a graded identity of A."""
    if unrealizable_degrees(f, A):
        return GenericResult(vacuous=True)
    if not f:
        return GenericResult()
    ids = f.ids
    elements, nvars = generic_elements(A, [f.degree_of(x) for x in ids])
    values = dict(zip(ids, elements))
    return GenericResult(value=evaluate_vectors(f, A, values), nvars=nvars)
