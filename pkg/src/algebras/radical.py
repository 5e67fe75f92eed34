"""
Jacobson radical, nilpotency index and graded semisimple dimensions.

In characteristic zero J(A) is the radical of the trace form
T(a, b) = tr(L_a L_b) of the regular representation of the unitalization A#.
For x in A only two kinds of pairing matter: T(x, 1) = tr(L_x) and
T(x, b_l) = tr(L_{x b_l}), both computed from the traces t_i = tr(L_{b_i}).
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from src.algebras.models import GradedAlgebra
from src.core.linalg import EchelonBasis, Vector
from src.core.models import ConsistencyError
from src.logger import logger


@dataclass
class AdaptedElement:
    """One element of the homogeneous basis split into radical and complement parts."""

    vector: Vector
    degree: int
    radical: bool


@dataclass
class RadicalData:
    basis: List[Vector]
    components: Dict[int, List[Vector]]
    nilpotency_index: int
    d: Tuple[int, ...]
    adapted_basis: List[AdaptedElement] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def adapted_component(self, g: int) -> List[int]:
        return [n for n, a in enumerate(self.adapted_basis) if a.degree == g]


def _traces(A: GradedAlgebra) -> List:
    t = []
    for i in range(A.dim):
        total = 0
        for j in range(A.dim):
            for k, c in A.product_terms(i, j):
                if k == j:
                    total = total + c
        t.append(total)
    return t


def _trace_form_kernel(A: GradedAlgebra) -> List[Vector]:
    t = _traces(A)
    rows = [{i: c for i, c in enumerate(t) if c}]
    for l in range(A.dim):
        row: Vector = {}
        for i in range(A.dim):
            total = 0
            for k, c in A.product_terms(i, l):
                total = total + c * t[k]
            if total:
                row[i] = total
        rows.append(row)
    return EchelonBasis(r for r in rows if r).kernel(range(A.dim))


def _graded_components(A: GradedAlgebra, basis: List[Vector]) -> Dict[int, List[Vector]]:
    comps = {}
    total = 0
    for g in range(A.group.order):
        projections = [{i: c for i, c in v.items() if A.deg[i] == g} for v in basis]
        ech = EchelonBasis(p for p in projections if p)
        comps[g] = ech.basis()
        total += ech.rank
    if total != len(basis):
        logger.error(f"radical of {A!r} is not graded: {total} != {len(basis)}")
        raise ConsistencyError("computed radical is not a graded subspace")
    return comps


def _check_ideal(A: GradedAlgebra, span: EchelonBasis, basis: List[Vector]):
    for v in basis:
        for i in range(A.dim):
            b = {i: 1}
            if not span.contains(A.mul(b, v)) or not span.contains(A.mul(v, b)):
                logger.error(f"radical of {A!r} is not closed under b{i}")
                raise ConsistencyError("computed radical is not a two-sided ideal")


def nilpotency_index(A: GradedAlgebra, basis: List[Vector]) -> int:
    """Least u with J^u = 0, iterating J^(k+1) = span(J * J^k)."""
    if not basis:
        return 1
    power = basis
    u = 1
    while power:
        if u > A.dim + 1:
            raise ConsistencyError("radical is not nilpotent")
        nxt = EchelonBasis()
        for x in basis:
            for y in power:
                p = A.mul(x, y)
                if p:
                    nxt.add(p)
        power = nxt.basis()
        u += 1
    return u


def _adapted_basis(A: GradedAlgebra, comps: Dict[int, List[Vector]]) -> List[AdaptedElement]:
    adapted = []
    for g in range(A.group.order):
        ech = EchelonBasis()
        for v in comps[g]:
            ech.add(v)
            adapted.append(AdaptedElement(v, g, True))
        for i in A.component(g):
            if ech.add({i: 1}):
                adapted.append(AdaptedElement({i: 1}, g, False))
    return adapted


def radical(A: GradedAlgebra) -> RadicalData:
    """Radical data of A; raises ConsistencyError if a verification fails."""
    cached = getattr(A, "_radical", None)
    if cached is not None:
        return cached
    kernel = _trace_form_kernel(A)
    comps = _graded_components(A, kernel)
    span = EchelonBasis(kernel)
    _check_ideal(A, span, kernel)
    basis = span.basis()
    n = nilpotency_index(A, basis)
    dims = A.component_dims()
    d = tuple(dims[g] - len(comps[g]) for g in range(A.group.order))
    data = RadicalData(basis=basis, components=comps, nilpotency_index=n, d=d,
                       adapted_basis=_adapted_basis(A, comps))
    logger.info(f"radical of {A!r}: dim J = {len(basis)}, n_A = {n}, d = {d}")
    A._radical = data
    return data


def g_par(A: GradedAlgebra) -> Tuple[Tuple[int, ...], int]:
    """(d_g1, ..., d_gr; n_A - 1) in the group's index order."""
    data = radical(A)
    return data.d, data.nilpotency_index - 1
