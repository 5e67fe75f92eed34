"""
G-GRADED STRUCTURE-CONSTANT ALGEBRAS
====================================

A ``GradedAlgebra`` is a finite-dimensional associative algebra given by a
homogeneous basis b_0..b_{n-1}, a degree map into a ``FiniteGroup`` and sparse
structure constants b_i b_j = sum_k c_ij^k b_k. Elements are sparse dicts
{basis index: coefficient}; coefficients may be scalars or ``SparsePoly``
values (generic elements).
"""

from itertools import product
from math import lcm
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from src.core.groups import FiniteGroup
from src.core.linalg import Vector
from src.core.models import ValidationError, Violation
from src.core.scalars import Scalar, as_scalar, embed, format_scalar, scalar_order

Terms = Tuple[Tuple[int, Scalar], ...]


class GradedAlgebra:
    """Structure-constant algebra with a homogeneous basis."""

    def __init__(self, group: FiniteGroup, deg: Sequence[int],
                 structure: Dict[Tuple[int, int], Iterable[Tuple[int, Scalar]]],
                 unit: Optional[Vector] = None, labels: Optional[Sequence[str]] = None,
                 provenance: Optional[Dict[str, Any]] = None, name: str = ""):
        self.group = group
        self.dim = len(deg)
        self.deg = tuple(deg)
        for i, g in enumerate(self.deg):
            if not 0 <= g < group.order:
                raise ValidationError(f"basis element {i} has degree {g} outside the group")
        self._rows: List[Dict[int, Terms]] = [dict() for _ in range(self.dim)]
        for (i, j), terms in structure.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValidationError(f"structure constant index ({i},{j}) out of range")
            cleaned = []
            for k, c in terms:
                if not 0 <= k < self.dim:
                    raise ValidationError(f"product b{i}*b{j} names basis index {k} out of range")
                c = as_scalar(c)
                if c:
                    cleaned.append((k, c))
            if cleaned:
                self._rows[i][j] = tuple(sorted(cleaned, key=lambda t: t[0]))
        self.unit = {k: as_scalar(c) for k, c in unit.items() if c} if unit is not None else None
        self.labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(self.dim))
        self.provenance = provenance or {"kind": "explicit"}
        self.name = name
        self._components = None

    # ------------------------------------------------------------------ basics

    def product_terms(self, i: int, j: int) -> Terms:
        return self._rows[i].get(j, ())

    def structure_items(self):
        for i, row in enumerate(self._rows):
            for j in sorted(row):
                yield i, j, row[j]

    def basis_vector(self, i: int) -> Vector:
        return {i: as_scalar(1)}

    def mul(self, u: Dict[int, Any], v: Dict[int, Any]) -> Dict[int, Any]:
        """Product of two elements; works for scalar and polynomial coefficients."""
        out: Dict[int, Any] = {}
        for i, a in u.items():
            row = self._rows[i]
            if not row:
                continue
            for j, b in v.items():
                terms = row.get(j)
                if not terms:
                    continue
                ab = a * b
                if not ab:
                    continue
                for k, c in terms:
                    t = ab * c
                    if k in out:
                        out[k] = out[k] + t
                    else:
                        out[k] = t
        return {k: x for k, x in out.items() if x}

    def mul_basis(self, i: int, j: int) -> Vector:
        return dict(self.product_terms(i, j))

    def component(self, g: int) -> Tuple[int, ...]:
        """Basis indices of degree g, in basis order."""
        if self._components is None:
            comps: Dict[int, List[int]] = {h: [] for h in range(self.group.order)}
            for i, d in enumerate(self.deg):
                comps[d].append(i)
            self._components = {h: tuple(v) for h, v in comps.items()}
        return self._components[g]

    def component_dims(self) -> Tuple[int, ...]:
        return tuple(len(self.component(g)) for g in range(self.group.order))

    def is_homogeneous(self, v: Vector, g: int) -> bool:
        return all(self.deg[i] == g for i in v)

    def vector_degree(self, v: Vector) -> Optional[int]:
        degrees = {self.deg[i] for i in v}
        return degrees.pop() if len(degrees) == 1 else None

    # -------------------------------------------------------------- validation

    def validate(self) -> Optional[Violation]:
        """Grading, associativity and unit checks; the first failure is returned."""
        G = self.group
        for i, j, terms in self.structure_items():
            target = G.mult[self.deg[i]][self.deg[j]]
            for k, _ in terms:
                if self.deg[k] != target:
                    return Violation("grading", (i, j), f"b{i}*b{j} has a term on b{k} of degree "
                                     f"{G.label(self.deg[k])}, expected {G.label(target)}")
        for i, j, k in product(range(self.dim), repeat=3):
            left = self.mul(self.mul_basis(i, j), {k: 1})
            right = self.mul({i: 1}, self.mul_basis(j, k))
            if left != right:
                return Violation("associativity", (i, j, k), f"(b{i}b{j})b{k} != b{i}(b{j}b{k})")
        if self.unit is not None:
            if any(self.deg[k] != 0 for k in self.unit):
                return Violation("unit", tuple(sorted(self.unit)), "unit is not of degree e")
            for i in range(self.dim):
                b = {i: as_scalar(1)}
                if self.mul(self.unit, b) != b or self.mul(b, self.unit) != b:
                    return Violation("unit", (i,), f"unit does not fix b{i}")
        return None

    # ------------------------------------------------------------ derivations

    def regraded(self, group: FiniteGroup, degree_of: Callable[[int], int],
                 provenance: Optional[Dict[str, Any]] = None) -> "GradedAlgebra":
        """Same algebra with deg(b_i) = degree_of(i) in ``group``."""
        structure = {(i, j): terms for i, j, terms in self.structure_items()}
        return GradedAlgebra(group, [degree_of(i) for i in range(self.dim)], structure,
                             unit=self.unit, labels=self.labels,
                             provenance=provenance or {"kind": "regraded", "inner": self},
                             name=self.name)

    def cyclotomic_order(self) -> int:
        """lcm of the cyclotomic orders of the structure constants and the unit."""
        order = 1
        for _, _, terms in self.structure_items():
            for _, c in terms:
                order = lcm(order, scalar_order(c))
        for c in (self.unit or {}).values():
            order = lcm(order, scalar_order(c))
        return order

    def embedded(self, order: int) -> "GradedAlgebra":
        """Same algebra with every coefficient lifted into Q(zeta_order)."""
        if order % self.cyclotomic_order():
            raise ValidationError(f"{self!r} does not embed into cyclotomic order {order}")
        structure = {(i, j): [(k, embed(c, order)) for k, c in terms]
                     for i, j, terms in self.structure_items()}
        unit = None if self.unit is None else {k: embed(c, order) for k, c in self.unit.items()}
        return GradedAlgebra(self.group, self.deg, structure, unit=unit, labels=self.labels,
                             provenance=self.provenance, name=self.name)

    def format_vector(self, v: Vector) -> Dict[str, Any]:
        return {self.labels[i]: format_scalar(c) for i, c in sorted(v.items())}

    def get_snapshot(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "group": self.group.get_snapshot(),
            "deg": [self.group.label(d) for d in self.deg],
            "labels": list(self.labels),
            "unit": None if self.unit is None else self.format_vector(self.unit),
            "sc": [{"i": i, "j": j, "terms": [{"k": k, "coeff": format_scalar(c)} for k, c in t]}
                   for i, j, t in self.structure_items()],
        }

    def __repr__(self):
        name = self.name or self.provenance.get("kind", "algebra")
        return f"GradedAlgebra({name}, dim={self.dim}, group order={self.group.order})"


