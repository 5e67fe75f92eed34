"""
Exact sparse linear algebra over Q(zeta_m).

Vectors are dicts mapping an orderable key (usually a column index) to a
nonzero scalar. ``EchelonBasis`` keeps a row space in echelon form, one row per
pivot, each row normalized to 1 at its pivot and with the pivot as its
smallest key.
"""

from bisect import insort
from typing import Dict, Hashable, Iterable, List, Sequence

from src.core.scalars import Scalar, inverse

Vector = Dict[Hashable, Scalar]


def add_scaled(target: Vector, coef, vec: Vector) -> Vector:
    """target += coef * vec, in place."""
    if not coef:
        return target
    for k, x in vec.items():
        s = target.get(k, 0) + coef * x
        if s:
            target[k] = s
        else:
            target.pop(k, None)
    return target


def scaled(vec: Vector, coef) -> Vector:
    if not coef:
        return {}
    return {k: x * coef for k, x in vec.items()}


def vec_sum(vectors: Iterable[Vector]) -> Vector:
    total: Vector = {}
    for v in vectors:
        add_scaled(total, 1, v)
    return total


class EchelonBasis:
    """Incrementally built row space with exact reduction."""

    def __init__(self, vectors: Iterable[Vector] = ()):
        self.rows: Dict[Hashable, Vector] = {}
        self._pivots: List[Hashable] = []
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self._pivots)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivots(self) -> List[Hashable]:
        return list(self._pivots)

    def reduce(self, vec: Vector) -> Vector:
        v = dict(vec)
        for p in self._pivots:
            c = v.get(p)
            if c:
                add_scaled(v, -c, self.rows[p])
        return v

    def add(self, vec: Vector) -> bool:
        """Insert vec; returns True when it was independent of the stored rows."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v)
        v = scaled(v, inverse(v[pivot]))
        self.rows[pivot] = v
        insort(self._pivots, pivot)
        return True

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)

    def basis(self) -> List[Vector]:
        return [dict(self.rows[p]) for p in self._pivots]

    def reduced_rows(self) -> Dict[Hashable, Vector]:
        """Fully reduced row echelon form, keyed by pivot."""
        rows = {p: dict(self.rows[p]) for p in self._pivots}
        for i in range(len(self._pivots) - 1, -1, -1):
            p = self._pivots[i]
            for q in self._pivots[:i]:
                c = rows[q].get(p)
                if c:
                    add_scaled(rows[q], -c, rows[p])
        return rows

    def kernel(self, columns: Sequence[Hashable]) -> List[Vector]:
        """Basis of {x : row . x = 0 for every row}, one vector per free column."""
        rows = self.reduced_rows()
        kernel = []
        for f in columns:
            if f in rows:
                continue
            v: Vector = {f: 1}
            for p, row in rows.items():
                c = row.get(f)
                if c:
                    v[p] = -c
            kernel.append(v)
        return kernel


def rank(vectors: Iterable[Vector]) -> int:
    return EchelonBasis(vectors).rank


def nullspace(rows: Iterable[Vector], columns: Sequence[Hashable]) -> List[Vector]:
    return EchelonBasis(rows).kernel(columns)
