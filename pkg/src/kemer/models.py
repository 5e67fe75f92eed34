"""
Kemer points, search parameters and alternation layouts.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.core.groups import FiniteGroup
from src.core.linalg import Vector
from src.core.models import ValidationError
from src.polynomials.models import GradedPolynomial


@dataclass(frozen=True)
class KemerPoint:
    """(alpha; s) with alpha indexed by group element; s = None stands for infinity."""

    alpha: Tuple[int, ...]
    s: Optional[int] = 0

    def alpha_precedes(self, other: "KemerPoint") -> bool:
        """alpha strictly below other.alpha componentwise."""
        return self.alpha != other.alpha and all(a <= b for a, b in zip(self.alpha, other.alpha))

    def precedes(self, other: "KemerPoint") -> bool:
        """(alpha, s) <= (beta, s') iff alpha < beta, or alpha = beta and s <= s'."""
        if self.alpha_precedes(other):
            return True
        if self.alpha != other.alpha:
            return False
        if other.s is None:
            return True
        return self.s is not None and self.s <= other.s

    def get_snapshot(self, group: FiniteGroup):
        return {
            "alpha": {group.label(g): str(a) for g, a in enumerate(self.alpha)},
            "s": "inf" if self.s is None else str(self.s),
        }

    def __repr__(self):
        s = "inf" if self.s is None else self.s
        return f"(({','.join(map(str, self.alpha))});{s})"


def maximal_points(points: Sequence[KemerPoint]) -> List[KemerPoint]:
    """The points not strictly below another one, deduplicated, in input order."""
    out: List[KemerPoint] = []
    for p in points:
        if p in out:
            continue
        if any(q != p and p.precedes(q) for q in points):
            continue
        out.append(p)
    return out


@dataclass
class SearchParams:
    nu: int = 1
    border_budget: Optional[int] = None
    node_budget: Optional[int] = None
    workers: int = 1

    def __post_init__(self):
        if self.nu < 1:
            raise ValidationError(f"fold count must be positive, got {self.nu}")
        if self.border_budget is not None and self.border_budget < 0:
            raise ValidationError("border budget must be nonnegative")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValidationError("node budget must be positive")

    def get_snapshot(self):
        return {
            "nu": str(self.nu),
            "border_budget": None if self.border_budget is None else str(self.border_budget),
            "node_budget": None if self.node_budget is None else str(self.node_budget),
        }


@dataclass(frozen=True)
class AlternationLayout:
    """Alternating sets given as (degree, size) pairs, plus a count of border variables."""

    sets: Tuple[Tuple[int, int], ...]
    big: int = 0

    @classmethod
    def from_point(cls, alpha: Sequence[int], nu: int, big_degrees: Sequence[int] = ()) -> "AlternationLayout":
        """nu folds of small sets of size alpha_g, then one set of size alpha_g + 1 per big degree."""
        sets = [(g, a) for _ in range(nu) for g, a in enumerate(alpha) if a > 0]
        sets += [(g, alpha[g] + 1) for g in sorted(big_degrees)]
        return cls(tuple(sets), big=len(big_degrees))

    @property
    def size(self) -> int:
        return sum(n for _, n in self.sets)

    def get_snapshot(self, group: FiniteGroup):
        return {
            "sets": [{"degree": group.label(g), "size": str(n)} for g, n in self.sets],
            "big_sets": str(self.big),
        }


@dataclass
class LayoutResult:
    layout: AlternationLayout
    found: bool = False
    certified: bool = False
    reason: str = ""
    polynomial: Optional[GradedPolynomial] = None
    assignment: Dict[int, int] = field(default_factory=dict)
    sets: List[List[int]] = field(default_factory=list)
    pattern: List[str] = field(default_factory=list)
    value: Optional[Vector] = None
    borders: int = 0
    border_budget: int = 0
    nodes: int = 0
    exhausted: bool = False


@dataclass
class LowerBound:
    points: List[KemerPoint] = field(default_factory=list)
    witnesses: Dict[KemerPoint, LayoutResult] = field(default_factory=dict)
    certified_refutations: List[Dict[str, Any]] = field(default_factory=list)
    budget_exhausted: bool = False
    tried: int = 0

    @property
    def maximal(self) -> List[KemerPoint]:
        return maximal_points(self.points)
