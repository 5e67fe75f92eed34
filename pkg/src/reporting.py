"""
REPORTING MODULE
================

Canonical JSON reports: sorted keys, exact scalars, every number written as a
string, plus the sha256 digest of the input spec files.
"""

import hashlib
import json
from typing import Any, Dict, List, Mapping, Optional, Sequence

from src.algebras.models import GradedAlgebra
from src.core.groups import FiniteGroup
from src.core.linalg import Vector
from src.core.scalars import SparsePoly, format_scalar
from src.kemer.models import KemerPoint, LayoutResult, LowerBound
from src.polynomials.models import GradedPolynomial

SCHEMA = 1


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=True, indent=2, separators=(", ", ": ")) + "\n"


def input_digest(paths: Sequence[str]) -> str:
    """sha256 over the spec files' bytes, in the order given."""
    h = hashlib.sha256()
    for path in paths:
        with open(path, "rb") as f:
            h.update(f.read())
    return h.hexdigest()


def stringify(obj):
    """Every int becomes a decimal string; booleans and None are kept."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Mapping):
        return {str(k): stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify(x) for x in obj]
    return str(obj)


def envelope(command: str, digest: Optional[str], payload: Dict[str, Any]) -> Dict[str, Any]:
    report = stringify(payload)
    report.update({"schema": SCHEMA, "command": command, "input_digest": digest})
    return report


def error_report(command: str, digest: Optional[str], exc: BaseException) -> Dict[str, Any]:
    return envelope(command, digest, {"error": {"type": exc.__class__.__name__, "message": str(exc)}})


# ============================================================================
# SERIALIZERS
# ============================================================================

def by_degree(group: FiniteGroup, values: Sequence) -> Dict[str, Any]:
    return {group.label(g): v for g, v in enumerate(values)}


def vector(A: GradedAlgebra, v: Vector) -> Dict[str, Any]:
    return A.format_vector(v)


def generic_vector(A: GradedAlgebra, v: Mapping[int, SparsePoly]) -> Dict[str, Any]:
    return {A.labels[i]: [{"exponents": list(e), "coeff": format_scalar(c)} for e, c in p.sorted_terms()]
            for i, p in sorted(v.items())}


def polynomial(f: Optional[GradedPolynomial], group: FiniteGroup):
    return None if f is None else f.get_snapshot(group)


def assignment(A: GradedAlgebra, asg: Optional[Mapping[int, int]]):
    if asg is None:
        return None
    return {str(x): A.labels[i] for x, i in sorted(asg.items())}


def point(p: KemerPoint, group: FiniteGroup):
    return p.get_snapshot(group)


def layout_result(A: GradedAlgebra, res: LayoutResult) -> Dict[str, Any]:
    return {
        "layout": res.layout.get_snapshot(A.group),
        "found": res.found,
        "certified": res.certified,
        "reason": res.reason,
        "polynomial": polynomial(res.polynomial, A.group),
        "assignment": assignment(A, res.assignment) if res.found else None,
        "sets": res.sets,
        "pattern": res.pattern,
        "value": vector(A, res.value) if res.value else None,
        "borders": res.borders,
        "border_budget": res.border_budget,
        "nodes": res.nodes,
        "budget_exhausted": res.exhausted,
    }


def refutations(group: FiniteGroup, items: List[Dict[str, Any]]):
    return [{"alpha": by_degree(group, r["alpha"]), "s": r["s"], "reason": r["reason"]} for r in items]


def lower_bound(A: GradedAlgebra, low: LowerBound) -> Dict[str, Any]:
    G = A.group
    return {
        "points": [point(p, G) for p in low.points],
        "maximal": [point(p, G) for p in low.maximal],
        "witnesses": [dict(layout_result(A, low.witnesses[p]), point=point(p, G)) for p in low.points],
        "certified_refutations": refutations(G, low.certified_refutations),
        "candidates_tried": low.tried,
        "budget_exhausted": low.budget_exhausted,
    }
