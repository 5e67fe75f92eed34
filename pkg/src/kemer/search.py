"""
KEMER POINT SEARCH
==================

Lower bounds come from layout-constrained non-identity searches: for a layout
of alternating sets we look for a word in the set variables (plus border
variables) whose full alternation is nonzero on A. Instead of expanding the
alternation we antisymmetrize the substitution side: walking a word pattern
left to right, each state records which values of every set are already used
(one bitmask per set) together with the signed partial product. States with
the same masks merge, zero states drop out, and a pattern whose state set
empties is pruned with all its extensions.

Upper bounds are the G-Par of the algebra.
"""

from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from itertools import combinations, combinations_with_replacement, islice, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.algebras.models import GradedAlgebra
from src.algebras.radical import RadicalData, g_par, radical
from src.config import config
from src.core.linalg import Vector, add_scaled
from src.core.models import ConsistencyError
from src.identities.evaluation import evaluate
from src.kemer.models import AlternationLayout, KemerPoint, LayoutResult, LowerBound, SearchParams
from src.logger import logger
from src.polynomials.models import GradedPolynomial, VarSpec
from src.polynomials.operators import alternate_sets, is_alternating

SET, BORDER = 0, 1
WINDOW = 8

Label = Tuple[int, int]
Masks = Tuple[int, ...]


# ============================================================================
# BUDGETS AND CERTIFICATES
# ============================================================================

def default_border_budget(A: GradedAlgebra, nu: int, big: int = 0) -> int:
    kind = A.provenance.get("kind")
    if kind == "product" and A.provenance.get("factors"):
        return max(default_border_budget(F, nu, big) for F in A.provenance["factors"])
    if kind == "bsz":
        k = A.provenance["k"]
        return (A.provenance["subgroup"].sub.order * k * k + 1) * nu
    return max(2, 2 * big)


def certify(A: GradedAlgebra, layout: AlternationLayout, rad: Optional[RadicalData] = None) -> str:
    """Reason why every polynomial of the layout is an identity of A, or ''."""
    rad = rad or radical(A)
    for g, n in layout.sets:
        dim = len(A.component(g))
        if n > dim:
            return f"a set of size {n} exceeds dim A_{A.group.label(g)} = {dim}"
    over = sum(1 for g, n in layout.sets if n > rad.d[g])
    if over >= rad.nilpotency_index:
        return (f"{over} sets exceed the semisimple dimension, each forcing a radical value, "
                f"and J^{rad.nilpotency_index} = 0")
    return ""


# ============================================================================
# ANTISYMMETRIZED EVALUATION
# ============================================================================

def set_value_tuples(A: GradedAlgebra, layout: AlternationLayout) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Sorted distinct values per set; nondecreasing across sets with the same degree and size."""
    options = [list(combinations(A.component(g), n)) for g, n in layout.sets]
    previous: List[Optional[int]] = []
    last: Dict[Tuple[int, int], int] = {}
    for i, key in enumerate(layout.sets):
        previous.append(last.get(key))
        last[key] = i
    chosen: List[Tuple[int, ...]] = []

    def walk(i):
        if i == len(options):
            yield tuple(chosen)
            return
        j = previous[i]
        for opt in options[i]:
            if j is not None and opt < chosen[j]:
                continue
            chosen.append(opt)
            yield from walk(i + 1)
            chosen.pop()

    yield from walk(0)


def _right_mul(A: GradedAlgebra, vec: Vector, j: int, sign: int) -> Vector:
    out: Vector = {}
    for i, a in vec.items():
        for k, c in A.product_terms(i, j):
            t = a * c * sign
            s = out.get(k, 0) + t
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _extend(A: GradedAlgebra, sizes: Sequence[int], values, states: Dict[Masks, Optional[Vector]],
            label: Label) -> Dict[Masks, Vector]:
    kind, x = label
    new: Dict[Masks, Vector] = {}
    for masks, vec in states.items():
        if kind == SET:
            m = masks[x]
            for u in range(sizes[x]):
                if m >> u & 1:
                    continue
                sign = -1 if bin(m >> (u + 1)).count("1") % 2 else 1
                b = values[x][u]
                prod = {b: sign} if vec is None else _right_mul(A, vec, b, sign)
                if not prod:
                    continue
                key = masks[:x] + (m | 1 << u,) + masks[x + 1:]
                if key in new:
                    add_scaled(new[key], 1, prod)
                else:
                    new[key] = prod
        else:
            prod = {x: 1} if vec is None else _right_mul(A, vec, x, 1)
            if not prod:
                continue
            if masks in new:
                add_scaled(new[masks], 1, prod)
            else:
                new[masks] = prod
    return {k: v for k, v in new.items() if v}


def search_tuple(A: GradedAlgebra, layout: AlternationLayout, borders: int,
                 values: Sequence[Tuple[int, ...]]):
    """First nonzero word pattern for fixed set values; returns (pattern, value) or None, and the node count."""
    sizes = [n for _, n in layout.sets]
    remaining = list(sizes)
    length = sum(sizes) + borders
    full = tuple((1 << n) - 1 for n in sizes)
    pattern: List[Label] = []
    counter = {"nodes": 0, "borders": borders}

    def step(states, label, depth):
        counter["nodes"] += 1
        nxt = _extend(A, sizes, values, states, label)
        if not nxt:
            return None
        pattern.append(label)
        hit = dfs(nxt, depth + 1)
        if hit is None:
            pattern.pop()
        return hit

    def dfs(states, depth):
        if depth == length:
            vec = states.get(full)
            return vec or None
        for i in range(len(sizes)):
            if remaining[i]:
                remaining[i] -= 1
                hit = step(states, (SET, i), depth)
                remaining[i] += 1
                if hit is not None:
                    return hit
        if counter["borders"]:
            counter["borders"] -= 1
            for b in range(A.dim):
                hit = step(states, (BORDER, b), depth)
                if hit is not None:
                    counter["borders"] += 1
                    return hit
            counter["borders"] += 1
        return None

    vec = dfs({tuple(0 for _ in sizes): None}, 0)
    if vec is None:
        return None, counter["nodes"]
    return (tuple(pattern), vec), counter["nodes"]


def _tuple_job(args):
    A, layout, borders, values = args
    return search_tuple(A, layout, borders, values)


def _scan(A: GradedAlgebra, layout: AlternationLayout, borders: int, remaining: int, pool, workers: int = 1):
    """Walk the set-value tuples in order; the node budget is checked before each tuple."""
    tuples = set_value_tuples(A, layout)
    nodes = 0
    if pool is None:
        for values in tuples:
            if nodes >= remaining:
                return None, nodes, True
            hit, n = search_tuple(A, layout, borders, values)
            nodes += n
            if hit is not None:
                return (values,) + hit, nodes, False
        return None, nodes, False
    width = max(1, workers) * WINDOW
    while True:
        window = list(islice(tuples, width))
        if not window:
            return None, nodes, False
        outcomes = pool.map(_tuple_job, [(A, layout, borders, v) for v in window])
        for values, (hit, n) in zip(window, outcomes):
            if nodes >= remaining:
                return None, nodes, True
            nodes += n
            if hit is not None:
                return (values,) + hit, nodes, False


def executor(workers: int):
    """Process pool for workers > 1, otherwise a null context yielding None."""
    if workers and workers > 1:
        return ProcessPoolExecutor(max_workers=workers)
    return nullcontext(None)


# ============================================================================
# WITNESS MATERIALIZATION
# ============================================================================

def materialize(A: GradedAlgebra, layout: AlternationLayout, values, pattern: Sequence[Label]):
    """Polynomial alternated on every layout set, its assignment, and the sets as variable ids."""
    alphabet, asg = [], {}
    sets: List[List[int]] = [[] for _ in layout.sets]
    for pos, (kind, x) in enumerate(pattern, start=1):
        if kind == SET:
            alphabet.append(VarSpec(pos, layout.sets[x][0]))
            asg[pos] = values[x][len(sets[x])]
            sets[x].append(pos)
        else:
            alphabet.append(VarSpec(pos, A.deg[x]))
            asg[pos] = x
    word = tuple(range(1, len(pattern) + 1))
    f = alternate_sets(GradedPolynomial.monomial(word, alphabet), sets)
    return f, asg, sets


def _pattern_labels(A: GradedAlgebra, pattern: Sequence[Label]) -> List[str]:
    return [f"S{x}" if kind == SET else f"B:{A.labels[x]}" for kind, x in pattern]


def layout_witness(A: GradedAlgebra, layout: AlternationLayout, params: Optional[SearchParams] = None,
                   pool=None) -> LayoutResult:
    """Non-identity alternating on every set of the layout, or the reason none was found."""
    params = params or SearchParams()
    rad = radical(A)
    budget = params.border_budget
    if budget is None:
        budget = config.get("search", "border_budget")
    if budget is None:
        budget = default_border_budget(A, params.nu, layout.big)
    node_budget = params.node_budget or config.get("search", "assignment_budget", 2000000)
    result = LayoutResult(layout=layout, border_budget=budget)

    reason = certify(A, layout, rad)
    if reason:
        result.certified = True
        result.reason = reason
        return result

    for borders in range(budget + 1):
        hit, nodes, exhausted = _scan(A, layout, borders, node_budget - result.nodes, pool, params.workers)
        result.nodes += nodes
        if exhausted:
            result.exhausted = True
            result.reason = f"node budget {node_budget} exhausted at {borders} border variables"
            logger.warning(f"layout search on {A!r}: {result.reason}")
            return result
        if hit is None:
            continue
        values, pattern, vec = hit
        f, asg, sets = materialize(A, layout, values, pattern)
        value = evaluate(f, A, asg)
        if value != vec or not all(len(S) < 2 or is_alternating(f, S) for S in sets):
            logger.error(f"layout witness on {A!r} does not re-verify: pattern {pattern}")
            raise ConsistencyError("antisymmetrized evaluation disagrees with the alternated polynomial")
        result.found = True
        result.polynomial, result.assignment, result.sets = f, asg, sets
        result.pattern = _pattern_labels(A, pattern)
        result.value = value
        result.borders = borders
        return result
    result.reason = f"no witness with at most {budget} border variables"
    return result


# ============================================================================
# BOUNDS
# ============================================================================

def kemer_upper_bound(A: GradedAlgebra) -> KemerPoint:
    d, s = g_par(A)
    return KemerPoint(tuple(d), s)


def _bounds(A: GradedAlgebra) -> List[KemerPoint]:
    if A.provenance.get("kind") == "product" and A.provenance.get("factors"):
        return [kemer_upper_bound(F) for F in A.provenance["factors"]]
    return [kemer_upper_bound(A)]


def candidate_alphas(bounds: Sequence[KemerPoint]) -> List[Tuple[int, ...]]:
    """Every alpha below some bound, by decreasing total then lexicographically descending."""
    seen = set()
    for b in bounds:
        seen.update(product(*(range(x + 1) for x in b.alpha)))
    return sorted(seen, key=lambda a: (-sum(a), tuple(-x for x in a)))


def _refutation(alpha, s, reason) -> Dict:
    return {"alpha": tuple(alpha), "s": s, "reason": reason}


def kemer_lower_bound(A: GradedAlgebra, params: Optional[SearchParams] = None) -> LowerBound:
    """Maximal (alpha, s) reached by layout searches at the given fold count and budgets."""
    params = params or SearchParams()
    rad = radical(A)
    r = A.group.order
    bounds = _bounds(A)
    result = LowerBound()
    with executor(params.workers) as pool:
        for alpha in candidate_alphas(bounds):
            if any(KemerPoint(alpha).alpha_precedes(p) for p in result.points):
                continue
            result.tried += 1
            res = layout_witness(A, AlternationLayout.from_point(alpha, params.nu), params, pool)
            result.budget_exhausted |= res.exhausted
            if not res.found:
                if res.certified:
                    result.certified_refutations.append(_refutation(alpha, 0, res.reason))
                continue
            cap = max(b.s for b in bounds if all(a <= x for a, x in zip(alpha, b.alpha)))
            s, witness = 0, res
            for s_try in range(1, cap + 1):
                hit = None
                for big in combinations_with_replacement(range(r), s_try):
                    layout = AlternationLayout.from_point(alpha, params.nu, big)
                    res = layout_witness(A, layout, params, pool)
                    result.budget_exhausted |= res.exhausted
                    if res.found:
                        hit = res
                        break
                if hit is None:
                    break
                s, witness = s_try, hit
            point = KemerPoint(alpha, s)
            logger.info(f"Kemer candidate {point!r} on {A!r} reached with {witness.borders} borders")
            result.points.append(point)
            result.witnesses[point] = witness
            if s == cap:
                reasons = [certify(A, AlternationLayout.from_point(alpha, params.nu, big), rad)
                           for big in combinations_with_replacement(range(r), cap + 1)]
                if all(reasons):
                    result.certified_refutations.append(_refutation(alpha, cap + 1, reasons[0]))

    for p in result.maximal:
        for g in range(r):
            alpha = tuple(a + (h == g) for h, a in enumerate(p.alpha))
            if any(KemerPoint(alpha).alpha_precedes(q) for q in result.points):
                continue
            reason = certify(A, AlternationLayout.from_point(alpha, params.nu), rad)
            if reason and all(c["alpha"] != alpha for c in result.certified_refutations):
                result.certified_refutations.append(_refutation(alpha, 0, reason))
    return result
