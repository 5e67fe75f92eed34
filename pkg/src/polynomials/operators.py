"""
POLYNOMIAL OPERATORS
====================

Capelli families, alternation, homogeneous components and the
Zubrilin-Razmyslov transforms (u_j^z, f~ and the obstruction sum).
"""

from itertools import combinations, permutations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from src.core.groups import FiniteGroup
from src.core.models import ValidationError
from src.polynomials.models import GradedPolynomial, VarSpec, Word, variables


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def signed_permutations(items: Sequence[int]) -> Iterator[Tuple[int, Tuple[int, ...]]]:
    """(sign, arrangement) pairs in lexicographic order of index permutations."""
    items = tuple(items)
    for p in permutations(range(len(items))):
        yield permutation_sign(p), tuple(items[i] for i in p)


def commutator(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    return a * b - b * a


def capelli(n: int, g: int, y_degrees: Sequence[int]) -> GradedPolynomial:
    """c_{n,g}: x ids 1..n of degree g interleaved with y ids n+1..2n."""
    if n < 1:
        raise ValidationError(f"Capelli polynomial needs n >= 1, got {n}")
    if len(y_degrees) != n:
        raise ValidationError(f"c_{n} needs {n} y-degrees, got {len(y_degrees)}")
    alphabet = variables([g] * n) + variables(y_degrees, start=n + 1)
    terms: Dict[Word, int] = {}
    for sign, xs in signed_permutations(range(1, n + 1)):
        word = tuple(v for pair in zip(xs, range(n + 1, 2 * n + 1)) for v in pair)
        terms[word] = sign
    return GradedPolynomial(alphabet, terms)


def standard(n: int, g: int = 0) -> GradedPolynomial:
    """s_n, the full alternation of x1...xn."""
    alphabet = variables([g] * n)
    return GradedPolynomial(alphabet, {w: s for s, w in signed_permutations(range(1, n + 1))})


def _check_set(f: GradedPolynomial, S: Sequence[int]) -> Tuple[int, ...]:
    S = tuple(S)
    if len(set(S)) != len(S):
        raise ValidationError(f"alternating set {list(S)} repeats a variable")
    degrees = set()
    for x in S:
        if x not in f.ids:
            raise ValidationError(f"variable {x} is not in the alphabet")
        degrees.add(f.degree_of(x))
    if len(degrees) > 1:
        raise ValidationError(f"alternating set {list(S)} mixes degrees")
    if not f.multilinear_in(S):
        raise ValidationError(f"polynomial is not multilinear in {list(S)}")
    return S


def alternate(f: GradedPolynomial, S: Iterable[int]) -> GradedPolynomial:
    """sum over sigma in Sym(S) of sgn(sigma) f^sigma."""
    S = _check_set(f, tuple(S))
    terms: Dict[Word, object] = {}
    for sign, image in signed_permutations(S):
        mapping = dict(zip(S, image))
        for w, c in f.terms.items():
            nw = tuple(mapping.get(x, x) for x in w)
            terms[nw] = terms.get(nw, 0) + c * sign
    return GradedPolynomial(f.alphabet, terms)


def alternate_sets(f: GradedPolynomial, sets: Iterable[Iterable[int]]) -> GradedPolynomial:
    for S in sets:
        f = alternate(f, S)
    return f


def is_alternating(f: GradedPolynomial, S: Iterable[int]) -> bool:
    """True iff every adjacent transposition of S negates f."""
    S = _check_set(f, sorted(S))
    for a, b in zip(S, S[1:]):
        if f.rename({a: b, b: a}) != -f:
            return False
    return True


def homogeneous_components(f: GradedPolynomial, group: FiniteGroup) -> List[Tuple[int, GradedPolynomial]]:
    parts: Dict[int, Dict[Word, object]] = {}
    for w, c in f.terms.items():
        parts.setdefault(f.word_degree(w, group), {})[w] = c
    return [(g, GradedPolynomial(f.alphabet, parts[g])) for g in sorted(parts)]


# ============================================================================
# ZUBRILIN-RAZMYSLOV TRANSFORMS
# ============================================================================

def _check_zr(f: GradedPolynomial, x_ids: Sequence[int], extra: int):
    ids = tuple(x_ids) + (extra,)
    if extra in x_ids:
        raise ValidationError("the extra variable must not be one of the x's")
    for x in ids:
        if x not in f.ids:
            raise ValidationError(f"variable {x} is not in the alphabet")
        if f.degree_of(x) != 0:
            raise ValidationError(f"variable {x} must have degree e")
    if not f.multilinear_in(ids):
        raise ValidationError(f"polynomial is not multilinear in {list(ids)}")
    if not is_alternating(f, x_ids):
        raise ValidationError(f"polynomial is not alternating in {list(x_ids)}")


def zr_tilde(f: GradedPolynomial, x_ids: Sequence[int], extra: int) -> GradedPolynomial:
    """f - sum_k f with x_k and the extra variable exchanged."""
    _check_zr(f, x_ids, extra)
    result = f
    for x in x_ids:
        result = result - f.rename({x: extra, extra: x})
    return result


def _insert_z(f: GradedPolynomial, z: int, j: int, designated: Sequence[int]) -> GradedPolynomial:
    designated = set(designated)
    terms: Dict[Word, object] = {}
    for w, c in f.terms.items():
        sites = [p for p, x in enumerate(w) if x in designated]
        for chosen in combinations(sites, j):
            chosen = set(chosen)
            nw: Tuple[int, ...] = ()
            for p, x in enumerate(w):
                nw += (z, x) if p in chosen else (x,)
            terms[nw] = terms.get(nw, 0) + c
    return GradedPolynomial(list(f.alphabet) + [VarSpec(z, 0)], terms)


def u_operator(f: GradedPolynomial, z: int, j: int,
               designated: Optional[Sequence[int]] = None) -> GradedPolynomial:
    """Degree-j part in z of f((z+1)x_1, ..., (z+1)x_n, ...), x's the designated ids."""
    if z in f.ids:
        raise ValidationError(f"z = {z} is already in the alphabet")
    if designated is None:
        designated = [v.id for v in f.alphabet if v.degree == 0]
    if not 0 <= j <= len(designated):
        raise ValidationError(f"j = {j} is outside 0..{len(designated)}")
    return _insert_z(f, z, j, designated)


def zr_obstruction(f: GradedPolynomial, x_ids: Sequence[int], extra: int, z: int) -> GradedPolynomial:
    """sum_j (-1)^j u_j^z(f(x_1, ..., x_n, z^(n-j) x_{n+1}))."""
    _check_zr(f, x_ids, extra)
    if z in f.ids:
        raise ValidationError(f"z = {z} is already in the alphabet")
    n = len(x_ids)
    result = GradedPolynomial(list(f.alphabet) + [VarSpec(z, 0)])
    for j in range(n + 1):
        shifted = f.substitute_word(extra, (z,) * (n - j) + (extra,), extra=[VarSpec(z, 0)])
        part = _insert_z(shifted, z, j, x_ids)
        result = result + (part if j % 2 == 0 else -part)
    return result
