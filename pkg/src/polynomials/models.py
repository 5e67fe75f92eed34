"""
Formal G-graded noncommutative polynomials.

Words store variable ids only; the degree of each id lives in the alphabet.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.core.groups import FiniteGroup
from src.core.models import ValidationError
from src.core.scalars import CycScalar, Scalar, as_scalar, format_scalar, inverse

Word = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class VarSpec:
    id: int
    degree: int


class GradedPolynomial:
    """Finite linear combination of words over a degree-labelled alphabet."""

    def __init__(self, alphabet: Iterable[VarSpec], terms: Optional[Mapping[Word, Scalar]] = None):
        degrees: Dict[int, int] = {}
        for v in alphabet:
            if v.id in degrees and degrees[v.id] != v.degree:
                raise ValidationError(f"variable {v.id} declared with two degrees")
            degrees[v.id] = v.degree
        self._degrees = degrees
        self.alphabet: Tuple[VarSpec, ...] = tuple(VarSpec(i, degrees[i]) for i in sorted(degrees))
        self.terms: Dict[Word, Scalar] = {}
        for word, c in (terms or {}).items():
            word = tuple(word)
            for x in word:
                if x not in degrees:
                    raise ValidationError(f"word {word} uses variable {x} missing from the alphabet")
            s = self.terms.get(word, 0) + as_scalar(c)
            if s:
                self.terms[word] = s
            else:
                self.terms.pop(word, None)

    @classmethod
    def monomial(cls, word: Sequence[int], alphabet: Iterable[VarSpec], coeff=1) -> "GradedPolynomial":
        return cls(alphabet, {tuple(word): coeff})

    # ---------------------------------------------------------------- access

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(v.id for v in self.alphabet)

    def degree_of(self, var: int) -> int:
        return self._degrees[var]

    def sorted_terms(self) -> List[Tuple[Word, Scalar]]:
        return sorted(self.terms.items())

    def total_degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    # ------------------------------------------------------------ predicates

    def multilinear(self) -> bool:
        ids = sorted(self.ids)
        return all(sorted(w) == ids for w in self.terms)

    def multilinear_in(self, subset: Iterable[int]) -> bool:
        subset = list(subset)
        return all(all(w.count(x) == 1 for x in subset) for w in self.terms)

    def word_degree(self, word: Word, group: FiniteGroup) -> int:
        return group.product(self._degrees[x] for x in word)

    def strongly_homogeneous(self, group: FiniteGroup) -> bool:
        return len({self.word_degree(w, group) for w in self.terms}) <= 1

    # ------------------------------------------------------------ arithmetic

    def _merged_alphabet(self, other: "GradedPolynomial") -> List[VarSpec]:
        return list(self.alphabet) + list(other.alphabet)

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        result = GradedPolynomial(self._merged_alphabet(other), self.terms)
        for w, c in other.terms.items():
            s = result.terms.get(w, 0) + c
            if s:
                result.terms[w] = s
            else:
                result.terms.pop(w, None)
        return result

    def __neg__(self) -> "GradedPolynomial":
        return self.scale(-1)

    def __sub__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        return self + (-other)

    def scale(self, c) -> "GradedPolynomial":
        c = as_scalar(c)
        return GradedPolynomial(self.alphabet, {w: x * c for w, x in self.terms.items()} if c else {})

    def __mul__(self, other):
        if isinstance(other, GradedPolynomial):
            terms: Dict[Word, Scalar] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    terms[w] = terms.get(w, 0) + c1 * c2
            return GradedPolynomial(self._merged_alphabet(other), terms)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    # ------------------------------------------------------- transformations

    def rename(self, mapping: Mapping[int, int]) -> "GradedPolynomial":
        """Rename variables; renamed variables keep their degree."""
        alphabet = [VarSpec(mapping.get(v.id, v.id), v.degree) for v in self.alphabet]
        if len({v.id for v in alphabet}) != len(alphabet):
            raise ValidationError(f"renaming {dict(mapping)} is not injective on the alphabet")
        terms: Dict[Word, Scalar] = {}
        for w, c in self.terms.items():
            nw = tuple(mapping.get(x, x) for x in w)
            terms[nw] = terms.get(nw, 0) + c
        return GradedPolynomial(alphabet, terms)

    def substitute_word(self, var: int, replacement: Word,
                        extra: Iterable[VarSpec] = ()) -> "GradedPolynomial":
        """Replace every occurrence of ``var`` by the word ``replacement``."""
        alphabet = [v for v in self.alphabet] + list(extra)
        terms: Dict[Word, Scalar] = {}
        for w, c in self.terms.items():
            nw: Tuple[int, ...] = ()
            for x in w:
                nw += tuple(replacement) if x == var else (x,)
            terms[nw] = terms.get(nw, 0) + c
        return GradedPolynomial(alphabet, terms)

    def with_alphabet(self, extra: Iterable[VarSpec]) -> "GradedPolynomial":
        return GradedPolynomial(list(self.alphabet) + list(extra), self.terms)

    def normalized(self) -> "GradedPolynomial":
        """Scaled so that the first term in sorted order has coefficient 1."""
        if not self.terms:
            return self
        return self.scale(inverse(self.sorted_terms()[0][1]))

    def key(self) -> Tuple:
        return tuple(self.sorted_terms())

    # -------------------------------------------------------------- display

    def get_snapshot(self, group: Optional[FiniteGroup] = None):
        label = (lambda g: group.label(g)) if group is not None else (lambda g: g)
        return {
            "alphabet": [{"id": v.id, "degree": label(v.degree)} for v in self.alphabet],
            "terms": [{"word": list(w), "coeff": format_scalar(c)} for w, c in self.sorted_terms()],
        }

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = "*".join(f"x{x}" for x in w) or "1"
            if isinstance(c, CycScalar):
                parts.append(f"+ ({c!r})*{mono}")
            elif c == 1:
                parts.append(f"+ {mono}")
            elif c == -1:
                parts.append(f"- {mono}")
            elif c < 0:
                parts.append(f"- {-c}*{mono}")
            else:
                parts.append(f"+ {c}*{mono}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def variables(degrees: Sequence[int], start: int = 1) -> List[VarSpec]:
    """Fresh variables with consecutive ids starting at ``start``."""
    return [VarSpec(start + n, g) for n, g in enumerate(degrees)]
