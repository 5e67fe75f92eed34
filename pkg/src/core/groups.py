"""
FINITE GROUPS AND 2-COCYCLES
============================

Groups are stored extensionally as multiplication tables with element 0 as the
identity. Cocycles are exponent tables mod m: f(a, b) = zeta_m ** exponents[a][b].
"""

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import List, Optional, Sequence, Tuple

from src.core.models import ValidationError, Violation
from src.core.scalars import Scalar, root_of_unity


@dataclass(frozen=True)
class FiniteGroup:
    """A validated finite group given by its multiplication table."""

    mult: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...]
    inv: Tuple[int, ...] = field(default=(), compare=False)
    factors: Tuple["FiniteGroup", ...] = field(default=(), compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.mult)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def product(self, elements: Sequence[int]) -> int:
        acc = 0
        for x in elements:
            acc = self.mult[acc][x]
        return acc

    def index(self, label) -> int:
        """Resolve a label or an integer index to an element index."""
        if isinstance(label, int) and not isinstance(label, bool):
            if 0 <= label < self.order:
                return label
        elif label in self.labels:
            return self.labels.index(label)
        raise ValidationError(f"unknown group element {label!r}; known: {list(self.labels)}")

    def label(self, a: int) -> str:
        return self.labels[a]

    def get_snapshot(self):
        return {"order": self.order, "mult": [list(r) for r in self.mult], "labels": list(self.labels)}


def make_from_table(table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None,
                    factors: Tuple[FiniteGroup, ...] = ()) -> FiniteGroup:
    """Validate a multiplication table exhaustively and build the group."""
    r = len(table)
    if r == 0:
        raise ValidationError("a group needs at least one element")
    rows = []
    for a, row in enumerate(table):
        if len(row) != r:
            raise ValidationError(f"row {a} has length {len(row)}, expected {r}")
        for b, c in enumerate(row):
            if not isinstance(c, int) or not 0 <= c < r:
                raise ValidationError(f"entry ({a},{b}) = {c!r} is out of range")
        rows.append(tuple(row))
    mult = tuple(rows)

    for a in range(r):
        if mult[0][a] != a or mult[a][0] != a:
            raise ValidationError(f"element 0 is not a two-sided identity (fails at {a})")
    inv = []
    for a in range(r):
        candidates = [b for b in range(r) if mult[a][b] == 0 and mult[b][a] == 0]
        if not candidates:
            raise ValidationError(f"element {a} has no two-sided inverse")
        inv.append(candidates[0])
    for a, b, c in product(range(r), repeat=3):
        if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
            raise ValidationError(f"table is not associative at triple ({a},{b},{c})")

    if labels is None:
        labels = [str(a) for a in range(r)]
        labels[0] = "e"
    if len(labels) != r or len(set(labels)) != r:
        raise ValidationError(f"labels {list(labels)} must be {r} distinct names")
    return FiniteGroup(mult=mult, labels=tuple(labels), inv=tuple(inv), factors=tuple(factors))


def _power_label(k: int) -> str:
    if k == 0:
        return "e"
    if k == 1:
        return "g"
    return f"g^{k}"


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValidationError(f"cyclic group order must be at least 1, got {n}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return make_from_table(table, [_power_label(k) for k in range(n)])


def direct_product(first: FiniteGroup, second: FiniteGroup) -> FiniteGroup:
    """G1 x G2 with element (a, b) at index a * |G2| + b."""
    n2 = second.order
    r = first.order * n2
    table = [[0] * r for _ in range(r)]
    for a1, b1, a2, b2 in product(range(first.order), range(n2), range(first.order), range(n2)):
        table[a1 * n2 + b1][a2 * n2 + b2] = first.mult[a1][a2] * n2 + second.mult[b1][b2]
    labels = [f"({x},{y})" for x in first.labels for y in second.labels]
    return make_from_table(table, labels, factors=(first, second))


def split_product_index(group: FiniteGroup, a: int) -> Tuple[int, int]:
    """Inverse of the direct-product indexing."""
    if len(group.factors) != 2:
        raise ValidationError("group was not built as a direct product")
    n2 = group.factors[1].order
    return a // n2, a % n2


def symmetric_group(n: int) -> FiniteGroup:
    """Sym(n) with permutations in lexicographic order; product is composition (p*q)(i) = p(q(i))."""
    perms = list(permutations(range(n)))
    position = {p: i for i, p in enumerate(perms)}
    table = [[position[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    labels = ["e"] + ["".join(str(i + 1) for i in p) for p in perms[1:]]
    return make_from_table(table, labels)


@dataclass(frozen=True)
class SubgroupEmbedding:
    """An injective homomorphism sub -> ambient."""

    sub: FiniteGroup
    ambient: FiniteGroup
    images: Tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.sub.order:
            raise ValidationError("embedding needs one image per subgroup element")
        if self.images[0] != 0:
            raise ValidationError("embedding must send the identity to the identity")
        if len(set(self.images)) != len(self.images):
            raise ValidationError(f"embedding images {list(self.images)} are not injective")
        for a, b in product(range(self.sub.order), repeat=2):
            if self.images[self.sub.mult[a][b]] != self.ambient.mult[self.images[a]][self.images[b]]:
                raise ValidationError(f"embedding does not respect the product at ({a},{b})")

    def image(self, h: int) -> int:
        return self.images[h]


def subgroup(ambient: FiniteGroup, elements: Sequence[int]) -> SubgroupEmbedding:
    """Subgroup on a closed subset, ordered with the identity first."""
    members = sorted(set(elements))
    if 0 not in members:
        raise ValidationError("a subgroup must contain the identity")
    position = {x: i for i, x in enumerate(members)}
    table = []
    for a in members:
        row = []
        for b in members:
            c = ambient.mult[a][b]
            if c not in position:
                raise ValidationError(f"subset {members} is not closed: {a}*{b} = {c}")
            row.append(position[c])
        table.append(row)
    sub = make_from_table(table, [ambient.labels[x] for x in members])
    return SubgroupEmbedding(sub=sub, ambient=ambient, images=tuple(members))


def trivial_subgroup(ambient: FiniteGroup) -> SubgroupEmbedding:
    return subgroup(ambient, [0])


# ============================================================================
# 2-COCYCLES
# ============================================================================

@dataclass(frozen=True)
class TwoCocycle:
    """Root-of-unity valued 2-cocycle on ``group``."""

    group: FiniteGroup
    m: int
    exponents: Tuple[Tuple[int, ...], ...]

    def exponent(self, a: int, b: int) -> int:
        return self.exponents[a][b] % self.m

    def value(self, a: int, b: int) -> Scalar:
        return root_of_unity(self.m, self.exponents[a][b])

    def get_snapshot(self):
        return {"m": self.m, "exponents": [list(r) for r in self.exponents]}


def make_cocycle(group: FiniteGroup, m: int, exponents: Sequence[Sequence[int]]) -> TwoCocycle:
    r = group.order
    if m < 1:
        raise ValidationError(f"cocycle order must be positive, got {m}")
    if len(exponents) != r or any(len(row) != r for row in exponents):
        raise ValidationError(f"cocycle table must be {r}x{r}")
    table = tuple(tuple(int(x) % m for x in row) for row in exponents)
    return TwoCocycle(group=group, m=m, exponents=table)


def trivial_cocycle(group: FiniteGroup) -> TwoCocycle:
    return make_cocycle(group, 1, [[0] * group.order for _ in range(group.order)])


def validate_cocycle(c: TwoCocycle) -> Optional[Violation]:
    """None when c is a normalized cocycle, else the first failing pair or triple."""
    G, m, e = c.group, c.m, c.exponents
    for h in range(G.order):
        if e[0][h] % m or e[h][0] % m:
            return Violation("normalization", (0, h), f"f(e,{h}) or f({h},e) is not 1")
    for a, b, x in product(range(G.order), repeat=3):
        lhs = e[a][b] + e[G.mult[a][b]][x]
        rhs = e[b][x] + e[a][G.mult[b][x]]
        if (lhs - rhs) % m:
            return Violation("cocycle", (a, b, x), "f(a,b)f(ab,c) != f(b,c)f(a,bc)")
    return None


def coboundary_twist(c: TwoCocycle, delta: Sequence[int]) -> TwoCocycle:
    """f'(a,b) = f(a,b) * delta(a) * delta(b) / delta(ab), delta given as exponents mod m.

    delta(e) must be trivial so that the twist stays normalized.
    """
    G = c.group
    if len(delta) != G.order:
        raise ValidationError("coboundary needs one exponent per group element")
    if delta[0] % c.m:
        raise ValidationError(f"coboundary must be trivial at e, got exponent {delta[0]}")
    table = [[c.exponents[a][b] + delta[a] + delta[b] - delta[G.mult[a][b]]
              for b in range(G.order)] for a in range(G.order)]
    return make_cocycle(G, c.m, table)


def lift_cocycle(c: TwoCocycle, order: int) -> TwoCocycle:
    """Same cocycle with values read in Q(zeta_order); order must be a multiple of c.m."""
    if order % c.m:
        raise ValidationError(f"cocycle of order {c.m} does not lift to order {order}")
    step = order // c.m
    return make_cocycle(c.group, order, [[x * step for x in row] for row in c.exponents])
