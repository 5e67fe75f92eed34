"""
EXACT SCALARS
=============

Rationals are plain ``fractions.Fraction`` values. Elements of Q(zeta_m) are
``CycScalar`` values kept reduced modulo the m-th cyclotomic polynomial; any
result that lands back in Q is demoted to a ``Fraction`` so that equality is
syntactic equality.

``SparsePoly`` is a commutative polynomial in a fixed number of indeterminates
with scalar coefficients, used by the generic-element identity oracle.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple, Union

import sympy

from src.core.models import ScalarError, SpecError

_x = sympy.Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, constant term first."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    poly = sympy.Poly(sympy.cyclotomic_poly(m, _x), _x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _phi_degree(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


def _reduce(order: int, coeffs: List[Fraction]) -> List[Fraction]:
    phi = cyclotomic_polynomial(order)
    d = len(phi) - 1
    r = list(coeffs)
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            for j in range(d):
                r[i - d + j] -= c * phi[j]
        r[i] = Fraction(0)
    r = r[:d]
    r.extend([Fraction(0)] * (d - len(r)))
    return r


def _make(order: int, coeffs: Iterable) -> "Scalar":
    coeffs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
    d = _phi_degree(order)
    if len(coeffs) > d:
        coeffs = _reduce(order, coeffs)
    else:
        coeffs.extend([Fraction(0)] * (d - len(coeffs)))
    if not any(coeffs[1:]):
        return coeffs[0] if coeffs else Fraction(0)
    return CycScalar(order, tuple(coeffs))


class CycScalar:
    """A non-rational element of Q(zeta_m), coefficients over 1, x, ..., x^(d-1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Tuple[Fraction, ...]):
        if len(coeffs) != _phi_degree(order):
            raise ScalarError(
                f"order {order} needs {_phi_degree(order)} coefficients, got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs

    def _peer(self, other) -> List[Fraction]:
        if isinstance(other, CycScalar):
            if other.order != self.order:
                raise ScalarError(
                    f"cyclotomic orders differ ({self.order} vs {other.order}); embed first"
                )
            return list(other.coeffs)
        if isinstance(other, (int, Fraction)):
            return [Fraction(other)] + [Fraction(0)] * (len(self.coeffs) - 1)
        return None

    def __add__(self, other):
        peer = self._peer(other)
        if peer is None:
            return NotImplemented
        return _make(self.order, [a + b for a, b in zip(self.coeffs, peer)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        peer = self._peer(other)
        if peer is None:
            return NotImplemented
        return _make(self.order, [a - b for a, b in zip(self.coeffs, peer)])

    def __rsub__(self, other):
        peer = self._peer(other)
        if peer is None:
            return NotImplemented
        return _make(self.order, [b - a for a, b in zip(self.coeffs, peer)])

    def __mul__(self, other):
        peer = self._peer(other)
        if peer is None:
            return NotImplemented
        product = [Fraction(0)] * (len(self.coeffs) + len(peer) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(peer):
                    if b:
                        product[i + j] += a * b
        return _make(self.order, product)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if self._peer(other) is None:
            return NotImplemented
        return self * inverse(other)

    def __rtruediv__(self, other):
        if self._peer(other) is None:
            return NotImplemented
        return inverse(self) * other

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return self.order == other.order and self.coeffs == other.coeffs
        return False

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"CycScalar({self.order}, {[str(c) for c in self.coeffs]})"


Scalar = Union[Fraction, CycScalar]


def as_scalar(value) -> Scalar:
    if isinstance(value, (Fraction, CycScalar)):
        return value
    return Fraction(value)


@lru_cache(maxsize=None)
def root_of_unity(m: int, exponent: int = 1) -> Scalar:
    """zeta_m ** exponent, demoted to a Fraction when it is +1 or -1."""
    e = exponent % m
    coeffs = [Fraction(0)] * (e + 1)
    coeffs[e] = Fraction(1)
    return _make(m, coeffs)


def inverse(a: Scalar) -> Scalar:
    if isinstance(a, CycScalar):
        phi = sympy.Poly(list(reversed(cyclotomic_polynomial(a.order))), _x, domain=sympy.QQ)
        p = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(a.coeffs)],
                       _x, domain=sympy.QQ)
        inv = p.invert(phi)
        coeffs = [Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q))
                  for c in reversed(inv.all_coeffs())]
        return _make(a.order, coeffs)
    a = as_scalar(a)
    if a == 0:
        raise ScalarError("inversion of zero")
    return 1 / a


def embed(a: Scalar, order: int) -> Scalar:
    """Lift a from Q(zeta_k) into Q(zeta_order), sending zeta_k to zeta_order^(order/k)."""
    if not isinstance(a, CycScalar):
        return as_scalar(a)
    if order % a.order:
        raise ScalarError(f"cannot embed order {a.order} into order {order}")
    step = order // a.order
    total: Scalar = Fraction(0)
    for i, c in enumerate(a.coeffs):
        if c:
            total = total + c * root_of_unity(order, i * step)
    return total


def scalar_order(a: Scalar) -> int:
    """Cyclotomic order a lives in; 1 for rationals."""
    return a.order if isinstance(a, CycScalar) else 1


def scalar_arith(a: Scalar, b: Scalar = None, op: str = "add"):
    """Dispatch one field operation; ``inv`` and ``neg`` ignore b."""
    if op == "add":
        return as_scalar(a) + as_scalar(b)
    if op == "mul":
        return as_scalar(a) * as_scalar(b)
    if op == "inv":
        return inverse(a)
    if op == "neg":
        return -as_scalar(a)
    if op == "eq":
        return as_scalar(a) == as_scalar(b)
    raise ValueError(f"unknown scalar operation {op!r}")


def format_scalar(a: Scalar):
    if isinstance(a, CycScalar):
        return {"order": str(a.order), "coeffs": [format_scalar(c) for c in a.coeffs]}
    a = as_scalar(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def parse_scalar(obj) -> Scalar:
    try:
        if isinstance(obj, dict):
            return _make(int(obj["order"]), [Fraction(str(c)) for c in obj["coeffs"]])
        if isinstance(obj, float):
            raise SpecError(f"floating-point scalar {obj!r} is not exact")
        return Fraction(str(obj))
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise SpecError(f"malformed scalar {obj!r}: {exc}") from exc


# ============================================================================
# SPARSE COMMUTATIVE POLYNOMIALS
# ============================================================================

Exponents = Tuple[int, ...]


class SparsePoly:
    """Polynomial in ``nvars`` commuting indeterminates; zero terms are never stored."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Exponents, Scalar] = None):
        self.nvars = nvars
        self.terms: Dict[Exponents, Scalar] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} does not have length {nvars}")
            if c:
                self.terms[tuple(exps)] = as_scalar(c)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePoly":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def constant(cls, nvars: int, value) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: value})

    def _lift(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable counts differ ({self.nvars} vs {other.nvars})")
            return other
        if isinstance(other, (int, Fraction, CycScalar)):
            return SparsePoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        result = SparsePoly(self.nvars)
        result.terms = terms
        return result

    __radd__ = __add__

    def __neg__(self):
        result = SparsePoly(self.nvars)
        result.terms = {e: -c for e, c in self.terms.items()}
        return result

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            result = SparsePoly(self.nvars)
            if other:
                result.terms = {e: c * other for e, c in self.terms.items()}
            return result
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms: Dict[Exponents, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(exps, 0) + c1 * c2
                if s:
                    terms[exps] = s
                else:
                    terms.pop(exps, None)
        result = SparsePoly(self.nvars)
        result.terms = terms
        return result

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return False
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self) -> List[Tuple[Exponents, Scalar]]:
        """Terms in graded lexicographic order of exponent vectors."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {dict(self.sorted_terms())})"


def poly_arith(p: SparsePoly, q: SparsePoly, op: str) -> SparsePoly:
    if p.nvars != q.nvars:
        raise ValueError(f"variable counts differ ({p.nvars} vs {q.nvars})")
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")
