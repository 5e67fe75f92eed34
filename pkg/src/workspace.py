"""
WORKSPACE
=========

Named groups, cocycles, algebras and polynomials loaded from JSON spec files.
A file may define any number of objects under the keys ``groups``,
``cocycles``, ``algebras`` and ``polynomials``; later files may refer to names
from earlier ones. Objects are built in dependency order and validated on
load. Every cyclotomic value is read in one session order, the lcm of the
declared cocycle orders, so scalars from different cocycles always combine.
"""

import json
from math import lcm
from typing import Any, Dict, List, Optional, Sequence

from src.algebras import constructors
from src.algebras.models import GradedAlgebra
from src.core.groups import (FiniteGroup, TwoCocycle, direct_product, lift_cocycle, make_cocycle,
                             make_cyclic, make_from_table, subgroup, symmetric_group, trivial_cocycle)
from src.core.models import SpecError, ValidationError, Violation
from src.core.scalars import Scalar, embed, parse_scalar
from src.logger import logger
from src.polynomials.models import GradedPolynomial, VarSpec
from src.polynomials.operators import capelli, standard

SECTIONS = ("groups", "cocycles", "algebras", "polynomials")


class Workspace:
    """Resolution by name of every object defined across the loaded spec files."""

    def __init__(self):
        self.raw: Dict[str, Dict[str, Any]] = {s: {} for s in SECTIONS}
        self.groups: Dict[str, FiniteGroup] = {}
        self.cocycles: Dict[str, TwoCocycle] = {}
        self.algebras: Dict[str, GradedAlgebra] = {}
        self.polynomials: Dict[str, GradedPolynomial] = {}
        self.polynomial_groups: Dict[str, FiniteGroup] = {}
        self.invalid: Dict[str, Violation] = {}
        self.order = 1
        self._building: List[str] = []

    # ------------------------------------------------------------------ loading

    @classmethod
    def from_files(cls, paths: Sequence[str]) -> "Workspace":
        ws = cls()
        for path in paths:
            with open(path, "r", encoding="utf-8") as f:
                try:
                    data = json.load(f)
                except json.JSONDecodeError as exc:
                    raise SpecError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
            ws.add(data, source=path)
        ws.build()
        return ws

    def add(self, data: Dict[str, Any], source: str = "<spec>"):
        if not isinstance(data, dict):
            raise SpecError(f"{source}: top level must be an object")
        unknown = set(data) - set(SECTIONS)
        if unknown:
            raise SpecError(f"{source}: unknown sections {sorted(unknown)}")
        for section in SECTIONS:
            for name, body in data.get(section, {}).items():
                if any(name in self.raw[s] for s in SECTIONS):
                    raise SpecError(f"{source}: name {name!r} is defined twice")
                if not isinstance(body, dict):
                    raise SpecError(f"{source}: {section}.{name} must be an object")
                self.raw[section][name] = body

    def build(self):
        self.order = self.session_order()
        if self.order > 1:
            logger.info(f"🔢 cyclotomic order of the session: {self.order}")
        for name in self.raw["groups"]:
            self.group(name)
        for name in self.raw["cocycles"]:
            self.cocycle(name)
        for name in self.raw["algebras"]:
            self.algebra(name)
        for name in self.raw["polynomials"]:
            self.polynomial(name)
        logger.info(f"📦 workspace: {len(self.groups)} groups, {len(self.algebras)} algebras, "
                    f"{len(self.polynomials)} polynomials, {len(self.invalid)} invalid")

    def session_order(self) -> int:
        """lcm of the declared cocycle orders and of every cyclotomic scalar in the specs."""
        order = 1
        for name, body in self.raw["cocycles"].items():
            order = lcm(order, self._order_of(body.get("m", 1), f"cocycles.{name}"))
        stack = [self.raw["algebras"], self.raw["polynomials"]]
        while stack:
            node = stack.pop()
            if isinstance(node, dict):
                if "order" in node and "coeffs" in node:
                    order = lcm(order, self._order_of(node["order"], "scalar"))
                stack.extend(node.values())
            elif isinstance(node, list):
                stack.extend(node)
        return order

    def _order_of(self, value, where: str) -> int:
        try:
            m = int(value)
        except (TypeError, ValueError) as exc:
            raise SpecError(f"{where}: cyclotomic order {value!r} is not an integer") from exc
        if m < 1:
            raise SpecError(f"{where}: cyclotomic order must be positive, got {m}")
        return m

    def _scalar(self, obj) -> Scalar:
        return embed(parse_scalar(obj), self.order)

    def _enter(self, name: str):
        if name in self._building:
            raise SpecError(f"circular reference through {name!r}")
        self._building.append(name)

    def _field(self, body: Dict[str, Any], key: str, where: str):
        if key not in body:
            raise SpecError(f"{where}: missing field {key!r}")
        return body[key]

    # ------------------------------------------------------------------ groups

    def group(self, name: str) -> FiniteGroup:
        if name in self.groups:
            return self.groups[name]
        if name not in self.raw["groups"]:
            raise SpecError(f"unknown group {name!r}")
        body = self.raw["groups"][name]
        where = f"groups.{name}"
        self._enter(name)
        try:
            if "cyclic" in body:
                G = make_cyclic(int(body["cyclic"]))
            elif "table" in body:
                G = make_from_table(body["table"], body.get("labels"))
            elif "product" in body:
                first, second = body["product"]
                G = direct_product(self.group(first), self.group(second))
            elif "symmetric" in body:
                G = symmetric_group(int(body["symmetric"]))
            else:
                raise SpecError(f"{where}: expected one of cyclic, table, product, symmetric")
        except ValidationError as exc:
            raise SpecError(f"{where}: {exc}") from exc
        finally:
            self._building.remove(name)
        self.groups[name] = G
        return G

    def element(self, G: FiniteGroup, label, where: str) -> int:
        try:
            return G.index(label)
        except ValidationError as exc:
            raise SpecError(f"{where}: {exc}") from exc

    def elements(self, G: FiniteGroup, labels, where: str) -> List[int]:
        return [self.element(G, x, where) for x in labels]

    # ---------------------------------------------------------------- cocycles

    def cocycle(self, name: str) -> TwoCocycle:
        if name in self.cocycles:
            return self.cocycles[name]
        if name not in self.raw["cocycles"]:
            raise SpecError(f"unknown cocycle {name!r}")
        body = self.raw["cocycles"][name]
        where = f"cocycles.{name}"
        G = self.group(self._field(body, "group", where))
        try:
            c = make_cocycle(G, int(self._field(body, "m", where)), self._field(body, "exponents", where))
            c = lift_cocycle(c, self.order)
        except ValidationError as exc:
            raise SpecError(f"{where}: {exc}") from exc
        self.cocycles[name] = c
        return c

    # ---------------------------------------------------------------- algebras

    def algebra(self, name: str) -> GradedAlgebra:
        if name in self.algebras:
            return self.algebras[name]
        if name not in self.raw["algebras"]:
            raise SpecError(f"unknown algebra {name!r}")
        body = self.raw["algebras"][name]
        where = f"algebras.{name}"
        self._enter(name)
        try:
            A = self._build_algebra(body, where)
        except ValidationError as exc:
            raise SpecError(f"{where}: {exc}") from exc
        finally:
            self._building.remove(name)
        A.name = name
        violation = A.validate()
        if violation is not None:
            logger.warning(f"⚠️ algebra {name} fails validation: {violation.kind} at {violation.location}")
            self.invalid[name] = violation
        self.algebras[name] = A
        return A

    def _build_algebra(self, body: Dict[str, Any], where: str) -> GradedAlgebra:
        kind = self._field(body, "kind", where)
        if kind == "explicit":
            return self._explicit(body, where)
        if kind in ("bsz", "matrix", "ut"):
            G = self.group(self._field(body, "group", where))
            elements = self.elements(G, self._field(body, "tuple", where), where)
            if kind == "matrix":
                return constructors.matrix_algebra(G, elements)
            if kind == "ut":
                return constructors.upper_triangular(G, elements)
            H = subgroup(G, self.elements(G, body.get("subgroup") or [0], where))
            c = self.cocycle(body["cocycle"]) if body.get("cocycle") else trivial_cocycle(H.sub)
            return constructors.bsz_simple(G, H, c, elements)
        if kind == "twisted":
            G = self.group(self._field(body, "group", where))
            c = self.cocycle(body["cocycle"]) if body.get("cocycle") else None
            return constructors.twisted_group_algebra(G, c)
        if kind == "field":
            return constructors.field_algebra(self.group(self._field(body, "group", where)))
        if kind == "grassmann":
            return constructors.grassmann(int(self._field(body, "N", where)))
        if kind == "envelope":
            inner = self.algebra(self._field(body, "algebra", where))
            return constructors.grassmann_envelope(inner, int(self._field(body, "N", where)))
        if kind == "superalgebra":
            inner = self.algebra(self._field(body, "algebra", where))
            ZG = self.group(self._field(body, "group", where))
            return constructors.as_superalgebra(inner, [int(p) for p in self._field(body, "parity", where)], ZG)
        if kind == "regrade":
            inner = self.algebra(self._field(body, "algebra", where))
            G = self.group(self._field(body, "group", where))
            degrees = self.elements(G, self._field(body, "deg", where), where)
            if len(degrees) != inner.dim:
                raise SpecError(f"{where}: need {inner.dim} degrees, got {len(degrees)}")
            return inner.regraded(G, lambda i: degrees[i])
        if kind == "tensor_fg":
            inner = self.algebra(self._field(body, "algebra", where))
            return constructors.group_algebra_grading(inner, self.group(self._field(body, "group", where)))
        if kind == "product":
            factors = [self.algebra(n) for n in self._field(body, "factors", where)]
            if not factors:
                raise SpecError(f"{where}: a product needs factors")
            A = factors[0]
            for F in factors[1:]:
                A = constructors.direct_product(A, F)
            return A
        raise SpecError(f"{where}: unknown algebra kind {kind!r}")

    def _explicit(self, body: Dict[str, Any], where: str) -> GradedAlgebra:
        G = self.group(self._field(body, "group", where))
        deg = self.elements(G, self._field(body, "deg", where), where)
        labels = body.get("labels")
        structure = {}
        for entry in self._field(body, "sc", where):
            try:
                i, j = int(entry["i"]), int(entry["j"])
                terms = [(int(t["k"]), self._scalar(t["coeff"])) for t in entry["terms"]]
            except (KeyError, TypeError, ValueError) as exc:
                raise SpecError(f"{where}: malformed structure constant {entry!r}") from exc
            if (i, j) in structure:
                raise SpecError(f"{where}: product ({i},{j}) given twice")
            structure[(i, j)] = terms
        unit = None
        if body.get("unit") is not None:
            unit = {int(k): self._scalar(c) for k, c in body["unit"].items()}
        return GradedAlgebra(G, deg, structure, unit=unit, labels=labels,
                             provenance={"kind": "explicit"})

    # ------------------------------------------------------------- polynomials

    def polynomial(self, name: str) -> GradedPolynomial:
        if name in self.polynomials:
            return self.polynomials[name]
        if name not in self.raw["polynomials"]:
            raise SpecError(f"unknown polynomial {name!r}")
        body = self.raw["polynomials"][name]
        where = f"polynomials.{name}"
        G = self.group(self._field(body, "group", where))
        try:
            if "capelli" in body:
                spec = body["capelli"]
                f = capelli(int(self._field(spec, "n", where)),
                            self.element(G, spec.get("degree", 0), where),
                            self.elements(G, self._field(spec, "y_degrees", where), where))
            elif "standard" in body:
                spec = body["standard"]
                f = standard(int(self._field(spec, "n", where)), self.element(G, spec.get("degree", 0), where))
            else:
                alphabet = [VarSpec(int(v["id"]), self.element(G, v["degree"], where))
                            for v in self._field(body, "alphabet", where)]
                terms = {}
                for t in self._field(body, "terms", where):
                    word = tuple(int(x) for x in t["word"])
                    if word in terms:
                        raise SpecError(f"{where}: word {list(word)} given twice")
                    terms[word] = self._scalar(t["coeff"])
                f = GradedPolynomial(alphabet, terms)
        except (KeyError, TypeError) as exc:
            raise SpecError(f"{where}: malformed polynomial ({exc})") from exc
        except ValidationError as exc:
            raise SpecError(f"{where}: {exc}") from exc
        self.polynomials[name] = f
        self.polynomial_groups[name] = G
        return f

    # ----------------------------------------------------------------- lookups

    def get_algebra(self, name: Optional[str], require_valid: bool = True) -> GradedAlgebra:
        if not name:
            raise SpecError("an --algebra name is required")
        A = self.algebra(name)
        if require_valid and name in self.invalid:
            v = self.invalid[name]
            raise ValidationError(f"algebra {name} is invalid: {v.kind} at {list(v.location)} ({v.detail})")
        return A

    def get_polynomial(self, name: Optional[str], algebra: Optional[GradedAlgebra] = None) -> GradedPolynomial:
        """The named polynomial; with an algebra, its grading group must be the algebra's."""
        if not name:
            raise SpecError("a --poly name is required")
        f = self.polynomial(name)
        if algebra is not None and self.polynomial_groups[name].mult != algebra.group.mult:
            raise ValidationError(f"polynomial {name} is graded by a group of order "
                                  f"{self.polynomial_groups[name].order}, algebra {algebra.name or algebra!r} "
                                  f"by one of order {algebra.group.order}")
        return f
