"""
COMMAND ORCHESTRATION
=====================

Loads a workspace from spec files, dispatches one command and turns its
result into a report payload plus an exit code: 0 on success, 2 when the
verdict is violated or separated, 1 on input errors.
"""

import json
from argparse import Namespace
from typing import Any, Callable, Dict, List, Optional, Tuple

from src.algebras.radical import radical
from src.config import config
from src.core.groups import validate_cocycle
from src.core.models import GradedPIError, Relation, SpecError
from src.identities.checks import (capelli_audit, property_k_check, random_matrices,
                                   transfer_check, verify_theorem_j, zr_audit)
from src.identities.evaluation import evaluate_generic, is_identity
from src.identities.spaces import identity_space, tideals_compare
from src.kemer.models import SearchParams
from src.kemer.products import kemer_set_product_check
from src.kemer.search import kemer_lower_bound, kemer_upper_bound
from src.kemer.witnesses import full_witness_simple
from src.logger import logger
from src import reporting
from src.workspace import Workspace

OK, INPUT_ERROR, VIOLATED = 0, 1, 2


class CommandRunner:
    """Runs one CLI command against a loaded workspace."""

    def __init__(self, workspace: Workspace, args: Namespace):
        self.ws = workspace
        self.args = args
        self.commands: Dict[str, Callable[[], Tuple[int, Dict[str, Any]]]] = {
            "validate": self._validate,
            "radical": self._radical,
            "gpar": self._gpar,
            "check": self._check,
            "kernel": self._kernel,
            "compare": self._compare,
            "capelli-audit": self._capelli_audit,
            "kemer": self._kemer,
            "witness-simple": self._witness_simple,
            "zr-audit": self._zr_audit,
            "theorem-j": self._theorem_j,
            "property-k": self._property_k,
            "transfer": self._transfer,
            "kemer-product": self._kemer_product,
        }

    def run(self, command: str) -> Tuple[int, Dict[str, Any]]:
        if command not in self.commands:
            raise SpecError(f"unknown command {command!r}")
        logger.info(f"🚀 running {command}")
        code, payload = self.commands[command]()
        logger.info(f"✅ {command} finished with exit code {code}")
        return code, payload

    # ----------------------------------------------------------------- helpers

    def _algebra_names(self) -> List[str]:
        return list(self.args.algebra or [])

    def _algebra(self, require_valid: bool = True):
        names = self._algebra_names()
        return self.ws.get_algebra(names[0] if names else None, require_valid)

    def _params(self) -> SearchParams:
        return SearchParams(
            nu=self.args.nu if self.args.nu is not None else config.get("search", "nu", 1),
            border_budget=self.args.border_budget,
            node_budget=self.args.budget,
            workers=config.workers(self.args.workers),
        )

    def _max_degree(self, default: int) -> int:
        return self.args.max_degree if self.args.max_degree is not None else default

    def _ids(self, text: Optional[str]) -> List[int]:
        if not text:
            return []
        try:
            return [int(x) for x in text.split(",") if x.strip()]
        except ValueError as exc:
            raise SpecError(f"expected comma-separated variable ids, got {text!r}") from exc

    # ---------------------------------------------------------------- commands

    def _validate(self):
        names = self._algebra_names() or list(self.ws.algebras)
        algebras = {}
        for name in names:
            A = self.ws.get_algebra(name, require_valid=False)
            v = self.ws.invalid.get(name)
            algebras[name] = {
                "valid": v is None,
                "violation": None if v is None else v.get_snapshot(),
                "dim": A.dim,
                "component_dims": reporting.by_degree(A.group, A.component_dims()),
                "provenance": A.provenance.get("kind"),
            }
        cocycles = {}
        for name, c in self.ws.cocycles.items():
            v = validate_cocycle(c)
            cocycles[name] = {"valid": v is None, "violation": None if v is None else v.get_snapshot()}
        bad = any(not a["valid"] for a in algebras.values()) or any(not c["valid"] for c in cocycles.values())
        return (VIOLATED if bad else OK), {"algebras": algebras, "cocycles": cocycles}

    def _radical(self):
        A = self._algebra()
        rad = radical(A)
        return OK, {"algebra": A.name, "radical": {
            "dim": rad.dim,
            "basis": [reporting.vector(A, v) for v in rad.basis],
            "components": {A.group.label(g): [reporting.vector(A, v) for v in vs]
                           for g, vs in rad.components.items()},
            "nilpotency_index": rad.nilpotency_index,
            "d": reporting.by_degree(A.group, rad.d),
            "adapted_basis": [{"vector": reporting.vector(A, a.vector), "degree": A.group.label(a.degree),
                               "radical": a.radical} for a in rad.adapted_basis],
        }}

    def _gpar(self):
        A = self._algebra()
        p = kemer_upper_bound(A)
        return OK, {"algebra": A.name, "gpar": {"d": reporting.by_degree(A.group, p.alpha), "s": p.s}}

    def _check(self):
        A = self._algebra()
        f = self.ws.get_polynomial(self.args.poly, A)
        res = is_identity(f, A, alternating=self._ids(self.args.alternating), budget=self.args.budget)
        payload = {
            "algebra": A.name,
            "polynomial": reporting.polynomial(f, A.group),
            "verdict": res.holds,
            "vacuous": res.vacuous,
            "method": res.method,
            "witness": reporting.assignment(A, res.witness),
            "value": reporting.vector(A, res.value) if res.value else None,
            "checked": res.checked,
            "budget_exhausted": not res.complete,
        }
        if res.method == "generic" and not res.holds:
            payload["generic_value"] = reporting.generic_vector(A, evaluate_generic(f, A).value)
        return (OK if res.holds else VIOLATED), payload

    def _kernel(self):
        A = self._algebra()
        if not self.args.profile:
            raise SpecError("kernel needs --profile")
        profile = [self.ws.element(A.group, x.strip(), "--profile") for x in self.args.profile.split(",")]
        space = identity_space(A, profile)
        return OK, {
            "algebra": A.name,
            "profile": [A.group.label(g) for g in profile],
            "words": len(space.words),
            "kernel_dim": space.dimension,
            "vacuous": space.vacuous,
            "basis": [reporting.polynomial(f, A.group) for f in space.polynomials()],
        }

    def _compare(self):
        names = self._algebra_names()
        if len(names) != 2:
            raise SpecError("compare needs exactly two --algebra flags")
        A, B = (self.ws.get_algebra(n) for n in names)
        cmp = tideals_compare(A, B, self._max_degree(3))
        payload = {
            "algebras": names,
            "relation": cmp.relation.value,
            "max_degree": cmp.max_degree,
            "profiles_checked": cmp.profiles_checked,
            "profile": None if cmp.profile is None else [A.group.label(g) for g in cmp.profile],
            "witness": reporting.polynomial(cmp.witness, A.group),
            "witness_holds_in": cmp.witness_holds_in or None,
            "per_profile": [{"profile": [A.group.label(g) for g in p], "relation": r.value}
                            for p, r in cmp.per_profile],
        }
        return (OK if cmp.relation == Relation.EQUAL else VIOLATED), payload

    def _capelli_audit(self):
        A = self._algebra()
        entries = capelli_audit(A, max_degree=self.args.max_degree, max_assignments=self.args.budget)
        G = A.group
        report = []
        for e in entries:
            report.append({
                "degree": G.label(e.degree),
                "dim": e.dimension,
                "identity_half": [{"y_degrees": [G.label(y) for y in p.y_degrees], "holds": p.holds,
                                   "vacuous": p.vacuous} for p in e.identity_patterns],
                "beyond_cap": e.beyond_cap,
                "refused": e.refused or None,
                "non_identity_half": {
                    "found": e.witness is not None,
                    "y_degrees": None if e.witness_pattern is None else [G.label(y) for y in e.witness_pattern],
                    "witness": reporting.assignment(A, e.witness),
                    "value": reporting.vector(A, e.witness_value) if e.witness_value else None,
                    "checked": e.checked,
                    "budget_exhausted": e.exhausted,
                },
            })
        violated = any(e.violated for e in entries)
        return (VIOLATED if violated else OK), {"algebra": A.name, "entries": report, "violated": violated}

    def _kemer(self):
        A = self._algebra()
        params = self._params()
        low = kemer_lower_bound(A, params)
        lower = reporting.lower_bound(A, low)
        return OK, {
            "algebra": A.name,
            "params": params.get_snapshot(),
            "upper": reporting.point(kemer_upper_bound(A), A.group),
            "lower": lower,
            "witnesses": lower.pop("witnesses"),
            "certified_refutations": lower.pop("certified_refutations"),
            "budget_exhausted": low.budget_exhausted,
        }

    def _witness_simple(self):
        A = self._algebra()
        nu = self.args.nu if self.args.nu is not None else config.get("search", "nu", 1)
        w = full_witness_simple(A, nu)
        return OK, {
            "algebra": A.name,
            "nu": w.nu,
            "alpha": reporting.by_degree(A.group, w.alpha),
            "tour": [f"E{i + 1}{j + 1}" for i, j in w.tour],
            "correcting": w.correcting,
            "polynomial": reporting.polynomial(w.polynomial, A.group),
            "assignment": reporting.assignment(A, w.assignment),
            "sets": w.sets,
            "value": reporting.vector(A, w.value),
        }

    def _zr_audit(self):
        A = self._algebra()
        explicit = [self.ws.get_polynomial(self.args.poly, A)] if self.args.poly else None
        audit = zr_audit(A, self.args.n or 1, family=self.args.family or "plain", borders=self.args.borders,
                         polynomials=explicit)
        G = A.group

        def entry(v):
            return {"f": reporting.polynomial(v.f, G), "tilde": reporting.polynomial(v.tilde, G),
                    "obstruction": reporting.polynomial(v.obstruction, G)}

        payload = {
            "algebra": A.name,
            "n": audit.n,
            "family": audit.family,
            "borders": audit.borders,
            "polynomials": audit.polynomials,
            "premise_hits": audit.premise_hits,
            "nonvacuous_hits": audit.nonvacuous_hits,
            "violations": [entry(v) for v in audit.violations],
            "formal_premises": audit.formal_premises,
            "formal_failures": [entry(v) for v in audit.formal_failures],
        }
        return (VIOLATED if audit.violations else OK), payload

    def _theorem_j(self):
        A = self._algebra()
        f = self.ws.get_polynomial(self.args.poly, A)
        alternating = self._ids(self.args.alternating)
        if not alternating:
            raise SpecError("theorem-j needs --alternating")
        asg = self._frame_assignment(A, f, alternating)
        trials = self.args.trials if self.args.trials is not None else config.get("theorem_j", "trials", 20)
        seed = self.args.seed if self.args.seed is not None else config.get("theorem_j", "seed", 0)
        results = []
        for T in random_matrices(len(alternating), trials, seed):
            res = verify_theorem_j(A, f, alternating, asg, T)
            results.append({"T": T, "trace": res.trace, "holds": res.holds,
                            "lhs": reporting.vector(A, res.lhs), "rhs": reporting.vector(A, res.rhs)})
        failures = sum(1 for r in results if not r["holds"])
        return (VIOLATED if failures else OK), {
            "algebra": A.name, "assignment": reporting.assignment(A, asg), "alternating": alternating,
            "seed": seed, "trials": results, "failures": failures}

    def _frame_assignment(self, A, f, alternating: List[int]) -> Dict[int, int]:
        """Alternating variables take the first basis elements of their degree, others the first one."""
        asg: Dict[int, int] = {}
        for item in self.args.assign or []:
            var, _, label = item.partition("=")
            if label not in A.labels:
                raise SpecError(f"--assign {item!r}: unknown basis label")
            asg[int(var)] = A.labels.index(label)
        used = 0
        for x in alternating:
            if x in asg:
                continue
            comp = A.component(f.degree_of(x))
            if used >= len(comp):
                raise SpecError(f"degree of variable {x} has only {len(comp)} basis elements")
            asg[x] = comp[used]
            used += 1
        for x in f.ids:
            if x not in asg:
                comp = A.component(f.degree_of(x))
                if not comp:
                    raise SpecError(f"variable {x} has an unrealizable degree")
                asg[x] = comp[0]
        return asg

    def _property_k(self):
        A = self._algebra()
        f = self.ws.get_polynomial(self.args.poly, A)
        res = property_k_check(f, A)
        return (OK if res.holds else VIOLATED), {
            "algebra": A.name, "polynomial": reporting.polynomial(f, A.group), "holds": res.holds,
            "reason": res.reason, "nilpotency_index": res.nilpotency_index,
            "witness": reporting.assignment(A, res.witness),
            "value": reporting.vector(A, res.value) if res.value else None, "checked": res.checked}

    def _transfer(self):
        A = self._algebra()
        if not self.args.group:
            raise SpecError("transfer needs --group")
        G = self.ws.group(self.args.group)
        res = transfer_check(A, G, self._max_degree(3))
        return (VIOLATED if res.failures else OK), {
            "algebra": A.name, "group": self.args.group, "max_degree": res.max_degree,
            "identities": res.identities, "lifts_checked": res.checked, "skipped": res.skipped,
            "failures": [{"polynomial": reporting.polynomial(f, G), "degrees": [G.label(g) for g in d]}
                         for f, d in res.failures]}

    def _kemer_product(self):
        names = self._algebra_names()
        if not names:
            raise SpecError("kemer-product needs --algebra flags")
        factors = [self.ws.get_algebra(n) for n in names]
        check = kemer_set_product_check(factors, self._params())
        G = factors[0].group
        return (OK if check.passes else VIOLATED), {
            "factors": names,
            "product": {"upper": reporting.point(check.product_upper, G),
                        "lower": reporting.lower_bound(check.product, check.product_lower)},
            "factor_results": [{"algebra": n, "upper": reporting.point(u, G),
                                "maximal": [reporting.point(p, G) for p in low.maximal]}
                               for n, u, low in zip(names, check.factor_uppers, check.factor_lowers)],
            "maximal_factor_points": [reporting.point(p, G) for p in check.maximal_factor_points],
            "dominated_factor_points": [reporting.point(p, G) for p in check.dominated_factor_points],
            "passes": check.passes,
            "budget_exhausted": check.budget_exhausted,
        }


def run(command: str, args: Namespace) -> Tuple[int, Dict[str, Any]]:
    """Load the specs, run the command and wrap the result in a canonical report."""
    paths = list(args.spec or [])
    digest = None
    try:
        digest = reporting.input_digest(paths)
        ws = Workspace.from_files(paths)
        code, payload = CommandRunner(ws, args).run(command)
    except (GradedPIError, OSError, json.JSONDecodeError) as exc:
        logger.error(f"❌ {command} failed: {exc}")
        return INPUT_ERROR, reporting.error_report(command, digest, exc)
    return code, reporting.envelope(command, digest, payload)
