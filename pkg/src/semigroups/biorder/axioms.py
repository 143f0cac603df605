"""
Exhaustive verification of the biordered set axioms (B1)-(B5) and the
regularity axiom (R).

Failures are data: each axiom reports pass/fail with the first witness
tuple found in lexicographic order.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..errors import NotRegularBiorder
from .biordered_set import BiorderedSet
from .sandwich import greatest_sandwich

logger = logging.getLogger(__name__)

AXIOMS = ("B1", "B2", "B3", "B4", "B5", "R")


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: Optional[tuple] = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "witness": list(self.witness) if self.witness is not None else None,
            "detail": self.detail,
        }


@dataclass
class AxiomReport:
    results: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> AxiomResult:
        return self.results[name]

    @property
    def biordered(self) -> bool:
        """(B1)-(B5) all hold."""
        return all(self.results[name].passed for name in AXIOMS[:-1])

    @property
    def regular(self) -> bool:
        return self.biordered and self.results["R"].passed

    def failures(self) -> list[AxiomResult]:
        return [result for result in self.results.values() if not result.passed]

    def to_dict(self) -> dict:
        return {name: result.to_dict() for name, result in self.results.items()}


class _Checker:
    """Walks the quantified tuples of each axiom, stopping at the first failure."""

    def __init__(self, E: BiorderedSet):
        self.E = E
        self.m = E.size
        self.p = E._prod

    def b1(self):
        bad = np.argwhere(self.E.defined != self.E.basic_domain())
        if bad.size:
            e, f = (int(v) for v in bad[0])
            state = "defined" if self.E.defined[e, f] else "undefined"
            return (e, f), f"product {state} outside the (B1) domain"
        return None

    def b2(self):
        E, p = self.E, self.p
        for e, f in itertools.product(range(self.m), repeat=2):
            if E.omega_l[f, e]:
                ef = p[e][f]
                if ef is None or not (E.L[f, ef] and E.omega[ef, e]):
                    return (e, f), "f ω^l e but not f L ef ω e"
            if E.omega_r[f, e]:
                fe = p[f][e]
                if fe is None or not (E.R[f, fe] and E.omega[fe, e]):
                    return (e, f), "f ω^r e but not f R fe ω e"
        return None

    def b3(self):
        E, p = self.E, self.p
        for e, f, g in itertools.product(range(self.m), repeat=3):
            if E.omega_r[g, f] and E.omega_l[f, e] and E.omega_l[g, e]:
                eg, ef, gf = p[e][g], p[e][f], p[g][f]
                if None in (eg, ef, gf) or not (E.omega_r[eg, ef] and E.omega_l[gf, e]):
                    return (e, f, g), "left half: eg ω^r ef or gf ω^l e fails"
                if p[e][gf] is None or p[eg][ef] is None or p[e][gf] != p[eg][ef]:
                    return (e, f, g), "left half: e(gf) != (eg)(ef)"
            if E.omega_l[g, f] and E.omega_r[f, e] and E.omega_r[g, e]:
                ge, fe, fg = p[g][e], p[f][e], p[f][g]
                if None in (ge, fe, fg) or not (E.omega_l[ge, fe] and E.omega_r[fg, e]):
                    return (e, f, g), "right half: ge ω^l fe or fg ω^r e fails"
                if p[fg][e] is None or p[fe][ge] is None or p[fg][e] != p[fe][ge]:
                    return (e, f, g), "right half: (fg)e != (fe)(ge)"
        return None

    def b4(self):
        E, p = self.E, self.p
        for e, f, g in itertools.product(range(self.m), repeat=3):
            if E.omega_l[g, f] and E.omega_l[f, e]:
                eg = p[e][g]
                if eg is None or p[f][eg] is None or p[f][g] != p[f][eg]:
                    return (e, f, g), "fg != f(eg)"
            if E.omega_r[g, f] and E.omega_r[f, e]:
                ge = p[g][e]
                if ge is None or p[ge][f] is None or p[g][f] != p[ge][f]:
                    return (e, f, g), "gf != (ge)f"
        return None

    def b5(self):
        E, p = self.E, self.p
        for e, f, g in itertools.product(range(self.m), repeat=3):
            if E.omega_l[f, e] and E.omega_l[g, e]:
                if p[e][f] is None or p[e][g] is None:
                    return (e, f, g), "ef or eg undefined"
                lhs = set(greatest_sandwich(E, p[e][f], p[e][g]))
                rhs = {p[e][h] for h in greatest_sandwich(E, f, g)}
                if lhs != rhs:
                    return (e, f, g), f"S(ef,eg)={sorted(lhs)} but eS(f,g)={sorted(rhs, key=str)}"
            if E.omega_r[f, e] and E.omega_r[g, e]:
                if p[f][e] is None or p[g][e] is None:
                    return (e, f, g), "fe or ge undefined"
                lhs = set(greatest_sandwich(E, p[f][e], p[g][e]))
                rhs = {p[h][e] for h in greatest_sandwich(E, f, g)}
                if lhs != rhs:
                    return (e, f, g), f"S(fe,ge)={sorted(lhs)} but S(f,g)e={sorted(rhs, key=str)}"
        return None

    def r(self):
        for e, f in itertools.product(range(self.m), repeat=2):
            if not greatest_sandwich(self.E, e, f):
                return (e, f), "empty sandwich set"
        return None


def verify_axioms(E: BiorderedSet) -> AxiomReport:
    """
    Checks every axiom by exhaustive quantification. An undefined product where an
    axiom needs one counts as a failure of that axiom, so a biorder failing
    (B1) still gets a full report.
    """
    def build():
        checker = _Checker(E)
        report = AxiomReport()
        for name in AXIOMS:
            if name in ("B5", "R") and not report.results["B1"].passed:
                # sandwich sets need every basic product on the (B1) domain
                report.results[name] = AxiomResult(name, False, None, "not checked: (B1) fails")
                continue
            failure = getattr(checker, name.lower())()
            if failure is None:
                report.results[name] = AxiomResult(name, True)
            else:
                witness, detail = failure
                report.results[name] = AxiomResult(name, False, witness, detail)
                logger.debug(f"axiom {name} fails at {witness}: {detail}")
        logger.info(f"verified axioms on {E!r}: {len(report.failures())} failure(s)")
        return report
    return E._cached("axioms", build)


def require_regular_biorder(E: BiorderedSet) -> AxiomReport:
    """
    Raises:
        NotRegularBiorder: With the first failing axiom and its witness.
    """
    report = verify_axioms(E)
    if not report.regular:
        first = report.failures()[0]
        raise NotRegularBiorder(f"axiom {first.name} fails: {first.detail}", witness=first.witness)
    return report
