"""
The inductive groupoid (G(S), ε_S): the axioms (IG1) with its dual and
(IG2), and the regular semigroup S(G) = G/p rebuilt from it.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Optional

from ..biorder import extract_biorder, sandwich_semigroup
from ..biorder.axioms import AxiomResult
from ..core.isomorphism import is_isomorphism
from ..core.semigroup import FiniteSemigroup, is_inverse, require_regular
from ..errors import TheoremViolation, WellDefinednessViolation
from .base_groupoid import GroupoidReport, partition
from .gs import GroupoidGS, groupoid_of
from .squares import check_epsilon_commutative, singular_squares

logger = logging.getLogger(__name__)


def _ig1(G: GroupoidGS, dual: bool):
    """
    For x and e1, e2 ω d(x) with e1 ω^r e2 (ω^l for the dual), with
    f_i = r(e_i↾x): f1 ω^r f2 (resp. ω^l) and
        ε(e1, e1e2)(e1e2↾x) = (e1↾x)ε(f1, f1f2)     [dual: e2e1, f2f1]
    """
    S = G.S
    related = G.omega_l if dual else G.omega_r
    vacuous = True
    for x in G.morphisms:
        below = [e for e in G.vertices if G.omega(e, G.domain(x))]
        for e1, e2 in itertools.product(below, repeat=2):
            if not related(e1, e2):
                continue
            vacuous = False
            f1 = G.codomain(G.restriction(e1, x))
            f2 = G.codomain(G.restriction(e2, x))
            if not related(f1, f2):
                return (x, e1, e2), "f1, f2 are not related like e1, e2", vacuous
            e12 = S.mul(e2, e1) if dual else S.mul(e1, e2)
            f12 = S.mul(f2, f1) if dual else S.mul(f1, f2)
            lhs = G.compose(G.epsilon(e1, e12), G.restriction(e12, x))
            rhs = G.compose(G.restriction(e1, x), G.epsilon(f1, f12))
            if lhs != rhs:
                return (x, e1, e2), "ε-restriction square does not commute", vacuous
    return None, "", vacuous


@dataclass
class InductiveReport(GroupoidReport):
    vacuous: tuple = ()


def check_inductive_axioms(S: FiniteSemigroup, raise_on_failure: bool = True) -> InductiveReport:
    """
    Checks (IG1), its dual (IG1*) and (IG2) for (G(S), ε_S).
    Raises:
        NotRegular: If S is not regular.
        TheoremViolation: On the first failure, when `raise_on_failure`.
    """
    G = groupoid_of(S)
    E = extract_biorder(S)
    report = InductiveReport()
    vacuous = []
    for name, dual in (("IG1", False), ("IG1*", True)):
        witness, detail, empty = _ig1(G, dual)
        report.results[name] = AxiomResult(name, witness is None, witness, detail)
        if empty:
            vacuous.append(name)
    squares = singular_squares(E)
    bad = [square for square in squares if not check_epsilon_commutative(S, square, E)]
    report.results["IG2"] = AxiomResult(
        "IG2", not bad, bad[0].corners if bad else None, "singular square is not ε-commutative" if bad else ""
    )
    if not squares:
        vacuous.append("IG2")
    report.vacuous = tuple(vacuous)
    if raise_on_failure:
        report.raise_on_failure(f"inductive groupoid of {S!r}")
    return report


def check_schein(S: FiniteSemigroup) -> bool:
    """For inverse S every sandwich set S(e, f) is the singleton {ef}."""
    if not is_inverse(S):
        return False
    E = S.idempotents
    return all(sandwich_semigroup(S, e, f) == [S.mul(e, f)] for e in E for f in E)


def p_related(G: GroupoidGS, x, y) -> bool:
    """x p y iff d(x) R d(y), r(x) L r(y) and xε(r(x), r(y)) = ε(d(x), d(y))y."""
    green = G.S.green
    dx, dy, rx, ry = G.domain(x), G.domain(y), G.codomain(x), G.codomain(y)
    if green.r_class[dx] != green.r_class[dy] or green.l_class[rx] != green.l_class[ry]:
        return False
    return G.compose(x, G.epsilon(rx, ry)) == G.compose(G.epsilon(dx, dy), y)


@dataclass
class Reconstruction:
    """
    Attributes:
        semigroup (FiniteSemigroup): S(G(S)); element k is the k-th p-class.
        classes (list): p-classes as positions in `groupoid.morphisms`.
        phi (tuple): class k ↦ the common first coordinate of its morphisms.
    """
    groupoid: GroupoidGS
    semigroup: FiniteSemigroup
    classes: list
    phi: tuple

    def to_dict(self) -> dict:
        return {"order": self.semigroup.order, "classes": len(self.classes), "phi": list(self.phi), "isomorphic": True}


def reconstruct(S: FiniteSemigroup, rng: Optional[random.Random] = None, verify: bool = True) -> Reconstruction:
    """
    Builds G(S)/p with [x][y] = [(x∗h)(h∗y)], h ∈ S(r(x), d(y)), and checks
    that [(x, x')] ↦ x is an isomorphism onto S.
    Raises:
        NotRegular: If S is not regular.
        WellDefinednessViolation: If a product depends on a choice.
        TheoremViolation: If the round trip fails.
    """
    require_regular(S)
    G = groupoid_of(S)
    green = S.green
    morphisms = G.morphisms
    classes = partition(
        morphisms,
        key=lambda x: (green.r_class[G.domain(x)], green.l_class[G.codomain(x)]),
        related=lambda x, y: p_related(G, x, y),
    )
    class_of = {}
    for k, block in enumerate(classes):
        for i in block:
            class_of[morphisms[i]] = k

    def product(x, y, h):
        return class_of[G.compose(G.extended_corestriction(x, h), G.extended_restriction(h, y))]

    table = []
    for a, left in enumerate(classes):
        row = []
        for b, right in enumerate(classes):
            x, y = morphisms[left[0]], morphisms[right[0]]
            hs = sandwich_semigroup(S, G.codomain(x), G.domain(y))
            h = rng.choice(hs) if rng is not None else hs[0]
            value = product(x, y, h)
            if verify:
                for i in left:
                    for j in right:
                        xi, yj = morphisms[i], morphisms[j]
                        for h2 in sandwich_semigroup(S, G.codomain(xi), G.domain(yj)):
                            if product(xi, yj, h2) != value:
                                witness = {"classes": [a, b], "morphisms": [list(xi), list(yj)], "sandwich": h2}
                                logger.error(f"G(S)/p product depends on a choice: {witness}")
                                raise WellDefinednessViolation("product in G(S)/p is not well defined", witness=witness)
            row.append(value)
        table.append(row)
    rebuilt = FiniteSemigroup(table, name=f"S(G({S.name or 'S'}))", check=verify)

    firsts = [{morphisms[i][0] for i in block} for block in classes]
    if any(len(block) != 1 for block in firsts):
        k = next(k for k, block in enumerate(firsts) if len(block) != 1)
        raise TheoremViolation("a p-class mixes different first coordinates", witness=(k,))
    phi = tuple(next(iter(block)) for block in firsts)
    if sorted(phi) != list(range(S.order)) or not is_isomorphism(rebuilt, S, phi):
        raise TheoremViolation("[(x, x')] ↦ x is not an isomorphism S(G(S)) -> S", witness=phi)
    logger.info(f"reconstructed {S!r} from {len(morphisms)} morphisms in {len(classes)} classes")
    return Reconstruction(G, rebuilt, classes, phi)
