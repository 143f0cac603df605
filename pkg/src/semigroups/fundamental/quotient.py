"""
The fundamental regular semigroup T_E/p of a regular biordered set, and the
image of a regular semigroup inside T_{E(S)}/p.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Optional

from ..biorder import BiorderedSet, extract_biorder, is_biorder_isomorphism, sandwich
from ..config import Caps, resolve
from ..core.congruence import is_fundamental
from ..core.semigroup import FiniteSemigroup, inverses_of, is_regular, require_regular
from ..errors import TheoremViolation, WellDefinednessViolation
from ..groupoid.base_groupoid import partition
from .omega import OmegaIso, enumerate_omega_isos, identity_iso, restrict_left, restrict_right, tau_iso

logger = logging.getLogger(__name__)


def p_related(E: BiorderedSet, alpha: OmegaIso, beta: OmegaIso) -> bool:
    """α p β iff e_α R e_β, f_α L f_β and τ(e_α, e_β)β = ατ(f_α, f_β)."""
    if not (E.R[alpha.e, beta.e] and E.L[alpha.f, beta.f]):
        return False
    return tau_iso(E, alpha.e, beta.e).then(beta) == alpha.then(tau_iso(E, alpha.f, beta.f))


def p_classes(E: BiorderedSet, isos: list[OmegaIso], verify: bool = True) -> list[tuple[int, ...]]:
    """
    Partitions T_E (given as a list) into p-classes of list positions, sorted
    by least member.
    Raises:
        TheoremViolation: If `verify` and p fails to be an equivalence.
    """
    classes = partition(
        isos,
        key=lambda alpha: (E.R[alpha.e].tobytes(), E.L[alpha.f].tobytes()),
        related=lambda alpha, beta: p_related(E, alpha, beta),
    )

    if verify:
        for block in classes:
            for i in block:
                for j in block:
                    if not p_related(E, isos[i], isos[j]):
                        raise TheoremViolation("p is not an equivalence on T_E", witness=(i, j))
        for a, block in enumerate(classes):
            for other in classes[a + 1:]:
                if p_related(E, isos[block[0]], isos[other[0]]):
                    raise TheoremViolation("p-classes are not separated", witness=(block[0], other[0]))
    return classes


@dataclass
class FundamentalQuotient:
    """
    Attributes:
        semigroup (FiniteSemigroup): T_E/p; element k is the k-th p-class.
        isos (list): T_E in enumeration order.
        classes (list): p-classes as tuples of positions in `isos`.
        class_of (dict): OmegaIso -> class index.
        idempotent_classes (tuple): e ↦ class of the identity on ω(e).
    """
    biorder: BiorderedSet
    semigroup: FiniteSemigroup
    isos: list
    classes: list
    class_of: dict = field(repr=False)
    idempotent_classes: tuple = ()

    def representative(self, k: int) -> OmegaIso:
        return self.isos[self.classes[k][0]]

    def to_dict(self) -> dict:
        return {
            "order": self.semigroup.order,
            "classes": [
                {"representative": self.representative(k).to_dict(), "size": len(block)}
                for k, block in enumerate(self.classes)
            ],
            "idempotent_classes": list(self.idempotent_classes),
        }


def _class_product(E, quotient_of, alpha, beta, h) -> int:
    gamma = restrict_right(E, alpha, h).then(restrict_left(E, h, beta))
    return quotient_of[gamma]


def build_TE_mod_p(E: BiorderedSet, rng: Optional[random.Random] = None, verify: bool = True,
                   caps: Caps | None = None, max_workers: int = 1) -> FundamentalQuotient:
    """
    Builds T_E/p with [α][β] = [(α∗h)(h∗β)], h ∈ S(f_α, e_β).
    Args:
        rng (random.Random): Picks the sandwich element at random instead of
            the least one.
        verify (bool): Check independence from the choice of h and of the
            class representatives, regularity, fundamentality and that the
            idempotents of the result form a copy of E.
    Raises:
        NotRegularBiorder: If E fails an axiom.
        WellDefinednessViolation: If a product depends on a choice.
        TheoremViolation: If a post-condition fails.
    """
    isos = enumerate_omega_isos(E, max_workers=max_workers, caps=caps, verify=verify)
    classes = p_classes(E, isos, verify=verify)
    resolve(caps).check("max_elements", len(classes))
    class_of = {}
    for k, block in enumerate(classes):
        for i in block:
            class_of[isos[i]] = k

    table = []
    for a, left in enumerate(classes):
        row = []
        for b, right in enumerate(classes):
            alpha, beta = isos[left[0]], isos[right[0]]
            hs = sandwich(E, alpha.f, beta.e)
            h = rng.choice(hs) if rng is not None else hs[0]
            value = _class_product(E, class_of, alpha, beta, h)
            if verify:
                for i in left:
                    for j in right:
                        for h2 in sandwich(E, isos[i].f, isos[j].e):
                            other = _class_product(E, class_of, isos[i], isos[j], h2)
                            if other != value:
                                witness = {"classes": [a, b], "members": [i, j], "sandwich": [h, h2], "values": [value, other]}
                                logger.error(f"T_E/p product depends on a choice: {witness}")
                                raise WellDefinednessViolation("product in T_E/p is not well defined", witness=witness)
            row.append(value)
        table.append(row)

    semigroup = FiniteSemigroup(table, name="T_E/p", check=verify)
    idempotent_classes = tuple(class_of[identity_iso(E, e)] for e in range(E.size))
    quotient = FundamentalQuotient(E, semigroup, isos, classes, class_of, idempotent_classes)
    logger.info(f"T_E/p: {len(isos)} ω-isomorphisms in {len(classes)} classes")

    if verify:
        if not is_regular(semigroup):
            raise TheoremViolation("T_E/p is not regular", witness=(is_regular(semigroup).counterexample,))
        if not is_fundamental(semigroup):
            raise TheoremViolation("T_E/p is not fundamental")
        F = extract_biorder(semigroup)
        phi = [F.index_of(k) for k in idempotent_classes]
        if not is_biorder_isomorphism(E, F, phi):
            raise TheoremViolation("e ↦ [1_ω(e)] is not a biorder isomorphism onto E(T_E/p)", witness=tuple(idempotent_classes))
    return quotient


@dataclass
class FundamentalImage:
    """
    Attributes:
        quotient (FundamentalQuotient): T_{E(S)}/p.
        phi (tuple): x ↦ class of the ω-isomorphism g ↦ x'gx from ω(xx') to ω(x'x).
        image (FiniteSemigroup): The subsemigroup phi(S), elements ascending.
        members (list): image index -> class index.
        injective (bool): Whether phi is injective, i.e. S is fundamental.
    """
    quotient: FundamentalQuotient
    phi: tuple
    image: FiniteSemigroup
    members: list
    injective: bool

    def to_dict(self) -> dict:
        return {
            "phi": list(self.phi),
            "image_order": self.image.order,
            "injective": self.injective,
            "quotient": self.quotient.to_dict(),
        }


def element_iso(S: FiniteSemigroup, E: BiorderedSet, x: int) -> OmegaIso:
    x_inv = inverses_of(S, x)[0]
    e, f = S.mul(x, x_inv), S.mul(x_inv, x)
    mapping = {E.index_of(g): E.index_of(S.product(x_inv, g, x)) for g in (E.element(i) for i in E.omega_ideal(E.index_of(e)))}
    return OmegaIso.from_dict(E.index_of(e), E.index_of(f), mapping)


def fundamental_image(S: FiniteSemigroup, caps: Caps | None = None, verify: bool = True) -> FundamentalImage:
    """
    Maps S onto a full regular subsemigroup of T_{E(S)}/p; the kernel is μ.
    Raises:
        NotRegular: If S is not regular.
        TheoremViolation: If the map is not a homomorphism, is not full, or
            its injectivity disagrees with `is_fundamental`.
    """
    require_regular(S)
    E = extract_biorder(S)
    quotient = build_TE_mod_p(E, caps=caps, verify=verify)
    Q = quotient.semigroup
    phi = tuple(quotient.class_of[element_iso(S, E, x)] for x in range(S.order))
    for a in range(S.order):
        for b in range(S.order):
            if Q.mul(phi[a], phi[b]) != phi[S.mul(a, b)]:
                raise TheoremViolation("x ↦ [α_x] is not a homomorphism", witness=(a, b))
    members = sorted(set(phi))
    if not set(quotient.idempotent_classes) <= set(members):
        raise TheoremViolation("image is not full", witness=tuple(sorted(set(quotient.idempotent_classes) - set(members))))
    image, _ = Q.subsemigroup(members)
    injective = len(members) == S.order
    if injective != is_fundamental(S):
        raise TheoremViolation("injectivity of the fundamental image disagrees with μ", witness={"injective": injective})
    logger.info(f"{S!r} maps onto {image.order} classes of T_E/p (injective={injective})")
    return FundamentalImage(quotient, phi, image, members, injective)
