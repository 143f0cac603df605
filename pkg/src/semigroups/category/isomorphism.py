"""
Isomorphism of finite categories with subobjects by functor search, and the
recovery of a normal category from its cone semigroup.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Optional

from ..config import Caps
from ..errors import TheoremViolation
from .cones import ConeSemigroup, cone_semigroup
from .finite_category import FiniteCategory
from .left_ideals import PrincipalIdealCategory

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CategoryIsomorphism:
    objects: tuple
    morphisms: tuple

    def to_dict(self) -> dict:
        return {"objects": list(self.objects), "morphisms": list(self.morphisms)}


def _hom_sizes(C: FiniteCategory, a: int) -> tuple:
    return (
        tuple(sorted(len(C.hom(a, b)) for b in range(C.n_objects))),
        tuple(sorted(len(C.hom(b, a)) for b in range(C.n_objects))),
        sum(1 for (x, _) in C.inclusions if x == a),
        sum(1 for (_, y) in C.inclusions if y == a),
    )


def _object_maps(C: FiniteCategory, D: FiniteCategory):
    sig_c = [_hom_sizes(C, a) for a in range(C.n_objects)]
    sig_d = [_hom_sizes(D, b) for b in range(D.n_objects)]
    for perm in itertools.permutations(range(D.n_objects)):
        if any(sig_c[a] != sig_d[perm[a]] for a in range(C.n_objects)):
            continue
        if all(((perm[a], perm[b]) in D.inclusions) == ((a, b) in C.inclusions) for a in range(C.n_objects) for b in range(C.n_objects)):
            if all(len(C.hom(a, b)) == len(D.hom(perm[a], perm[b])) for a in range(C.n_objects) for b in range(C.n_objects)):
                yield perm


def _morphism_map(C: FiniteCategory, D: FiniteCategory, perm) -> Optional[list]:
    phi: list = [None] * len(C)
    for a in range(C.n_objects):
        phi[C.identity(a)] = D.identity(perm[a])
    for (a, b), j in C.inclusions.items():
        phi[j] = D.inclusion(perm[a], perm[b])
    if not _consistent(C, D, phi):
        return None
    free = [m for m in range(len(C)) if phi[m] is None]

    def search(k: int) -> bool:
        if k == len(free):
            return True
        m = free[k]
        a, b = C.arrows[m]
        used = {phi[n] for n in C.hom(a, b) if phi[n] is not None}
        for target in D.hom(perm[a], perm[b]):
            if target in used:
                continue
            phi[m] = target
            if _consistent(C, D, phi) and search(k + 1):
                return True
        phi[m] = None
        return False

    return phi if search(0) else None


def _consistent(C: FiniteCategory, D: FiniteCategory, phi) -> bool:
    for (m, n), k in C.composition.items():
        if phi[m] is None or phi[n] is None or phi[k] is None:
            continue
        if D.compose(phi[m], phi[n]) != phi[k]:
            return False
    return True


def find_category_isomorphism(C: FiniteCategory, D: FiniteCategory) -> Optional[CategoryIsomorphism]:
    """
    An isomorphism of categories with subobjects C -> D (inclusions go to
    inclusions), or None.
    """
    if C.n_objects != D.n_objects or len(C) != len(D) or len(C.inclusions) != len(D.inclusions):
        return None
    for perm in _object_maps(C, D):
        phi = _morphism_map(C, D, perm)
        if phi is not None:
            return CategoryIsomorphism(tuple(perm), tuple(phi))
    return None


def is_category_isomorphism(C: FiniteCategory, D: FiniteCategory, iso: CategoryIsomorphism) -> bool:
    perm, phi = iso.objects, iso.morphisms
    if sorted(phi) != list(range(len(D))) or sorted(perm) != list(range(D.n_objects)):
        return False
    if any(D.arrows[phi[m]] != (perm[a], perm[b]) for m, (a, b) in enumerate(C.arrows)):
        return False
    if any(D.inclusions.get((perm[a], perm[b])) != phi[j] for (a, b), j in C.inclusions.items()):
        return False
    return _consistent(C, D, list(phi))


@dataclass
class Recovery:
    """C, its cone semigroup T(C), 𝕃(T(C)) and an isomorphism C -> 𝕃(T(C))."""
    category: FiniteCategory
    cones: ConeSemigroup
    recovered: PrincipalIdealCategory
    isomorphism: CategoryIsomorphism

    def to_dict(self) -> dict:
        return {
            "objects": self.category.n_objects,
            "morphisms": len(self.category),
            "cone_semigroup_order": self.cones.semigroup.order,
            "isomorphism": self.isomorphism.to_dict(),
        }


def recover_category(C: FiniteCategory, caps: Caps | None = None) -> Recovery:
    """
    Builds 𝕃(T(C)) and finds an isomorphism from C.
    Raises:
        CapExceeded: If C has more objects than `caps.cone_objects`.
        TheoremViolation: If no isomorphism exists.
    """
    T = cone_semigroup(C, caps)
    recovered = PrincipalIdealCategory(T.semigroup, check=False)
    iso = find_category_isomorphism(C, recovered)
    if iso is None:
        logger.error(f"{C!r} is not isomorphic to 𝕃(T(C)) = {recovered!r}")
        raise TheoremViolation("C is not isomorphic to 𝕃(T(C))", witness={"objects": C.n_objects, "recovered": recovered.n_objects})
    logger.info(f"recovered {C!r} from {T.semigroup.order} cones")
    return Recovery(C, T, recovered, iso)
