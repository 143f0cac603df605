"""
Normal cones of a finite category with subobjects, their product
γδ = γ∗[δ(c_γ)]°, the regular semigroup T(C) of all cones, and the
principal cones ρ^a of 𝕃(S).
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..config import Caps, resolve
from ..core.congruence import CongruenceRelation
from ..core.semigroup import FiniteSemigroup, is_regular
from ..errors import TheoremViolation
from .finite_category import FiniteCategory
from .left_ideals import PrincipalIdealCategory, left_ideal_category

logger = logging.getLogger(__name__)

PRUNED = "pruned"
NAIVE = "naive"


@dataclass(frozen=True)
class NormalCone:
    """
    Attributes:
        vertex (int): The object c_γ.
        components (tuple): γ(a) ∈ C(a, c_γ) for every object a.
    """
    vertex: int
    components: tuple

    def __call__(self, a: int) -> int:
        return self.components[a]

    def to_dict(self, C: FiniteCategory | None = None) -> dict:
        if C is None:
            return {"vertex": self.vertex, "components": list(self.components)}
        return {"vertex": C.objects[self.vertex], "components": [C.labels[m] for m in self.components]}


def is_cone(C: FiniteCategory, components, vertex: int) -> bool:
    """j(a, b)γ(b) = γ(a) for a ⊆ b, and some γ(c) is an isomorphism."""
    if len(components) != C.n_objects:
        return False
    if any(C.arrows[m] != (a, vertex) for a, m in enumerate(components)):
        return False
    for (a, b), j in C.inclusions.items():
        if C.compose(j, components[b]) != components[a]:
            return False
    return any(C.is_isomorphism(m) for m in components)


def _object_order(C: FiniteCategory) -> list[int]:
    """Objects with fewer strict supersets first, so every superset precedes its subobjects."""
    above = [sum(1 for (a, b) in C.inclusions if a == x and b != x) for x in range(C.n_objects)]
    return sorted(range(C.n_objects), key=lambda x: (above[x], x))


def _pruned(C: FiniteCategory, vertex: int, fixed: Optional[dict] = None) -> list[NormalCone]:
    order = _object_order(C)
    supersets = {x: [b for (a, b) in C.inclusions if a == x and b != x] for x in range(C.n_objects)}
    fixed = fixed or {}
    found = []
    components: dict = {}

    def search(depth: int):
        if depth == len(order):
            values = tuple(components[a] for a in range(C.n_objects))
            if any(C.is_isomorphism(m) for m in values):
                found.append(NormalCone(vertex, values))
            return
        a = order[depth]
        forced = {C.compose(C.inclusion(a, b), components[b]) for b in supersets[a]}
        if len(forced) > 1:
            return
        candidates = list(forced) if forced else C.hom(a, vertex)
        if a in fixed:
            candidates = [m for m in candidates if m == fixed[a]]
        for m in candidates:
            components[a] = m
            search(depth + 1)
        components.pop(a, None)

    search(0)
    return found


def _naive(C: FiniteCategory, vertex: int) -> list[NormalCone]:
    homs = [C.hom(a, vertex) for a in range(C.n_objects)]
    return [NormalCone(vertex, tuple(values)) for values in itertools.product(*homs) if is_cone(C, values, vertex)]


def _cones_at(C: FiniteCategory, vertices, method: str) -> list[NormalCone]:
    search = _pruned if method == PRUNED else _naive
    return [cone for d in vertices for cone in search(C, int(d))]


def enumerate_cones(C: FiniteCategory, caps: Caps | None = None, max_workers: int = 1, method: str = PRUNED) -> list[NormalCone]:
    """
    All normal cones of C, sorted by (vertex, components).
    Args:
        max_workers (int): Vertices are split across this many threads.
        method (str): PRUNED propagates components down the subobject order;
            NAIVE filters the whole product of hom-sets.
    Raises:
        CapExceeded: If C has more objects than `caps.cone_objects`.
    """
    if method not in (PRUNED, NAIVE):
        raise ValueError(f"method must be {PRUNED!r} or {NAIVE!r}, got {method!r}")
    if not isinstance(max_workers, int) or max_workers < 1:
        raise ValueError(f"max_workers must be a positive int, got {max_workers!r}")
    resolve(caps).check("cone_objects", C.n_objects)
    vertices = list(range(C.n_objects))
    if max_workers == 1 or len(vertices) < 2:
        cones = _cones_at(C, vertices, method)
    else:
        chunks = [chunk for chunk in np.array_split(np.asarray(vertices), max_workers) if len(chunk)]
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            results = list(executor.map(lambda chunk: _cones_at(C, chunk, method), chunks))
        cones = [cone for chunk in results for cone in chunk]
    cones.sort(key=lambda cone: (cone.vertex, cone.components))
    logger.info(f"{C!r} has {len(cones)} normal cones ({method})")
    return cones


def identity_cone(C: FiniteCategory, c: int, caps: Caps | None = None) -> Optional[NormalCone]:
    """A normal cone μ with μ(c) = 1_c, or None."""
    if isinstance(C, PrincipalIdealCategory):
        cone = principal_cone(C, C.representatives[c])
        return cone if cone.components[c] == C.identity(c) and is_cone(C, cone.components, cone.vertex) else None
    resolve(caps).check("cone_objects", C.n_objects)
    found = _pruned(C, c, fixed={c: C.identity(c)})
    return found[0] if found else None


def star(C: FiniteCategory, gamma: NormalCone, f: int) -> NormalCone:
    """γ∗f: a ↦ γ(a)f for an epimorphism f from the vertex of γ."""
    return NormalCone(C.codomain(f), tuple(C.compose(m, f) for m in gamma.components))


def cone_product(C: FiniteCategory, gamma: NormalCone, delta: NormalCone) -> NormalCone:
    """γδ = γ∗[δ(c_γ)]°."""
    return star(C, gamma, C.epimorphic_part(delta(gamma.vertex)))


def principal_cone(C, a: int) -> NormalCone:
    """
    ρ^a(Se) = ρ(e, ea, f) with f the representative idempotent of L_a.
    Args:
        C: 𝕃(S) as a PrincipalIdealCategory, or S itself.
    """
    if isinstance(C, FiniteSemigroup):
        C = left_ideal_category(C)
    base = C.base
    vertex = C.object_of_element(a)
    f = C.representatives[vertex]
    return NormalCone(vertex, tuple(C.morphism(e, base.mul(e, a), f) for e in C.representatives))


@dataclass
class ConeSemigroup:
    """
    Attributes:
        category (FiniteCategory): C.
        cones (list): All normal cones; cone k is element k of `semigroup`.
        semigroup (FiniteSemigroup): T(C).
    """
    category: FiniteCategory
    cones: list
    semigroup: FiniteSemigroup

    def index(self, cone: NormalCone) -> int:
        return self.cones.index(cone)

    def to_dict(self) -> dict:
        C = self.category
        return {
            "cones": [cone.to_dict(C) for cone in self.cones],
            "order": self.semigroup.order,
            "table": self.semigroup.table.tolist(),
        }


def cone_semigroup(C: FiniteCategory, caps: Caps | None = None, max_workers: int = 1, verify: bool = True) -> ConeSemigroup:
    """
    T(C): all normal cones under γδ = γ∗[δ(c_γ)]°.
    Raises:
        CapExceeded: If C has more objects than `caps.cone_objects`.
        TheoremViolation: If a product is not a cone or T(C) is not regular.
    """
    cones = enumerate_cones(C, caps, max_workers)
    index = {cone: k for k, cone in enumerate(cones)}
    table = []
    for gamma in cones:
        row = []
        for delta in cones:
            product = cone_product(C, gamma, delta)
            if product not in index:
                raise TheoremViolation("product of normal cones is not a normal cone", witness=product.to_dict())
            row.append(index[product])
        table.append(row)
    T = FiniteSemigroup(table, labels=[f"γ{k}" for k in range(len(cones))], name=f"T({C.name or 'C'})", check=verify)
    if verify and not is_regular(T):
        logger.error(f"T({C.name}) is not regular")
        raise TheoremViolation("the cone semigroup is not regular", witness=(is_regular(T).counterexample,))
    logger.info(f"T({C.name}) has order {T.order}")
    return ConeSemigroup(C, cones, T)


def check_principal_homomorphism(C: PrincipalIdealCategory) -> None:
    """
    ρ^a ρ^b = ρ^{ab} for all a, b.
    Raises:
        TheoremViolation: With the first pair where it fails.
    """
    S = C.base
    cones = [principal_cone(C, a) for a in range(S.order)]
    for a, b in itertools.product(range(S.order), repeat=2):
        if cone_product(C, cones[a], cones[b]) != cones[S.mul(a, b)]:
            raise TheoremViolation("a ↦ ρ^a is not multiplicative", witness=(a, b))


def _kernel(keys) -> CongruenceRelation:
    ids: dict = {}
    return CongruenceRelation.from_labels([ids.setdefault(key, len(ids)) for key in keys])


def principal_kernel(C: PrincipalIdealCategory) -> CongruenceRelation:
    """ρ^a = ρ^b as a relation on S."""
    S = C.base
    return _kernel([principal_cone(C, a) for a in range(S.order)])


def right_regular_kernel(S: FiniteSemigroup) -> CongruenceRelation:
    """xa = xb for all x ∈ S."""
    return _kernel([tuple(S.table[:, a].tolist()) for a in range(S.order)])


def check_principal_kernel(C: PrincipalIdealCategory) -> CongruenceRelation:
    """
    Raises:
        TheoremViolation: If the kernel of a ↦ ρ^a is not that of the right
            regular representation.
    """
    kernel = principal_kernel(C)
    expected = right_regular_kernel(C.base)
    if kernel.blocks != expected.blocks:
        raise TheoremViolation("kernel of a ↦ ρ^a differs from the right regular representation", witness=kernel.blocks)
    return kernel
