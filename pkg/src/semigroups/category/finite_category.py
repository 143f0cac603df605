"""
Finite categories with subobjects, given by explicit composition tables, and
the normal category axioms (NC1)-(NC4).

Morphisms are integer ids. Composition is diagrammatic: compose(m, n) is
"m then n" and needs codomain(m) == domain(n).
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from ..biorder.axioms import AxiomResult
from ..errors import DomainConditionFailed, FactorizationNotFound, InvalidCategory
from ..groupoid.base_groupoid import GroupoidReport

logger = logging.getLogger(__name__)

NC_AXIOMS = ("NC1", "NC2", "NC3", "NC4")


@dataclass(frozen=True)
class NormalFactorization:
    """
    m = retraction · isomorphism · inclusion; `epimorphic` is m° and `image`
    the object im m.
    """
    morphism: int
    retraction: int
    isomorphism: int
    inclusion: int
    epimorphic: int
    image: int

    def to_dict(self) -> dict:
        return {
            "morphism": self.morphism,
            "retraction": self.retraction,
            "isomorphism": self.isomorphism,
            "inclusion": self.inclusion,
            "epimorphic": self.epimorphic,
            "image": self.image,
        }


class FiniteCategory:
    """
    A small category with subobjects.

    Args:
        objects (Sequence[str]): Object names; object k is objects[k].
        arrows (Sequence[tuple]): (domain, codomain) of each morphism id.
        composition (dict): {(m, n): k} for every composable pair.
        identities (Sequence[int]): Identity morphism of each object.
        inclusions (dict): {(a, b): j} for each a ⊆ b, the inclusion j(a, b).
        labels (Sequence[str]): Optional morphism names.
        name (str): Optional name used in logs.
        check (bool): Validate the category laws.

    Raises:
        InvalidCategory: If `check` and a law fails.
    """

    side = ""

    def __init__(
        self,
        objects: Sequence[str],
        arrows: Sequence[tuple],
        composition: dict,
        identities: Sequence[int],
        inclusions: dict,
        labels: Optional[Sequence[str]] = None,
        name: Optional[str] = None,
        check: bool = True,
    ):
        if len(identities) != len(objects):
            raise ValueError(f"one identity per object expected, got {len(identities)} for {len(objects)} objects")
        self.objects = tuple(str(o) for o in objects)
        self.arrows = tuple((int(a), int(b)) for a, b in arrows)
        self.composition = {(int(m), int(n)): int(k) for (m, n), k in composition.items()}
        self.identities = tuple(int(i) for i in identities)
        self.inclusions = {(int(a), int(b)): int(j) for (a, b), j in inclusions.items()}
        self.labels = tuple(labels) if labels is not None else tuple(f"m{k}" for k in range(len(self.arrows)))
        self.name = name
        self._homs: dict = {}
        for m, (a, b) in enumerate(self.arrows):
            self._homs.setdefault((a, b), []).append(m)
        self._factorizations: dict = {}
        if check:
            self._check_laws()

    def __repr__(self):
        return f"<{type(self).__name__} {self.name or ''}: {len(self.objects)} objects, {len(self.arrows)} morphisms>"

    def __len__(self):
        return len(self.arrows)

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    def domain(self, m: int) -> int:
        return self.arrows[m][0]

    def codomain(self, m: int) -> int:
        return self.arrows[m][1]

    def hom(self, a: int, b: int) -> list[int]:
        return list(self._homs.get((a, b), ()))

    def identity(self, a: int) -> int:
        return self.identities[a]

    def compose(self, *ms: int) -> int:
        """
        Raises:
            DomainConditionFailed: If two neighbours are not composable.
        """
        result = ms[0]
        for m in ms[1:]:
            try:
                result = self.composition[(result, m)]
            except KeyError:
                raise DomainConditionFailed(
                    f"{self.labels[result]} and {self.labels[m]} are not composable", witness=(result, m)
                ) from None
        return result

    def subobject(self, a: int, b: int) -> bool:
        """a ⊆ b."""
        return (a, b) in self.inclusions

    def inclusion(self, a: int, b: int) -> int:
        return self.inclusions[(a, b)]

    def is_inclusion(self, m: int) -> bool:
        return self.inclusions.get(self.arrows[m]) == m

    def inverse_of(self, m: int) -> Optional[int]:
        a, b = self.arrows[m]
        for n in self.hom(b, a):
            if self.compose(m, n) == self.identities[a] and self.compose(n, m) == self.identities[b]:
                return n
        return None

    def is_isomorphism(self, m: int) -> bool:
        return self.inverse_of(m) is not None

    def is_epimorphism(self, m: int) -> bool:
        b = self.codomain(m)
        seen = {}
        for c in range(self.n_objects):
            for n in self.hom(b, c):
                k = self.compose(m, n)
                if k in seen:
                    return False
                seen[k] = n
        return True

    def is_monomorphism(self, m: int) -> bool:
        a = self.domain(m)
        seen = set()
        for c in range(self.n_objects):
            for n in self.hom(c, a):
                k = self.compose(n, m)
                if k in seen:
                    return False
                seen.add(k)
        return True

    def is_retraction(self, q: int) -> bool:
        """q: b -> a is a retraction when j(a, b) q = 1_a."""
        b, a = self.arrows[q]
        j = self.inclusions.get((a, b))
        return j is not None and self.compose(j, q) == self.identities[a]

    def _check_laws(self) -> None:
        for a, i in enumerate(self.identities):
            if self.arrows[i] != (a, a):
                raise InvalidCategory(f"identity of {self.objects[a]} is not an endomorphism", witness=(a, i))
        n = len(self.arrows)
        for m in range(n):
            for k in range(n):
                composable = self.codomain(m) == self.domain(k)
                if composable != ((m, k) in self.composition):
                    raise InvalidCategory("composition table does not match domains", witness=(m, k))
                if composable and self.arrows[self.composition[(m, k)]] != (self.domain(m), self.codomain(k)):
                    raise InvalidCategory("composite lands in the wrong hom-set", witness=(m, k))
            a, b = self.arrows[m]
            if self.compose(self.identities[a], m) != m or self.compose(m, self.identities[b]) != m:
                raise InvalidCategory("identity law fails", witness=(m,))
        for (m, k), mk in self.composition.items():
            b = self.codomain(k)
            for c in range(self.n_objects):
                for l in self.hom(b, c):
                    if self.compose(mk, l) != self.compose(m, self.compose(k, l)):
                        raise InvalidCategory("composition is not associative", witness=(m, k, l))
        for (a, b), j in self.inclusions.items():
            if self.arrows[j] != (a, b):
                raise InvalidCategory("inclusion has the wrong domain or codomain", witness=(a, b, j))

    def factorizations(self, m: int) -> list[NormalFactorization]:
        """All normal factorizations of m, in search order."""
        a, b = self.arrows[m]
        found = []
        for c in range(self.n_objects):
            for q in self.hom(a, c):
                if not self.is_retraction(q):
                    continue
                for c2 in range(self.n_objects):
                    if not self.subobject(c2, b):
                        continue
                    j = self.inclusion(c2, b)
                    for u in self.hom(c, c2):
                        if self.is_isomorphism(u) and self.compose(q, u, j) == m:
                            found.append(NormalFactorization(m, q, u, j, self.compose(q, u), c2))
        return found

    def normal_factorization(self, m: int) -> NormalFactorization:
        """
        The first normal factorization of m found by search.
        Raises:
            FactorizationNotFound: If m has none.
        """
        if m not in self._factorizations:
            found = self.factorizations(m)
            if not found:
                raise FactorizationNotFound(f"{self.labels[m]} has no normal factorization", witness=(m,))
            self._factorizations[m] = found[0]
        return self._factorizations[m]

    def epimorphic_part(self, m: int) -> int:
        return self.normal_factorization(m).epimorphic

    def relabel_objects(self, perm: Sequence[int]) -> "FiniteCategory":
        """The same category with object k renamed perm[k]; morphism ids are kept."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.n_objects)):
            raise ValueError(f"{perm} is not a permutation of the objects")
        objects = [""] * self.n_objects
        identities = [0] * self.n_objects
        for k, p in enumerate(perm):
            objects[p] = self.objects[k]
            identities[p] = self.identities[k]
        arrows = [(perm[a], perm[b]) for a, b in self.arrows]
        inclusions = {(perm[a], perm[b]): j for (a, b), j in self.inclusions.items()}
        return FiniteCategory(objects, arrows, self.composition, identities, inclusions, self.labels, self.name, check=False)

    def to_dict(self) -> dict:
        homs = {}
        for (a, b), ms in sorted(self._homs.items()):
            homs[f"{self.objects[a]} -> {self.objects[b]}"] = [self.labels[m] for m in ms]
        return {
            "name": self.name,
            "side": self.side,
            "objects": list(self.objects),
            "morphisms": len(self.arrows),
            "hom_sets": homs,
            "inclusions": [[self.objects[a], self.objects[b]] for (a, b) in sorted(self.inclusions)],
        }


def _nc1(C: FiniteCategory):
    for a in range(C.n_objects):
        if C.inclusions.get((a, a)) != C.identities[a]:
            return (a,), "the identity is not the inclusion j(a, a)"
    for (a, b), j in C.inclusions.items():
        if a != b and (b, a) in C.inclusions:
            return (a, b), "subobject relation is not antisymmetric"
        for (b2, c), k in C.inclusions.items():
            if b2 == b:
                if (a, c) not in C.inclusions:
                    return (a, b, c), "subobject relation is not transitive"
                if C.compose(j, k) != C.inclusions[(a, c)]:
                    return (a, b, c), "j(a, b) j(b, c) is not j(a, c)"
        if not C.is_monomorphism(j):
            return (a, b), "inclusion is not a monomorphism"
    return None, ""


def verify_NC(C: FiniteCategory, caps=None) -> GroupoidReport:
    """
    Checks (NC1) category with subobjects, (NC2) inclusions split, (NC3)
    normal factorizations exist and (NC4) an identity cone at every object.
    Raises:
        CapExceeded: If NC4 needs a cone search beyond `caps.cone_objects`.
    """
    from .cones import identity_cone

    report = GroupoidReport()
    witness, detail = _nc1(C)
    report.results["NC1"] = AxiomResult("NC1", witness is None, witness, detail)

    unsplit = [(a, b) for (a, b), j in sorted(C.inclusions.items()) if not any(C.compose(j, q) == C.identities[a] for q in C.hom(b, a))]
    report.results["NC2"] = AxiomResult(
        "NC2", not unsplit, unsplit[0] if unsplit else None, "inclusion does not split" if unsplit else ""
    )

    report.results["NC3"] = AxiomResult("NC3", True)
    for m in range(len(C)):
        try:
            factorization = C.normal_factorization(m)
        except FactorizationNotFound:
            report.results["NC3"] = AxiomResult("NC3", False, (m,), f"{C.labels[m]} has no normal factorization")
            break
        if C.compose(factorization.retraction, factorization.isomorphism, factorization.inclusion) != m:
            report.results["NC3"] = AxiomResult("NC3", False, (m,), "factorization does not compose back")
            break

    report.results["NC4"] = AxiomResult("NC4", True)
    for c in range(C.n_objects):
        if identity_cone(C, c, caps) is None:
            report.results["NC4"] = AxiomResult("NC4", False, (c,), f"no normal cone is the identity at {C.objects[c]}")
            break
    logger.debug(f"NC axioms of {C!r}: {'pass' if report.passed else 'fail'}")
    return report


def from_table(objects, arrows, table, identities, inclusions, labels=None, name=None) -> FiniteCategory:
    """
    Builds a category from a nested composition table, read as table[m][n]
    on composable pairs only.
    """
    composition = {}
    for m, n in itertools.product(range(len(arrows)), repeat=2):
        if arrows[m][1] == arrows[n][0]:
            composition[(m, n)] = table[m][n]
    return FiniteCategory(objects, arrows, composition, identities, inclusions, labels, name)
