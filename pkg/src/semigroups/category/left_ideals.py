"""
The normal category 𝕃(S) of principal left ideals of a regular semigroup,
and its dual ℝ(S) read off the opposite semigroup.

Objects are the L-classes of idempotents, each stood for by its least-index
idempotent e_i. The morphism ρ(e_i, u, e_j): x ↦ xu is stored as the triple
(i, u, j) with u ∈ e_i S e_j; any ρ(e, u, f) with e L e_i and f L e_j equals
(i, e_i u, j).
"""
from __future__ import annotations

import logging

from ..core.semigroup import FiniteSemigroup, require_regular
from ..errors import DomainConditionFailed, FactorizationNotFound, NotIdempotent
from .finite_category import FiniteCategory, NormalFactorization, verify_NC

logger = logging.getLogger(__name__)

LEFT = "L"
RIGHT = "R"


class PrincipalIdealCategory(FiniteCategory):
    """
    𝕃(S) for side L. For side R the same construction runs on the opposite
    semigroup, which gives ℝ(S) with λ(e, u, f): x ↦ ux, u ∈ fSe.
    """

    def __init__(self, S: FiniteSemigroup, side: str = LEFT, check: bool = True):
        if side not in (LEFT, RIGHT):
            raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}, got {side!r}")
        require_regular(S)
        self.S = S
        self.side = side
        self.base = S if side == LEFT else S.opposite()
        base = self.base
        l_class = base.green.l_class

        reps: dict = {}
        for e in base.idempotents:
            reps.setdefault(l_class[e], e)
        self.representatives = tuple(sorted(reps.values()))
        self._object_of_class = {l_class[e]: i for i, e in enumerate(self.representatives)}

        triples = []
        for i, e in enumerate(self.representatives):
            for j, f in enumerate(self.representatives):
                hom = sorted({base.product(e, s, f) for s in range(base.order)})
                triples += [(i, u, j) for u in hom]
        self.triples = tuple(triples)
        self._id = {t: k for k, t in enumerate(triples)}

        composition = {}
        for m, (i, u, j) in enumerate(triples):
            for n, (j2, v, k) in enumerate(triples):
                if j2 == j:
                    composition[(m, n)] = self._id[(i, base.mul(u, v), k)]
        identities = [self._id[(i, e, i)] for i, e in enumerate(self.representatives)]
        inclusions = {}
        for i, e in enumerate(self.representatives):
            for j, f in enumerate(self.representatives):
                if base.mul(e, f) == e:
                    inclusions[(i, j)] = self._id[(i, e, j)]

        if side == LEFT:
            objects = [f"S{S.label(e)}" for e in self.representatives]
            labels = [f"ρ({S.label(self.representatives[i])},{S.label(u)},{S.label(self.representatives[j])})" for i, u, j in triples]
        else:
            objects = [f"{S.label(e)}S" for e in self.representatives]
            labels = [f"λ({S.label(self.representatives[i])},{S.label(u)},{S.label(self.representatives[j])})" for i, u, j in triples]
        name = f"{'𝕃' if side == LEFT else 'ℝ'}({S.name or 'S'})"
        super().__init__(objects, [(i, j) for i, _, j in triples], composition, identities, inclusions, labels, name, check)

    def object_of(self, e: int) -> int:
        """The object Se (eS for side R) of an idempotent e."""
        if not self.base.is_idempotent(e):
            raise NotIdempotent(f"{self.S.label(e)} is not idempotent", witness=(e,))
        return self._object_of_class[self.base.green.l_class[e]]

    def object_of_element(self, a: int) -> int:
        """The object of the idempotents in L_a."""
        return self._object_of_class[self.base.green.l_class[a]]

    def morphism(self, e: int, u: int, f: int) -> int:
        """
        The id of ρ(e, u, f).
        Raises:
            DomainConditionFailed: If u is not in eSf.
        """
        base = self.base
        i, j = self.object_of(e), self.object_of(f)
        if base.product(e, u, f) != u:
            raise DomainConditionFailed(f"{self.S.label(u)} is not in eSf", witness=(e, u, f))
        return self._id[(i, base.mul(self.representatives[i], u), j)]

    def normal_factorization(self, m: int) -> NormalFactorization:
        """
        ρ(e, u, f) = ρ(e, g, g) ρ(g, u, h) ρ(h, h, f) with g ∈ E(R_u) ∩ ω(e)
        and h ∈ E(L_u), both found by scanning the idempotents.
        Raises:
            FactorizationNotFound: If the scan finds no g or h.
        """
        if m in self._factorizations:
            return self._factorizations[m]
        base = self.base
        green = base.green
        i, u, j = self.triples[m]
        e, f = self.representatives[i], self.representatives[j]
        g = next(
            (g for g in base.idempotents
             if green.r_class[g] == green.r_class[u] and base.mul(g, e) == g and base.mul(e, g) == g),
            None,
        )
        h = next((h for h in base.idempotents if green.l_class[h] == green.l_class[u]), None)
        if g is None or h is None:
            raise FactorizationNotFound(f"no idempotent in R_u ∩ ω(e) or L_u for {self.labels[m]}", witness=(m,))
        q = self.morphism(e, g, g)
        iso = self.morphism(g, u, h)
        j_inc = self.morphism(h, h, f)
        if self.compose(q, iso, j_inc) != m:
            raise FactorizationNotFound(f"factorization of {self.labels[m]} does not compose back", witness=(m, g, h))
        result = NormalFactorization(m, q, iso, j_inc, self.compose(q, iso), self.object_of(h))
        self._factorizations[m] = result
        return result

    def to_dict(self) -> dict:
        out = super().to_dict()
        out["representatives"] = [self.S.label(e) for e in self.representatives]
        return out


def build_LS(S: FiniteSemigroup, side: str = LEFT, verify: bool = True, caps=None) -> PrincipalIdealCategory:
    """
    𝕃(S), or ℝ(S) for side R.
    Raises:
        NotRegular: If S is not regular.
        TheoremViolation: If `verify` and an NC axiom fails.
    """
    C = PrincipalIdealCategory(S, side, check=verify)
    if verify:
        verify_NC(C, caps).raise_on_failure(C.name)
    logger.info(f"{C.name}: {C.n_objects} objects, {len(C)} morphisms")
    return C


def build_RS(S: FiniteSemigroup, verify: bool = True, caps=None) -> PrincipalIdealCategory:
    return build_LS(S, RIGHT, verify, caps)


def left_ideal_category(S: FiniteSemigroup) -> PrincipalIdealCategory:
    """𝕃(S), built once per semigroup without verification."""
    return S._cached("left_ideal_category", lambda: PrincipalIdealCategory(S, LEFT, check=False))


def normal_factorize(C: FiniteCategory, m: int) -> NormalFactorization:
    return C.normal_factorization(m)
