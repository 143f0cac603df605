"""
ω-ideals, ω-isomorphisms and the groupoid T_E of a regular biordered set.

An ω-isomorphism α: ω(e_α) -> ω(f_α) is a bijection preserving ω^r and ω^l
in both directions and the basic products inside the ideal. Maps act on the
right and compose left to right: αβ means "α, then β".
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..biorder import BiorderedSet, iter_biorder_maps, require_regular_biorder
from ..config import Caps, resolve
from ..errors import DomainConditionFailed, NotChainRelated, TheoremViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OmegaIdeal:
    apex: int
    elements: tuple
    biorder: BiorderedSet = field(compare=False, repr=False)


def omega_ideal(E: BiorderedSet, e: int) -> OmegaIdeal:
    def build():
        restricted, members = E.restrict(E.omega_ideal(e))
        return OmegaIdeal(e, tuple(members), restricted)
    return E._cached(f"omega_ideal:{e}", build)


@dataclass(frozen=True)
class OmegaIso:
    """
    Attributes:
        e (int): Apex of the domain, e_α.
        f (int): Apex of the codomain, f_α.
        pairs (tuple): (g, gα) for every g in ω(e), sorted by g.
    """
    e: int
    f: int
    pairs: tuple
    _map: dict = field(compare=False, hash=False, repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_map", dict(self.pairs))

    @classmethod
    def from_dict(cls, e: int, f: int, mapping: dict) -> "OmegaIso":
        return cls(e, f, tuple(sorted((int(g), int(h)) for g, h in mapping.items())))

    def __call__(self, g: int) -> int:
        try:
            return self._map[g]
        except KeyError:
            raise DomainConditionFailed(f"{g} is not in ω({self.e})", witness=(g, self.e))

    @property
    def domain(self) -> tuple:
        return tuple(g for g, _ in self.pairs)

    @property
    def codomain(self) -> tuple:
        return tuple(sorted(h for _, h in self.pairs))

    def is_identity(self) -> bool:
        return all(g == h for g, h in self.pairs)

    def then(self, other: "OmegaIso") -> "OmegaIso":
        """The composite αβ (α first). Requires f_α = e_β."""
        if self.f != other.e:
            raise DomainConditionFailed(f"cannot compose: f_α = {self.f} but e_β = {other.e}", witness=(self.f, other.e))
        return OmegaIso(self.e, other.f, tuple((g, other._map[h]) for g, h in self.pairs))

    def inverse(self) -> "OmegaIso":
        return OmegaIso.from_dict(self.f, self.e, {h: g for g, h in self.pairs})

    def restrict(self, E: BiorderedSet, g: int) -> "OmegaIso":
        """Set-restriction to ω(g) for g ω e_α."""
        if not E.omega[g, self.e]:
            raise DomainConditionFailed(f"{g} is not in ω({self.e})", witness=(g, self.e))
        return OmegaIso.from_dict(g, self._map[g], {h: self._map[h] for h in E.omega_ideal(g)})

    def to_dict(self) -> dict:
        return {"e": self.e, "f": self.f, "map": [list(pair) for pair in self.pairs]}


def compose(alpha: OmegaIso, beta: OmegaIso) -> OmegaIso:
    return alpha.then(beta)


def identity_iso(E: BiorderedSet, e: int) -> OmegaIso:
    return OmegaIso(e, e, tuple((g, g) for g in E.omega_ideal(e)))


def tau_iso(E: BiorderedSet, e: int, f: int) -> OmegaIso:
    """
    τ(e, f): g ↦ gf when e R f, g ↦ fg when e L f.
    Raises:
        NotChainRelated: Unless e R f or e L f.
    """
    if e == f:
        return identity_iso(E, e)
    if E.R[e, f]:
        return OmegaIso.from_dict(e, f, {g: E.product(g, f) for g in E.omega_ideal(e)})
    if E.L[e, f]:
        return OmegaIso.from_dict(e, f, {g: E.product(f, g) for g in E.omega_ideal(e)})
    raise NotChainRelated(f"{E.label(e)} and {E.label(f)} are neither R- nor L-related", witness=(e, f))


def restrict_left(E: BiorderedSet, g: int, alpha: OmegaIso) -> OmegaIso:
    """
    g∗α for g ω^r e_α or g ω^l e_α: plain restriction when g ω e_α, else
    τ(g, ge)(ge∗α) or τ(g, eg)(eg∗α).
    Raises:
        DomainConditionFailed: If g is in neither ω^r(e_α) nor ω^l(e_α).
    """
    e = alpha.e
    if E.omega[g, e]:
        return alpha.restrict(E, g)
    if E.omega_r[g, e]:
        ge = E.product(g, e)
        return tau_iso(E, g, ge).then(alpha.restrict(E, ge))
    if E.omega_l[g, e]:
        eg = E.product(e, g)
        return tau_iso(E, g, eg).then(alpha.restrict(E, eg))
    raise DomainConditionFailed(f"{E.label(g)} is not in ω^r or ω^l of {E.label(e)}", witness=(g, e))


def _corestrict(E: BiorderedSet, alpha: OmegaIso, h: int) -> OmegaIso:
    """The part of α landing in ω(h), for h ω f_α."""
    return alpha.inverse().restrict(E, h).inverse()


def restrict_right(E: BiorderedSet, alpha: OmegaIso, h: int) -> OmegaIso:
    """
    α∗h, the dual of g∗α: corestriction when h ω f_α, else (α∗hf)τ(hf, h)
    or (α∗fh)τ(fh, h).
    """
    f = alpha.f
    if E.omega[h, f]:
        return _corestrict(E, alpha, h)
    if E.omega_r[h, f]:
        hf = E.product(h, f)
        return _corestrict(E, alpha, hf).then(tau_iso(E, hf, h))
    if E.omega_l[h, f]:
        fh = E.product(f, h)
        return _corestrict(E, alpha, fh).then(tau_iso(E, fh, h))
    raise DomainConditionFailed(f"{E.label(h)} is not in ω^r or ω^l of {E.label(f)}", witness=(h, f))


def _isos_between(E: BiorderedSet, pairs) -> list[OmegaIso]:
    found = []
    for e, f in pairs:
        e, f = int(e), int(f)
        for mapping in iter_biorder_maps(E, E.omega_ideal(e), E, E.omega_ideal(f)):
            if mapping[e] == f:
                found.append(OmegaIso.from_dict(e, f, mapping))
    return found


def _check_groupoid(isos: list[OmegaIso]) -> None:
    known = set(isos)
    for alpha in isos:
        if alpha.inverse() not in known:
            raise TheoremViolation("T_E is not closed under inversion", witness=alpha.to_dict())
    by_domain = {}
    for beta in isos:
        by_domain.setdefault(beta.e, []).append(beta)
    for alpha in isos:
        for beta in by_domain.get(alpha.f, ()):
            if alpha.then(beta) not in known:
                raise TheoremViolation("T_E is not closed under composition", witness=[alpha.to_dict(), beta.to_dict()])


def enumerate_omega_isos(E: BiorderedSet, max_workers: int = 1, caps: Caps | None = None, verify: bool = True) -> list[OmegaIso]:
    """
    All ω-isomorphisms of E, sorted by (e_α, f_α, map).
    Args:
        max_workers (int): Apex pairs are split across this many threads.
        verify (bool): Check closure under inversion and composition.
    Raises:
        NotRegularBiorder: If E fails an axiom.
        CapExceeded: If the number of isomorphisms exceeds `caps.max_omega_isos`.
    """
    if not isinstance(max_workers, int) or max_workers < 1:
        raise ValueError(f"max_workers must be a positive int, got {max_workers!r}")
    require_regular_biorder(E)

    def build():
        sizes = E.omega.sum(axis=0)
        apex_pairs = [(e, f) for e, f in itertools.product(range(E.size), repeat=2) if sizes[e] == sizes[f]]
        if max_workers == 1 or len(apex_pairs) < 2:
            isos = _isos_between(E, apex_pairs)
        else:
            chunks = [chunk for chunk in np.array_split(np.asarray(apex_pairs), max_workers) if len(chunk)]
            with ThreadPoolExecutor(max_workers=max_workers) as executor:
                results = list(executor.map(lambda chunk: _isos_between(E, chunk), chunks))
            isos = [iso for chunk in results for iso in chunk]
        isos.sort(key=lambda iso: (iso.e, iso.f, iso.pairs))
        logger.info(f"T_E has {len(isos)} ω-isomorphisms over {E.size} idempotents")
        return isos

    isos = E._cached("omega_isos", build)
    resolve(caps).check("max_omega_isos", len(isos))
    if verify:
        _check_groupoid(isos)
    return list(isos)
