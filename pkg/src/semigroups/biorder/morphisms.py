"""
Biorder isomorphisms: bijections preserving ω^r, ω^l (both directions) and
every basic product.

The same backtracking search runs between whole biorders and between
subsets of them, which is how ω-isomorphisms ω(e) -> ω(f) are enumerated.
"""
from __future__ import annotations

import logging
from typing import Iterator, Optional, Sequence

from .biordered_set import BiorderedSet

logger = logging.getLogger(__name__)


def _signatures(E: BiorderedSet, members: Sequence[int]) -> dict[int, tuple]:
    """Per-member counts inside the subset: ω^r/ω^l up and down degrees and |ω(g)|."""
    sub = list(members)
    out = {}
    for g in sub:
        out[g] = (
            int(E.omega_r[sub, g].sum()), int(E.omega_r[g, sub].sum()),
            int(E.omega_l[sub, g].sum()), int(E.omega_l[g, sub].sum()),
            int(E.omega[sub, g].sum()),
            int(E.R[g, sub].sum()), int(E.L[g, sub].sum()),
        )
    return out


def _compatible(E, F, g, g2, h, h2) -> bool:
    return (
        E.omega_r[g, h] == F.omega_r[g2, h2] and E.omega_r[h, g] == F.omega_r[h2, g2]
        and E.omega_l[g, h] == F.omega_l[g2, h2] and E.omega_l[h, g] == F.omega_l[h2, g2]
    )


def preserves_products(E: BiorderedSet, F: BiorderedSet, phi: dict) -> bool:
    """True iff phi(gh) = phi(g)phi(h) for every basic product inside its domain."""
    for g, g2 in phi.items():
        for h, h2 in phi.items():
            gh = E._prod[g][h]
            if gh is None or gh not in phi:
                continue
            if F._prod[g2][h2] != phi[gh]:
                return False
    return True


def iter_biorder_maps(E: BiorderedSet, domain: Sequence[int], F: BiorderedSet, codomain: Sequence[int]) -> Iterator[dict]:
    """
    Yields every bijection domain -> codomain (as a dict) that preserves both
    quasi-orders in both directions and the basic products among domain
    members. Yields nothing when the sizes differ.
    """
    domain, codomain = list(domain), list(codomain)
    if len(domain) != len(codomain):
        return
    sig_e, sig_f = _signatures(E, domain), _signatures(F, codomain)
    if sorted(sig_e.values()) != sorted(sig_f.values()):
        return
    candidates = {g: [h for h in codomain if sig_f[h] == sig_e[g]] for g in domain}
    order = sorted(domain, key=lambda g: (len(candidates[g]), g))
    phi: dict = {}
    used: set = set()

    def search(i):
        if i == len(order):
            if preserves_products(E, F, phi):
                yield dict(phi)
            return
        g = order[i]
        for g2 in candidates[g]:
            if g2 in used:
                continue
            if all(_compatible(E, F, g, g2, h, h2) for h, h2 in phi.items()):
                phi[g] = g2
                used.add(g2)
                yield from search(i + 1)
                del phi[g]
                used.discard(g2)

    yield from search(0)


def are_biorder_isomorphic(E: BiorderedSet, F: BiorderedSet) -> Optional[tuple[int, ...]]:
    """Returns phi with phi[e] the image of e, or None."""
    if E.size != F.size:
        return None
    for phi in iter_biorder_maps(E, range(E.size), F, range(F.size)):
        return tuple(phi[e] for e in range(E.size))
    return None


def is_biorder_isomorphism(E: BiorderedSet, F: BiorderedSet, phi: Sequence[int]) -> bool:
    if E.size != F.size or sorted(phi) != list(range(F.size)):
        return False
    mapping = dict(enumerate(phi))
    pairs = [(g, h) for g in range(E.size) for h in range(E.size)]
    if not all(_compatible(E, F, g, mapping[g], h, mapping[h]) for g, h in pairs):
        return False
    return preserves_products(E, F, mapping)
