"""
Isomorphism testing by backtracking over idempotent-respecting bijections.

Candidates are pruned by per-element invariants built from Green's class
sizes and power structure; every tentative assignment is propagated through
products with the elements already mapped.
"""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from .semigroup import FiniteSemigroup

logger = logging.getLogger(__name__)


def _power_data(S: FiniteSemigroup, x: int) -> tuple[int, int]:
    """(index, period) of the monogenic subsemigroup generated by x."""
    seen = {}
    power, k = x, 1
    while power not in seen:
        seen[power] = k
        power = S.mul(power, x)
        k += 1
    index = seen[power]
    return index, k - index


def element_invariants(S: FiniteSemigroup) -> list[tuple]:
    def compute():
        g = S.green
        sizes = [g.class_sizes(rel) for rel in ("r", "l", "h", "d")]
        T = S.table
        right_fix = (T == np.arange(S.order)[:, None]).sum(axis=1)
        left_fix = (T == np.arange(S.order)[None, :]).sum(axis=0)
        return [
            (
                S.is_idempotent(x),
                sizes[0][x], sizes[1][x], sizes[2][x], sizes[3][x],
                _power_data(S, x),
                int(right_fix[x]), int(left_fix[x]),
            )
            for x in range(S.order)
        ]
    return S._cached("invariants", compute)


def is_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup, phi) -> bool:
    phi = np.asarray(phi, dtype=np.int64)
    if S.order != T.order or sorted(phi.tolist()) != list(range(T.order)):
        return False
    return bool(np.array_equal(phi[S.table], T.table[np.ix_(phi, phi)]))


def _extend(S, T, inv_s, inv_t, phi, used, assigned, x, y):
    """Adds x -> y and everything it forces; returns None on conflict."""
    phi = list(phi)
    used = set(used)
    assigned = list(assigned)
    srows, trows = S.rows, T.rows
    queue = [(x, y)]
    while queue:
        a, b = queue.pop()
        if phi[a] == b:
            continue
        if phi[a] != -1 or b in used or inv_s[a] != inv_t[b]:
            return None
        phi[a] = b
        used.add(b)
        assigned.append(a)
        for c in assigned:
            pc = phi[c]
            queue.append((srows[a][c], trows[b][pc]))
            queue.append((srows[c][a], trows[pc][b]))
    return phi, used, assigned


def are_isomorphic(S: FiniteSemigroup, T: FiniteSemigroup) -> Optional[tuple[int, ...]]:
    """
    Returns a multiplicative bijection phi (phi[x] is the image of x) or None.
    """
    if S.order != T.order or len(S.idempotents) != len(T.idempotents):
        return None
    inv_s, inv_t = element_invariants(S), element_invariants(T)
    if sorted(inv_s) != sorted(inv_t):
        return None

    candidates = {}
    for b, key in enumerate(inv_t):
        candidates.setdefault(key, []).append(b)
    order = sorted(range(S.order), key=lambda a: (len(candidates[inv_s[a]]), a))

    def search(state):
        phi, used, assigned = state
        for a in order:
            if phi[a] == -1:
                break
        else:
            return phi
        for b in candidates[inv_s[a]]:
            if b in used:
                continue
            extended = _extend(S, T, inv_s, inv_t, phi, used, assigned, a, b)
            if extended is not None:
                found = search(extended)
                if found is not None:
                    return found
        return None

    found = search(([-1] * S.order, set(), []))
    if found is None:
        return None
    if not is_isomorphism(S, T, found):
        raise AssertionError(f"isomorphism search returned a non-multiplicative map {found}")
    return tuple(found)
