"""
Sandwich sets, computed in the semigroup and intrinsically in the biorder.
"""
from __future__ import annotations

import logging

import numpy as np

from ..core.semigroup import FiniteSemigroup
from ..errors import NotIdempotent
from .biordered_set import BiorderedSet

logger = logging.getLogger(__name__)


def sandwich_semigroup(S: FiniteSemigroup, e: int, f: int) -> list[int]:
    """
    S(e, f) = {h ∈ E(S) : he = h = fh, ef = ehf}, by a scan of the table.
    Elements are semigroup indices, ascending.
    Raises:
        NotIdempotent: If e or f is not idempotent.
    """
    for x in (e, f):
        if not S.is_idempotent(x):
            raise NotIdempotent(f"{S.label(x)} is not idempotent", witness=(x,))
    T = S.table
    E = np.asarray(S.idempotents, dtype=np.int64)
    keep = (T[E, e] == E) & (T[f, E] == E) & (T[T[e, E], f] == T[e, f])
    return [int(h) for h in E[keep]]


def _preorder(E: BiorderedSet, e: int, f: int):
    """M(e, f) = ω^l(e) ∩ ω^r(f) and the preorder g ≼ h iff eg ω^r eh and gf ω^l hf."""
    M = np.flatnonzero(E.omega_l[:, e] & E.omega_r[:, f])
    eg = np.asarray([E.product(e, int(g)) for g in M], dtype=np.int64)
    gf = np.asarray([E.product(int(g), f) for g in M], dtype=np.int64)
    below = E.omega_r[np.ix_(eg, eg)] & E.omega_l[np.ix_(gf, gf)]
    return M, below


def sandwich_intrinsic(E: BiorderedSet, e: int, f: int) -> list[int]:
    """
    The sandwich set from basic products alone: the ≼-maximal elements of
    M(e, f).
    Notes:
        When ≼ has a greatest element the maximal elements are exactly the
        greatest ones. Otherwise, which happens only on non-regular inputs,
        every maximal element is returned.
    """
    M, below = _preorder(E, e, f)
    if not M.size:
        return []
    maximal = np.all(~below | below.T, axis=1)
    return [int(h) for h in M[maximal]]


def sandwich_table(E: BiorderedSet) -> tuple:
    """All sandwich sets as a nested tuple, computed once per biorder."""
    def build():
        return tuple(
            tuple(tuple(sandwich_intrinsic(E, e, f)) for f in range(E.size)) for e in range(E.size)
        )
    return E._cached("sandwich", build)


def sandwich(E: BiorderedSet, e: int, f: int) -> tuple[int, ...]:
    return sandwich_table(E)[e][f]


def greatest_sandwich(E: BiorderedSet, e: int, f: int) -> tuple[int, ...]:
    """
    The ≼-greatest elements of M(e, f), empty when there are none. This is
    the set the axioms (B5) and (R) quantify over; on a regular biorder it
    equals `sandwich(E, e, f)`.
    """
    def build():
        table = []
        for i in range(E.size):
            row = []
            for j in range(E.size):
                M, below = _preorder(E, i, j)
                row.append(tuple(int(h) for h in M[np.all(below, axis=0)]) if M.size else ())
            table.append(tuple(row))
        return tuple(table)
    return E._cached("greatest_sandwich", build)[e][f]
