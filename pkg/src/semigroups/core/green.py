"""
Green's relations of a finite semigroup, computed from principal ideals in S¹.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def _class_ids(keys) -> tuple[int, ...]:
    """Numbers the distinct keys in order of first appearance."""
    ids = {}
    return tuple(ids.setdefault(key, len(ids)) for key in keys)


def right_ideals(S) -> np.ndarray:
    """ideal[x, y] is True iff y ∈ xS¹."""
    n = S.order
    ideal = np.zeros((n, n), dtype=bool)
    ideal[np.repeat(np.arange(n), n), S.table.ravel()] = True
    ideal[np.arange(n), np.arange(n)] = True
    return ideal


def left_ideals(S) -> np.ndarray:
    """ideal[x, y] is True iff y ∈ S¹x."""
    n = S.order
    ideal = np.zeros((n, n), dtype=bool)
    ideal[np.repeat(np.arange(n), n), S.table.T.ravel()] = True
    ideal[np.arange(n), np.arange(n)] = True
    return ideal


def _containment(ideals: np.ndarray, reps: list[int]) -> np.ndarray:
    """order[i, j] is True iff the ideal of rep i lies inside the ideal of rep j."""
    sub = ideals[reps]
    return ~np.any(sub[:, None, :] & ~sub[None, :, :], axis=2)


def _join(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    parent = list(range(len(a)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (a, b):
        first = {}
        for x, block in enumerate(part):
            if block in first:
                ra, rb = find(first[block]), find(x)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
            else:
                first[block] = x
    return _class_ids(find(x) for x in range(len(a)))


@dataclass(frozen=True)
class GreenData:
    """
    Per-element class identifiers for R, L, H, D and J, numbered by first
    appearance, plus the partial orders R_i <= R_j and L_i <= L_j on class ids.
    """
    r_class: tuple
    l_class: tuple
    h_class: tuple
    d_class: tuple
    j_class: tuple
    r_order: np.ndarray = field(compare=False, repr=False)
    l_order: np.ndarray = field(compare=False, repr=False)

    def members(self, relation: str, x: int) -> list[int]:
        ids = getattr(self, f"{relation}_class")
        return [y for y, c in enumerate(ids) if c == ids[x]]

    def class_sizes(self, relation: str) -> tuple[int, ...]:
        ids = getattr(self, f"{relation}_class")
        counts = np.bincount(np.asarray(ids))
        return tuple(int(counts[c]) for c in ids)

    def r_leq(self, x: int, y: int) -> bool:
        return bool(self.r_order[self.r_class[x], self.r_class[y]])

    def l_leq(self, x: int, y: int) -> bool:
        return bool(self.l_order[self.l_class[x], self.l_class[y]])


def compute_green(S) -> GreenData:
    right = right_ideals(S)
    left = left_ideals(S)
    two_sided = (right.astype(np.int64) @ left.astype(np.int64)) > 0

    r_class = _class_ids(row.tobytes() for row in right)
    l_class = _class_ids(row.tobytes() for row in left)
    h_class = _class_ids(zip(r_class, l_class))
    d_class = _join(r_class, l_class)
    j_class = _class_ids(row.tobytes() for row in two_sided)

    r_reps = [r_class.index(c) for c in range(max(r_class) + 1)]
    l_reps = [l_class.index(c) for c in range(max(l_class) + 1)]
    return GreenData(
        r_class=r_class,
        l_class=l_class,
        h_class=h_class,
        d_class=d_class,
        j_class=j_class,
        r_order=_containment(right, r_reps),
        l_order=_containment(left, l_reps),
    )
