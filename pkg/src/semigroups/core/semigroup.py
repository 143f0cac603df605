"""
Finite semigroups given by their Cayley table.

Elements are the dense indices 0..n-1 and `table[a][b]` is the product a·b.
Labels are for display only. No identity is ever adjoined implicitly; code
that needs S¹ (Green's relations) adds it internally.
"""
from __future__ import annotations

import hashlib
import logging
import threading
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Optional, Sequence

import numpy as np

from ..config import Caps, resolve
from ..errors import IndexOutOfRange, NonAssociative, NotRegular

logger = logging.getLogger(__name__)


def associativity_witness(table: np.ndarray) -> Optional[tuple[int, int, int]]:
    """
    Returns the lexicographically least triple (a, b, c) with (ab)c != a(bc),
    or None when the table is associative.
    """
    n = table.shape[0]
    for a in range(n):
        lhs = table[table[a]]       # lhs[b, c] = (ab)c
        rhs = table[a][table]       # rhs[b, c] = a(bc)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return a, int(b), int(c)
    return None


@dataclass
class RegularityWitness:
    """
    Outcome of `is_regular`. Truthy iff the semigroup is regular.
    Attributes:
        regular (bool): Whether every element x has some x' with xx'x = x.
        witness (dict): x -> least x' with xx'x = x, for every x (when regular).
        counterexample (int | None): Least element with no such x'.
    """
    regular: bool
    witness: dict = field(default_factory=dict)
    counterexample: Optional[int] = None

    def __bool__(self):
        return self.regular


class FiniteSemigroup:
    """
    An immutable finite semigroup.
    Args:
        table: n×n array of element indices in [0, n).
        labels: Optional display strings, one per element.
        name: Optional descriptor used in reports.
        check (bool): Verify associativity (always True unless the table is
            known to come from an associative construction).
    Raises:
        TypeError: If the table is not a square integer array.
        IndexOutOfRange: If an entry lies outside [0, n).
        NonAssociative: With the least failing triple as witness.
    """
    def __init__(self, table, labels: Optional[Sequence[str]] = None, name: Optional[str] = None, check: bool = True):
        arr = np.asarray(table)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise TypeError(f"table must be a non-empty square array, got shape {arr.shape}")
        if arr.dtype.kind not in "iu":
            if arr.size and not np.all(np.equal(np.mod(arr, 1), 0)):
                raise TypeError("table entries must be integers")
        arr = arr.astype(np.int64)
        n = arr.shape[0]
        bad = np.argwhere((arr < 0) | (arr >= n))
        if bad.size:
            i, j = (int(v) for v in bad[0])
            raise IndexOutOfRange(f"entry ({i},{j}) = {arr[i, j]} not in [0,{n})", witness=(i, j, int(arr[i, j])))
        if check:
            witness = associativity_witness(arr)
            if witness is not None:
                a, b, c = witness
                raise NonAssociative(f"({a}·{b})·{c} != {a}·({b}·{c})", witness=witness)
        arr.setflags(write=False)
        self.table = arr
        self.order = n
        self._rows = tuple(tuple(int(v) for v in row) for row in arr)
        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
        self.labels = labels
        self.name = name
        self._lock = threading.RLock()
        self._cache = {}

    # derived data is computed once, under the lock
    def _cached(self, key: str, builder: Callable):
        try:
            return self._cache[key]
        except KeyError:
            pass
        with self._lock:
            if key not in self._cache:
                self._cache[key] = builder()
            return self._cache[key]

    def __repr__(self):
        name = f" {self.name}" if self.name else ""
        return f"<FiniteSemigroup{name} order={self.order}>"

    def __eq__(self, other):
        return isinstance(other, FiniteSemigroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __len__(self):
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def product(self, *elements: int) -> int:
        if not elements:
            raise ValueError("product of an empty word is undefined in a semigroup")
        rows = self._rows
        return reduce(lambda x, y: rows[x][y], elements)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def content_hash(self) -> str:
        return hashlib.sha256(self.table.astype("<i8").tobytes()).hexdigest()

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def identity(self) -> Optional[int]:
        def find():
            elems = np.arange(self.order)
            for e in range(self.order):
                if np.array_equal(self.table[e], elems) and np.array_equal(self.table[:, e], elems):
                    return e
            return None
        return self._cached("identity", find)

    @property
    def has_identity(self) -> bool:
        return self.identity is not None

    @property
    def idempotents(self) -> list[int]:
        return self._cached("idempotents", lambda: [int(e) for e in np.flatnonzero(np.diag(self.table) == np.arange(self.order))])

    def is_idempotent(self, x: int) -> bool:
        return self._rows[x][x] == x

    @property
    def green(self):
        from .green import compute_green
        return self._cached("green", lambda: compute_green(self))

    def opposite(self) -> "FiniteSemigroup":
        name = f"{self.name}^op" if self.name else None
        return FiniteSemigroup(self.table.T.copy(), labels=self.labels, name=name, check=False)

    def relabel(self, perm: Sequence[int]) -> "FiniteSemigroup":
        """Returns the isomorphic copy in which element x is renamed perm[x]."""
        p = np.asarray(perm, dtype=np.int64)
        if sorted(p.tolist()) != list(range(self.order)):
            raise ValueError("perm must be a permutation of the element indices")
        q = np.argsort(p)
        table = p[self.table[np.ix_(q, q)]]
        labels = None if self.labels is None else [self.labels[int(i)] for i in q]
        return FiniteSemigroup(table, labels=labels, name=self.name, check=False)

    def subsemigroup(self, elements) -> tuple["FiniteSemigroup", list[int]]:
        """
        Restricts the table to a closed subset.
        Returns:
            (FiniteSemigroup, list): the subsemigroup (elements renumbered in
            ascending order) and the list mapping new index -> old index.
        """
        members = sorted(set(int(x) for x in elements))
        if not members:
            raise ValueError("a subsemigroup must be non-empty")
        index = {x: i for i, x in enumerate(members)}
        table = []
        for a in members:
            row = []
            for b in members:
                ab = self._rows[a][b]
                if ab not in index:
                    raise ValueError(f"subset not closed: {a}·{b} = {ab}")
                row.append(index[ab])
            table.append(row)
        labels = None if self.labels is None else [self.labels[x] for x in members]
        return FiniteSemigroup(table, labels=labels, check=False), members


def build_semigroup(table, labels=None, name=None, caps: Caps | None = None) -> FiniteSemigroup:
    arr = np.asarray(table)
    if arr.ndim >= 1:
        resolve(caps).check("max_elements", int(arr.shape[0]))
    return FiniteSemigroup(arr, labels=labels, name=name)


def idempotents(S: FiniteSemigroup) -> list[int]:
    return list(S.idempotents)


def is_regular(S: FiniteSemigroup) -> RegularityWitness:
    def compute():
        T = S.table
        witness = {}
        for x in range(S.order):
            # candidates y with (xy)x = x
            candidates = np.flatnonzero(T[T[x], x] == x)
            if candidates.size == 0:
                return RegularityWitness(False, {}, x)
            witness[x] = int(candidates[0])
        return RegularityWitness(True, witness, None)
    return S._cached("regular", compute)


def require_regular(S: FiniteSemigroup) -> RegularityWitness:
    result = is_regular(S)
    if not result:
        raise NotRegular(f"element {result.counterexample} has no x' with xx'x = x", witness=(result.counterexample,))
    return result


def inverses_of(S: FiniteSemigroup, x: int) -> list[int]:
    """All x' with xx'x = x and x'xx' = x', ascending."""
    T = S.table
    ys = np.arange(S.order)
    xyx = T[T[x], x]
    yxy = T[T[ys, x], ys]
    return [int(y) for y in np.flatnonzero((xyx == x) & (yxy == ys))]


def is_inverse(S: FiniteSemigroup) -> bool:
    if not is_regular(S):
        return False
    E = S.idempotents
    return all(S.mul(e, f) == S.mul(f, e) for e in E for f in E)
