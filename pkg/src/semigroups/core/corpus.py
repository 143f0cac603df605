"""
Exhaustive enumeration of small semigroups up to isomorphism.

Labeled associative tables are found by filling the table cell by cell in
row-major order and rejecting a value as soon as a fully known triple breaks
associativity. Tables are then keyed by their canonical form (the least
relabeled table over all n! relabelings), which identifies isomorphic tables
exactly at these orders.
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator

import numpy as np

from ..config import Caps, resolve
from .semigroup import FiniteSemigroup

logger = logging.getLogger(__name__)


def _triple_ok(t, x, y, z) -> bool:
    xy = t[x][y]
    if xy < 0:
        return True
    yz = t[y][z]
    if yz < 0:
        return True
    left = t[xy][z]
    if left < 0:
        return True
    right = t[x][yz]
    if right < 0:
        return True
    return left == right


def _consistent(t, n, a, b) -> bool:
    """Checks every known triple that reads the cell (a, b)."""
    for z in range(n):
        if not _triple_ok(t, a, b, z):
            return False
    for x in range(n):
        if not _triple_ok(t, x, a, b):
            return False
    for x in range(n):
        for y in range(n):
            if t[x][y] == a and not _triple_ok(t, x, y, b):
                return False
            if t[x][y] == b and not _triple_ok(t, a, x, y):
                return False
    return True


def associative_tables(n: int, first_values=None) -> Iterator[np.ndarray]:
    """
    Yields every associative n×n table (labeled, not up to isomorphism).
    Args:
        first_values: Restricts the value of cell (0, 0); used to split work.
    """
    t = [[-1] * n for _ in range(n)]
    cells = n * n
    first_values = range(n) if first_values is None else first_values

    def fill(pos):
        if pos == cells:
            yield np.array(t, dtype=np.int64)
            return
        a, b = divmod(pos, n)
        values = first_values if pos == 0 else range(n)
        for v in values:
            t[a][b] = int(v)
            if _consistent(t, n, a, b):
                yield from fill(pos + 1)
        t[a][b] = -1

    yield from fill(0)


def canonical_form(table: np.ndarray) -> bytes:
    n = table.shape[0]
    best = None
    for perm in itertools.permutations(range(n)):
        p = np.asarray(perm, dtype=np.int64)
        q = np.argsort(p)
        relabeled = p[table[np.ix_(q, q)]].astype(np.uint8).tobytes()
        if best is None or relabeled < best:
            best = relabeled
    return best


def _canonical_forms(n: int, first_values) -> list[bytes]:
    return [canonical_form(table) for table in associative_tables(n, first_values)]


def canonical_tables(n: int, max_workers: int = 1) -> list[bytes]:
    """
    Sorted canonical forms of all semigroups of order n. Work is split on the
    value of cell (0, 0); chunks are merged in input order.
    """
    if max_workers == 1:
        forms = _canonical_forms(n, range(n))
    else:
        chunks = [chunk.tolist() for chunk in np.array_split(np.arange(n), max_workers) if chunk.size]
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            results = list(executor.map(lambda chunk: _canonical_forms(n, chunk), chunks))
        forms = [form for chunk in results for form in chunk]
    return sorted(set(forms))


def enumerate_corpus(max_order: int, caps: Caps | None = None, max_workers: int = 1) -> Iterator[FiniteSemigroup]:
    """
    Streams every semigroup of order 1..max_order once per isomorphism class,
    ordered by (order, canonical table).
    Raises:
        CapExceeded: If max_order exceeds `caps.corpus_max_order`.
    """
    if not isinstance(max_workers, int) or max_workers < 1:
        raise ValueError(f"max_workers must be a positive int, got {max_workers!r}")
    resolve(caps).check("corpus_max_order", max_order)
    for n in range(1, max_order + 1):
        forms = canonical_tables(n, max_workers=max_workers)
        logger.info(f"order {n}: {len(forms)} semigroups up to isomorphism")
        for i, form in enumerate(forms):
            table = np.frombuffer(form, dtype=np.uint8).reshape(n, n).astype(np.int64)
            yield FiniteSemigroup(table, name=f"S{n}_{i}", check=False)
