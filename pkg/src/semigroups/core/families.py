"""
Generators for the standard families of finite semigroups.

Element orderings (all documented so examples can name elements by index):
    full_transformation(n): all maps {0..n-1} -> {0..n-1} as image tuples,
        lexicographic; maps act on the right, so a·b is "a then b".
        Monoid (identity included).
    symmetric_inverse(n): partial injections as image tuples with -1 for
        "undefined", lexicographic (-1 sorts first); right action. Monoid.
    brandt(n): zero first, then matrix units (i,j) lexicographic. No identity.
    brandt_group(n, g): zero first, then (i,k,j) with k in Z_g, lexicographic.
    rectangular_band(p, q): pairs (i,j) lexicographic, (i,j)(k,l) = (i,l).
    chain_semilattice(k): 0 < 1 < ... < k-1 under min; k-1 is the identity.
    matrix_monoid(dim, q): all dim×dim matrices over GF(q), q in {2, 3},
        row-major entries read as base-q digits, lexicographic. Monoid.
    left_zero(n), right_zero(n): xy = x, resp. xy = y. No identity for n > 1.
    null_plus_zero(n): element 0 is the zero and every product is 0.
    cyclic_group(n): Z_n under addition. Group.
    monogenic(index, period): x, x², ..., x^(index+period-1) in that order.
"""
from __future__ import annotations

import itertools
import logging
from math import comb, factorial
from typing import Callable

import numpy as np

from ..config import Caps, resolve
from .semigroup import FiniteSemigroup

logger = logging.getLogger(__name__)


def _table_from(elements: list, product: Callable) -> np.ndarray:
    index = {element: i for i, element in enumerate(elements)}
    return np.array([[index[product(a, b)] for b in elements] for a in elements], dtype=np.int64)


def full_transformation(n: int) -> FiniteSemigroup:
    maps = list(itertools.product(range(n), repeat=n))
    table = _table_from(maps, lambda a, b: tuple(b[a[i]] for i in range(n)))
    return FiniteSemigroup(table, labels=["".join(map(str, m)) for m in maps], name=f"T{n}", check=False)


def _partial_injections(n: int) -> list[tuple]:
    out = []
    for images in itertools.product(range(-1, n), repeat=n):
        defined = [v for v in images if v >= 0]
        if len(defined) == len(set(defined)):
            out.append(images)
    return out


def symmetric_inverse(n: int) -> FiniteSemigroup:
    maps = _partial_injections(n)
    table = _table_from(maps, lambda a, b: tuple(b[a[i]] if a[i] >= 0 else -1 for i in range(n)))
    labels = ["".join("-" if v < 0 else str(v) for v in m) for m in maps]
    return FiniteSemigroup(table, labels=labels, name=f"I{n}", check=False)


def brandt(n: int) -> FiniteSemigroup:
    elements = [0] + list(itertools.product(range(n), repeat=2))

    def product(a, b):
        if a == 0 or b == 0 or a[1] != b[0]:
            return 0
        return (a[0], b[1])

    labels = ["0"] + [f"e{i + 1}{j + 1}" for i, j in elements[1:]]
    return FiniteSemigroup(_table_from(elements, product), labels=labels, name=f"B{n}", check=False)


def brandt_group(n: int, g: int) -> FiniteSemigroup:
    elements = [0] + list(itertools.product(range(n), range(g), range(n)))

    def product(a, b):
        if a == 0 or b == 0 or a[2] != b[0]:
            return 0
        return (a[0], (a[1] + b[1]) % g, b[2])

    labels = ["0"] + [f"({i + 1},{k},{j + 1})" for i, k, j in elements[1:]]
    return FiniteSemigroup(_table_from(elements, product), labels=labels, name=f"B({n},Z{g})", check=False)


def rectangular_band(p: int, q: int) -> FiniteSemigroup:
    elements = list(itertools.product(range(p), range(q)))
    table = _table_from(elements, lambda a, b: (a[0], b[1]))
    labels = [f"({i + 1},{j + 1})" for i, j in elements]
    return FiniteSemigroup(table, labels=labels, name=f"RB{p}x{q}", check=False)


def chain_semilattice(k: int) -> FiniteSemigroup:
    table = np.minimum.outer(np.arange(k), np.arange(k))
    return FiniteSemigroup(table, name=f"C{k}", check=False)


def matrix_monoid(dim: int, field_order: int) -> FiniteSemigroup:
    if field_order not in (2, 3):
        raise ValueError(f"field_order must be 2 or 3, got {field_order}")
    q = field_order
    count = q ** (dim * dim)
    digits = np.array(list(itertools.product(range(q), repeat=dim * dim)), dtype=np.int64)
    mats = digits.reshape(count, dim, dim)
    products = np.einsum("aij,bjk->abik", mats, mats) % q
    weights = q ** np.arange(dim * dim - 1, -1, -1)
    table = products.reshape(count, count, dim * dim) @ weights
    labels = ["".join(map(str, row)) for row in digits]
    return FiniteSemigroup(table, labels=labels, name=f"M{dim}(F{q})", check=False)


def left_zero(n: int) -> FiniteSemigroup:
    table = np.repeat(np.arange(n)[:, None], n, axis=1)
    return FiniteSemigroup(table, name=f"LZ{n}", check=False)


def right_zero(n: int) -> FiniteSemigroup:
    table = np.repeat(np.arange(n)[None, :], n, axis=0)
    return FiniteSemigroup(table, name=f"RZ{n}", check=False)


def null_plus_zero(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(np.zeros((n, n), dtype=np.int64), name=f"N{n}", check=False)


def cyclic_group(n: int) -> FiniteSemigroup:
    table = np.add.outer(np.arange(n), np.arange(n)) % n
    return FiniteSemigroup(table, name=f"Z{n}", check=False)


def monogenic(index: int, period: int) -> FiniteSemigroup:
    top = index + period - 1

    def power(k):
        return k if k <= top else index + (k - index) % period

    table = [[power(i + j) - 1 for j in range(1, top + 1)] for i in range(1, top + 1)]
    return FiniteSemigroup(table, labels=[f"x^{k}" for k in range(1, top + 1)], name=f"M({index},{period})", check=False)


# kind -> (builder, arity, order formula)
FAMILIES = {
    "full_transformation": (full_transformation, 1, lambda n: n ** n),
    "symmetric_inverse": (symmetric_inverse, 1, lambda n: sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))),
    "brandt": (brandt, 1, lambda n: n * n + 1),
    "brandt_group": (brandt_group, 2, lambda n, g: n * n * g + 1),
    "rectangular_band": (rectangular_band, 2, lambda p, q: p * q),
    "chain_semilattice": (chain_semilattice, 1, lambda k: k),
    "matrix_monoid": (matrix_monoid, 2, lambda d, q: q ** (d * d)),
    "left_zero": (left_zero, 1, lambda n: n),
    "right_zero": (right_zero, 1, lambda n: n),
    "null_plus_zero": (null_plus_zero, 1, lambda n: n),
    "cyclic_group": (cyclic_group, 1, lambda n: n),
    "monogenic": (monogenic, 2, lambda m, r: m + r - 1),
}


def generate_family(kind: str, *params: int, caps: Caps | None = None) -> FiniteSemigroup:
    """
    Builds a member of a named family.
    Args:
        kind (str): One of `FAMILIES`.
        params (int): The family parameters, e.g. `generate_family("brandt", 2)`.
    Raises:
        ValueError: Unknown kind, wrong arity or non-positive parameter.
        CapExceeded: If the order would exceed `caps.max_elements`.
    """
    if kind not in FAMILIES:
        raise ValueError(f"unknown family {kind!r}; choose from {sorted(FAMILIES)}")
    builder, arity, order = FAMILIES[kind]
    if len(params) != arity:
        raise ValueError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    params = tuple(int(p) for p in params)
    if any(p < 1 for p in params):
        raise ValueError(f"{kind} parameters must be positive, got {params}")
    resolve(caps).check("max_elements", order(*params))
    semigroup = builder(*params)
    logger.debug(f"generated {kind}{params} of order {semigroup.order}")
    return semigroup
