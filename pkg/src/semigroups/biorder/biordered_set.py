"""
Biordered sets as partial binary algebras.

A biordered set on elements 0..m-1 is stored as two boolean quasi-order
matrices (`omega_r[e, f]` is e ω^r f, `omega_l[e, f]` is e ω^l f) and a
basic-product table with an explicit definedness mask, so an undefined
product can never be mistaken for element 0.
"""
from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..core.semigroup import FiniteSemigroup
from ..errors import DomainConditionFailed, InvalidBiorder, TheoremViolation

logger = logging.getLogger(__name__)


def _transitivity_witness(rel: np.ndarray) -> Optional[tuple[int, int, int]]:
    closure = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
    bad = np.argwhere(closure & ~rel)
    if not bad.size:
        return None
    e, g = (int(v) for v in bad[0])
    f = int(np.flatnonzero(rel[e] & rel[:, g])[0])
    return e, f, g


@dataclass(frozen=True)
class Origin:
    """Back-reference to the semigroup a biorder was read from."""
    semigroup: FiniteSemigroup
    elements: tuple  # E index -> semigroup element


class BiorderedSet:
    """
    Args:
        omega_r, omega_l: m×m boolean matrices of the two quasi-orders.
        products: m×m integer matrix of basic products (ignored where undefined).
        defined: m×m boolean definedness mask.
        origin (Origin): Optional back-reference to a semigroup.
        labels: Optional display names.
    Raises:
        InvalidBiorder: If a relation is not reflexive or not transitive, or
            a defined product lies outside 0..m-1.
    """
    def __init__(self, omega_r, omega_l, products, defined, origin: Optional[Origin] = None, labels: Optional[Sequence[str]] = None):
        omega_r = np.asarray(omega_r, dtype=bool)
        omega_l = np.asarray(omega_l, dtype=bool)
        products = np.asarray(products, dtype=np.int64)
        defined = np.asarray(defined, dtype=bool)
        m = omega_r.shape[0] if omega_r.ndim == 2 else -1
        for name, arr in (("omega_r", omega_r), ("omega_l", omega_l), ("products", products), ("defined", defined)):
            if arr.shape != (m, m) or m < 1:
                raise TypeError(f"{name} must be a non-empty square matrix of one common size, got {arr.shape}")
        for name, rel in (("omega_r", omega_r), ("omega_l", omega_l)):
            missing = np.flatnonzero(~np.diag(rel))
            if missing.size:
                raise InvalidBiorder(f"{name} is not reflexive at {missing[0]}", witness=(int(missing[0]),))
            witness = _transitivity_witness(rel)
            if witness is not None:
                raise InvalidBiorder(f"{name} is not transitive at {witness}", witness=witness)
        bad = np.argwhere(defined & ((products < 0) | (products >= m)))
        if bad.size:
            e, f = (int(v) for v in bad[0])
            raise InvalidBiorder(f"product ({e},{f}) = {products[e, f]} out of range", witness=(e, f))
        products = np.where(defined, products, 0)
        for arr in (omega_r, omega_l, products, defined):
            arr.setflags(write=False)

        self.size = m
        self.omega_r = omega_r
        self.omega_l = omega_l
        self.products = products
        self.defined = defined
        self.omega = omega_r & omega_l
        self.R = omega_r & omega_r.T
        self.L = omega_l & omega_l.T
        self.origin = origin
        self.labels = tuple(labels) if labels is not None else None
        self._prod = tuple(
            tuple(int(products[e, f]) if defined[e, f] else None for f in range(m)) for e in range(m)
        )
        self._lock = threading.RLock()
        self._cache = {}

    def _cached(self, key: str, builder):
        try:
            return self._cache[key]
        except KeyError:
            pass
        with self._lock:
            if key not in self._cache:
                self._cache[key] = builder()
            return self._cache[key]

    def __repr__(self):
        return f"<BiorderedSet size={self.size}>"

    def __len__(self):
        return self.size

    def label(self, e: int) -> str:
        if self.labels is not None:
            return self.labels[e]
        if self.origin is not None:
            return self.origin.semigroup.label(self.origin.elements[e])
        return str(e)

    def is_defined(self, e: int, f: int) -> bool:
        return self._prod[e][f] is not None

    def product(self, e: int, f: int) -> int:
        value = self._prod[e][f]
        if value is None:
            raise DomainConditionFailed(f"basic product {e}·{f} is not defined", witness=(e, f))
        return value

    def basic_domain(self) -> np.ndarray:
        """The (B1) domain: pairs related one way or the other by ω^r or ω^l."""
        return self.omega_l | self.omega_l.T | self.omega_r | self.omega_r.T

    def omega_r_ideal(self, e: int) -> list[int]:
        """ω^r(e) = {f : f ω^r e}."""
        return [int(f) for f in np.flatnonzero(self.omega_r[:, e])]

    def omega_l_ideal(self, e: int) -> list[int]:
        return [int(f) for f in np.flatnonzero(self.omega_l[:, e])]

    def omega_ideal(self, e: int) -> list[int]:
        return [int(f) for f in np.flatnonzero(self.omega[:, e])]

    def r_related(self, e: int, f: int) -> bool:
        return bool(self.R[e, f])

    def l_related(self, e: int, f: int) -> bool:
        return bool(self.L[e, f])

    def is_semilattice(self) -> bool:
        return bool(np.array_equal(self.omega_r, self.omega_l))

    def element(self, e: int) -> int:
        """The semigroup element behind e (requires an origin)."""
        if self.origin is None:
            raise ValueError("biordered set has no origin semigroup")
        return self.origin.elements[e]

    def index_of(self, x: int) -> int:
        if self.origin is None:
            raise ValueError("biordered set has no origin semigroup")
        return self.origin.elements.index(x)

    def restrict(self, elements) -> tuple["BiorderedSet", list[int]]:
        """
        The induced biorder on a subset closed under the basic products among
        its members (e.g. an ω-ideal). Returns it with new -> old indices.
        """
        members = sorted(set(int(e) for e in elements))
        index = {e: i for i, e in enumerate(members)}
        sub = np.ix_(members, members)
        products = np.zeros((len(members), len(members)), dtype=np.int64)
        defined = self.defined[sub].copy()
        for i, e in enumerate(members):
            for j, f in enumerate(members):
                if defined[i, j]:
                    ef = self._prod[e][f]
                    if ef not in index:
                        raise DomainConditionFailed(f"subset not closed: {e}·{f} = {ef}", witness=(e, f, ef))
                    products[i, j] = index[ef]
        origin = None
        if self.origin is not None:
            origin = Origin(self.origin.semigroup, tuple(self.origin.elements[e] for e in members))
        labels = None if self.labels is None else [self.labels[e] for e in members]
        restricted = BiorderedSet(self.omega_r[sub], self.omega_l[sub], products, defined, origin=origin, labels=labels)
        return restricted, members


def extract_biorder(S: FiniteSemigroup) -> BiorderedSet:
    """
    E(S) with e ω^r f iff fe = e, e ω^l f iff ef = e, and the products on the
    (B1) domain read off the Cayley table. Works for any finite semigroup.
    """
    def build():
        E = np.asarray(S.idempotents, dtype=np.int64)
        sub = S.table[np.ix_(E, E)]            # sub[i, j] = e_i e_j
        omega_r = sub.T == E[:, None]          # e_j e_i = e_i
        omega_l = sub == E[:, None]            # e_i e_j = e_i
        defined = omega_l | omega_l.T | omega_r | omega_r.T
        position = np.full(S.order, -1, dtype=np.int64)
        position[E] = np.arange(len(E))
        products = position[sub]
        bad = np.argwhere(defined & (products < 0))
        if bad.size:
            i, j = (int(v) for v in bad[0])
            raise TheoremViolation(f"basic product of idempotents {E[i]}, {E[j]} is not idempotent", witness=(int(E[i]), int(E[j])))
        return BiorderedSet(omega_r, omega_l, products, defined, origin=Origin(S, tuple(int(e) for e in E)))
    return S._cached("biorder", build)


def _parse_bool_row(line: str, m: int) -> list[bool]:
    tokens = line.split() if len(line.split()) > 1 else list(line.strip())
    if len(tokens) != m or any(t not in "01" for t in tokens):
        raise ValueError(f"expected {m} entries of 0/1, got {line!r}")
    return [t == "1" for t in tokens]


def parse_biorder(text: str) -> BiorderedSet:
    """
    The ".bos" format: |E|; |E| rows of ω^r as 0/1; blank line; |E| rows of
    ω^l; blank line; |E| rows of basic products with "-" for undefined.
    Blank and "#" lines are skipped, except "# labels: ...".
    """
    labels = None
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.lower().startswith("# labels:"):
                labels = line[len("# labels:"):].split()
            continue
        lines.append(line)
    if not lines:
        raise ValueError("empty biorder file")
    m = int(lines[0])
    if len(lines) != 1 + 3 * m:
        raise ValueError(f"expected {3 * m} rows after the header, got {len(lines) - 1}")
    omega_r = [_parse_bool_row(line, m) for line in lines[1:1 + m]]
    omega_l = [_parse_bool_row(line, m) for line in lines[1 + m:1 + 2 * m]]
    products = np.zeros((m, m), dtype=np.int64)
    defined = np.zeros((m, m), dtype=bool)
    for e, line in enumerate(lines[1 + 2 * m:]):
        tokens = line.split()
        if len(tokens) != m:
            raise ValueError(f"product row {e} needs {m} entries, got {line!r}")
        for f, token in enumerate(tokens):
            if token != "-":
                products[e, f] = int(token)
                defined[e, f] = True
    return BiorderedSet(omega_r, omega_l, products, defined, labels=labels)


def read_biorder(path) -> BiorderedSet:
    with open(path, "r", encoding="utf-8") as f:
        return parse_biorder(f.read())


def format_biorder(E: BiorderedSet) -> str:
    m = E.size
    out = [str(m)]
    out += [" ".join("1" if v else "0" for v in row) for row in E.omega_r]
    out.append("")
    out += [" ".join("1" if v else "0" for v in row) for row in E.omega_l]
    out.append("")
    out += [" ".join(str(E._prod[e][f]) if E.is_defined(e, f) else "-" for f in range(m)) for e in range(m)]
    if E.labels is not None or E.origin is not None:
        out.append("# labels: " + " ".join(E.label(e) for e in range(m)))
    return "\n".join(out) + "\n"


def write_biorder(E: BiorderedSet, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_biorder(E))
