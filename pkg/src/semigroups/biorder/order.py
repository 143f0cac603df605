"""
Translations of a biordered set, the natural partial order on a regular
semigroup, and the six equivalent characterizations of pseudo-inverse
(locally inverse) semigroups.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import asdict, dataclass, field

import numpy as np

from ..core.semigroup import FiniteSemigroup, is_inverse, require_regular
from ..errors import TheoremViolation
from .biordered_set import BiorderedSet, extract_biorder
from .sandwich import sandwich_intrinsic, sandwich_semigroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Translations:
    """fτ^r(e) = fe on ω^r(e) and fτ^l(e) = ef on ω^l(e)."""
    e: int
    right: dict
    left: dict


def tau_translations(E: BiorderedSet, e: int) -> Translations:
    right = {f: E.product(f, e) for f in E.omega_r_ideal(e)}
    left = {f: E.product(e, f) for f in E.omega_l_ideal(e)}
    return Translations(e, right, left)


def _fail(message: str, witness):
    logger.error(message)
    raise TheoremViolation(message, witness=witness)


def natural_partial_order(S: FiniteSemigroup) -> np.ndarray:
    """
    leq[x, y] is True iff R_x <= R_y and x = fy for some idempotent f ∈ R_x.
    The result is checked to be a partial order restricting to ω on E(S).
    Raises:
        NotRegular: If S is not regular.
        TheoremViolation: If a checked property fails.
    """
    require_regular(S)

    def build():
        T = S.table
        n = S.order
        green = S.green
        E = S.idempotents
        r_order = green.r_order[np.ix_(green.r_class, green.r_class)]
        leq = np.zeros((n, n), dtype=bool)
        for x in range(n):
            fs = [f for f in E if green.r_class[f] == green.r_class[x]]
            leq[x] = r_order[x] & np.any(T[fs] == x, axis=0)

        if not np.all(np.diag(leq)):
            _fail("natural order is not reflexive", (int(np.flatnonzero(~np.diag(leq))[0]),))
        both = np.argwhere(leq & leq.T & ~np.eye(n, dtype=bool))
        if both.size:
            _fail("natural order is not antisymmetric", tuple(int(v) for v in both[0]))
        closure = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
        bad = np.argwhere(closure & ~leq)
        if bad.size:
            _fail("natural order is not transitive", tuple(int(v) for v in bad[0]))
        idx = np.asarray(E, dtype=np.int64)
        sub = T[np.ix_(idx, idx)]
        omega = (sub == idx[:, None]) & (sub.T == idx[:, None])
        if not np.array_equal(leq[np.ix_(idx, idx)], omega):
            i, j = (int(v) for v in np.argwhere(leq[np.ix_(idx, idx)] != omega)[0])
            _fail("natural order does not restrict to ω on idempotents", (int(idx[i]), int(idx[j])))
        leq.setflags(write=False)
        return leq

    return S._cached("natural_order", build)


def _order_witness(S: FiniteSemigroup, leq: np.ndarray):
    """(x, y, z) with x <= y but xz !<= yz or zx !<= zy, or None."""
    T = S.table
    for x, y in np.argwhere(leq):
        right = ~leq[T[x], T[y]]
        left = ~leq[T[:, x], T[:, y]]
        bad = np.flatnonzero(right | left)
        if bad.size:
            return int(x), int(y), int(bad[0])
    return None


def _unique_pair_witness(S: FiniteSemigroup, leq: np.ndarray):
    green = S.green
    for x, y in np.argwhere(leq):
        x, y = int(x), int(y)
        lx, rx = green.members("l", x), green.members("r", x)
        for y1, y2 in itertools.product(green.members("l", y), green.members("r", y)):
            count = sum(1 for x1 in lx for x2 in rx if leq[x1, y1] and leq[x2, y2])
            if count != 1:
                return x, y, y1, y2
    return None


@dataclass
class PseudoInverseRecord:
    pseudo_inverse: bool
    locally_inverse: bool
    omega_e_semilattice: bool
    singleton_sandwich: bool
    order_compatible: bool
    unique_pair_property: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def conditions(self) -> dict:
        out = asdict(self)
        out.pop("witnesses")
        return out

    def all_equal(self) -> bool:
        return len(set(self.conditions.values())) == 1

    def to_dict(self) -> dict:
        out = self.conditions
        out["witnesses"] = {k: list(v) if isinstance(v, tuple) else v for k, v in self.witnesses.items()}
        return out


def classify_pseudo_inverse(S: FiniteSemigroup) -> PseudoInverseRecord:
    """
    Decides the six equivalent pseudo-inverse conditions independently:
        pseudo_inverse: every intrinsic sandwich set of E(S) is a singleton.
        locally_inverse: eSe is an inverse semigroup for every idempotent e.
        omega_e_semilattice: ω^r and ω^l agree on every ω(e).
        singleton_sandwich: every sandwich set computed in S is a singleton.
        order_compatible: the natural partial order is compatible.
        unique_pair_property: x <= y lifts uniquely to L_x × R_x.
    Raises:
        NotRegular: If S is not regular.
        TheoremViolation: If the conditions disagree.
    """
    require_regular(S)
    E = extract_biorder(S)
    T = S.table
    witnesses = {}

    def first(pairs, test):
        for item in pairs:
            if not test(*item):
                return item
        return None

    pairs = list(itertools.product(range(E.size), repeat=2))
    w = first(pairs, lambda e, f: len(sandwich_intrinsic(E, e, f)) == 1)
    witnesses["pseudo_inverse"] = None if w is None else tuple(E.element(v) for v in w)

    def local_inverse(e):
        sub, _ = S.subsemigroup(np.unique(T[T[e], e]).tolist())
        return is_inverse(sub)
    w = first([(e,) for e in S.idempotents], local_inverse)
    witnesses["locally_inverse"] = w

    def omega_semilattice(e):
        ideal = E.omega_ideal(e)
        sub = np.ix_(ideal, ideal)
        return np.array_equal(E.omega_r[sub], E.omega_l[sub])
    w = first([(e,) for e in range(E.size)], omega_semilattice)
    witnesses["omega_e_semilattice"] = None if w is None else (E.element(w[0]),)

    idem_pairs = list(itertools.product(S.idempotents, repeat=2))
    witnesses["singleton_sandwich"] = first(idem_pairs, lambda e, f: len(sandwich_semigroup(S, e, f)) == 1)

    leq = natural_partial_order(S)
    witnesses["order_compatible"] = _order_witness(S, leq)
    witnesses["unique_pair_property"] = _unique_pair_witness(S, leq)

    record = PseudoInverseRecord(**{name: w is None for name, w in witnesses.items()}, witnesses=witnesses)
    if not record.all_equal():
        _fail(f"pseudo-inverse characterizations disagree on {S!r}: {record.conditions}", record.to_dict())
    logger.debug(f"{S!r}: pseudo-inverse = {record.pseudo_inverse}")
    return record
