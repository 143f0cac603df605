"""
The ordered groupoid G(S) of a regular semigroup and the evaluation functor
ε_S: G(E(S)) -> G(S).

Morphisms are pairs (x, x') with x' an inverse of x, from xx' to x'x.
Vertices are the idempotents of S as semigroup indices.
"""
from __future__ import annotations

import logging
from typing import Sequence

from ..core.semigroup import FiniteSemigroup, inverses_of, require_regular
from ..errors import DomainConditionFailed, TheoremViolation
from .base_groupoid import OrderedGroupoid

logger = logging.getLogger(__name__)


class GroupoidGS(OrderedGroupoid):
    def __init__(self, S: FiniteSemigroup):
        require_regular(S)
        self.S = S
        super().__init__()

    def __setup__(self):
        S = self.S
        self.morphisms = [(x, y) for x in range(S.order) for y in inverses_of(S, x)]
        self.vertices = list(S.idempotents)

    def __repr__(self):
        return f"<GroupoidGS of {self.S!r}: {len(self.morphisms)} morphisms>"

    def domain(self, x) -> int:
        return self.S.mul(x[0], x[1])

    def codomain(self, x) -> int:
        return self.S.mul(x[1], x[0])

    def identity(self, e: int):
        return (e, e)

    def compose(self, x, y):
        if self.codomain(x) != self.domain(y):
            raise DomainConditionFailed(f"{x} and {y} are not composable", witness=(x, y))
        return (self.S.mul(x[0], y[0]), self.S.mul(y[1], x[1]))

    def inverse(self, x):
        return (x[1], x[0])

    def omega(self, e: int, f: int) -> bool:
        S = self.S
        return S.mul(e, f) == e and S.mul(f, e) == e

    def omega_r(self, e: int, f: int) -> bool:
        """e ω^r f iff fe = e."""
        return self.S.mul(f, e) == e

    def omega_l(self, e: int, f: int) -> bool:
        """e ω^l f iff ef = e."""
        return self.S.mul(e, f) == e

    def leq(self, y, x) -> bool:
        """(y, y') <= (x, x') iff yy' ω xx', y = yy'x and y' = x'yy'."""
        S = self.S
        e = self.domain(y)
        return self.omega(e, self.domain(x)) and y[0] == S.mul(e, x[0]) and y[1] == S.mul(x[1], e)

    def restriction(self, e: int, x):
        """e↾(x, x') = (ex, x'e) for e ω xx'."""
        if not self.omega(e, self.domain(x)):
            raise DomainConditionFailed(f"{e} is not in ω(d({x}))", witness=(e,) + tuple(x))
        return (self.S.mul(e, x[0]), self.S.mul(x[1], e))

    def corestriction(self, x, f: int):
        """(x, x')↿f = (xf, fx') for f ω x'x."""
        if not self.omega(f, self.codomain(x)):
            raise DomainConditionFailed(f"{f} is not in ω(r({x}))", witness=tuple(x) + (f,))
        return (self.S.mul(x[0], f), self.S.mul(f, x[1]))

    def epsilon(self, e: int, f: int):
        """ε(e, f) = (ef, fe) for e (R ∪ L) f."""
        return evaluate_chain(self.S, (e, f))

    def extended_restriction(self, e: int, x):
        """
        e∗x = ε(e, e·d(x))(e·d(x)↾x) when e ω^r d(x), and
        ε(e, d(x)·e)(d(x)·e↾x) when e ω^l d(x).
        Raises:
            DomainConditionFailed: If e is in neither ω^r(d(x)) nor ω^l(d(x)).
        """
        d = self.domain(x)
        if self.omega(e, d):
            return self.restriction(e, x)
        if self.omega_r(e, d):
            ed = self.S.mul(e, d)
            return self.compose(self.epsilon(e, ed), self.restriction(ed, x))
        if self.omega_l(e, d):
            de = self.S.mul(d, e)
            return self.compose(self.epsilon(e, de), self.restriction(de, x))
        raise DomainConditionFailed(f"{e} is in neither ω^r nor ω^l of {d}", witness=(e, d))

    def extended_corestriction(self, x, h: int):
        """
        x∗h = (x↿h·r(x))ε(h·r(x), h) when h ω^r r(x), and
        (x↿r(x)·h)ε(r(x)·h, h) when h ω^l r(x).
        """
        r = self.codomain(x)
        if self.omega(h, r):
            return self.corestriction(x, h)
        if self.omega_r(h, r):
            hr = self.S.mul(h, r)
            return self.compose(self.corestriction(x, hr), self.epsilon(hr, h))
        if self.omega_l(h, r):
            rh = self.S.mul(r, h)
            return self.compose(self.corestriction(x, rh), self.epsilon(rh, h))
        raise DomainConditionFailed(f"{h} is in neither ω^r nor ω^l of {r}", witness=(h, r))


def build_GS(S: FiniteSemigroup, verify: bool = True) -> GroupoidGS:
    """
    Raises:
        NotRegular: If S is not regular.
        TheoremViolation: If `verify` and an ordered groupoid axiom fails.
    """
    groupoid = GroupoidGS(S)
    if verify:
        groupoid.check_axioms().raise_on_failure("G(S)")
    logger.info(f"G(S) built with {len(groupoid)} morphisms on {len(groupoid.vertices)} vertices")
    return groupoid


def evaluate_chain(S: FiniteSemigroup, chain: Sequence[int]):
    """
    ε_S([e_1, ..., e_n]) = (e_1 e_2 ... e_n, e_n ... e_2 e_1) for a chain of
    idempotents given as semigroup indices.
    Raises:
        TheoremViolation: If the reversed product is not an inverse.
    """
    chain = [int(e) for e in (chain.vertices if hasattr(chain, "vertices") else chain)]
    x = S.product(*chain)
    x_inv = S.product(*chain[::-1])
    if S.product(x, x_inv, x) != x or S.product(x_inv, x, x_inv) != x_inv:
        raise TheoremViolation("reversed chain product is not an inverse", witness=tuple(chain))
    return (x, x_inv)


def chain_to_semigroup(E, chain) -> list[int]:
    """Maps a chain over extract_biorder(S) to semigroup indices."""
    return [E.element(v) for v in chain]


def groupoid_of(S: FiniteSemigroup) -> GroupoidGS:
    """G(S), built once per semigroup and not verified."""
    return S._cached("groupoid_gs", lambda: GroupoidGS(S))
