"""
E-squares and singular E-squares of a biordered set.

A square [[e, f], [g, h]] satisfies e R f L h R g L e. It is row-singular
when it has the form [[g, h], [eg, eh]] with g, h ∈ ω^l(e) and g R h, and
column-singular for [[g, ge], [h, he]] with g, h ∈ ω^r(e) and g L h.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from ..biorder import BiorderedSet, extract_biorder
from ..core.semigroup import FiniteSemigroup
from ..errors import TheoremViolation
from .gs import evaluate_chain

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ESquare:
    """
    Attributes:
        matrix: ((e, f), (g, h)) as biorder indices.
        kind (str): "row", "column" or "" for a square with no singular form.
        apex (int | None): The idempotent the singular form was read from.
    """
    matrix: tuple
    kind: str = ""
    apex: int | None = None

    @property
    def corners(self) -> tuple:
        (e, f), (g, h) = self.matrix
        return e, f, g, h

    def is_square(self, E: BiorderedSet) -> bool:
        e, f, g, h = self.corners
        return bool(E.R[e, f] and E.L[f, h] and E.R[h, g] and E.L[g, e])

    def is_degenerate(self) -> bool:
        return len(set(self.corners)) < 4

    def to_dict(self, E: BiorderedSet | None = None) -> dict:
        label = E.label if E is not None else str
        return {
            "matrix": [[label(v) for v in row] for row in self.matrix],
            "kind": self.kind,
            "apex": None if self.apex is None else label(self.apex),
        }


def _validated(E: BiorderedSet, square: ESquare) -> ESquare:
    if not square.is_square(E):
        raise TheoremViolation(f"{square.kind}-singular square is not an E-square", witness=square.corners)
    return square


def singular_squares(E, include_trivial: bool = False) -> list[ESquare]:
    """
    All singular E-squares, row-singular ones first, each matrix once.
    Args:
        E: A BiorderedSet, or a FiniteSemigroup whose biorder is used.
        include_trivial (bool): Also keep squares with g = h, whose two rows
            (or columns) coincide.
    """
    if isinstance(E, FiniteSemigroup):
        E = extract_biorder(E)
    found: dict = {}
    for e in range(E.size):
        left = E.omega_l_ideal(e)
        for g, h in itertools.product(left, repeat=2):
            if E.R[g, h] and (include_trivial or g != h):
                square = ESquare(((g, h), (E.product(e, g), E.product(e, h))), "row", e)
                found.setdefault(square.matrix, _validated(E, square))
    for e in range(E.size):
        right = E.omega_r_ideal(e)
        for g, h in itertools.product(right, repeat=2):
            if E.L[g, h] and (include_trivial or g != h):
                square = ESquare(((g, E.product(g, e)), (h, E.product(h, e))), "column", e)
                found.setdefault(square.matrix, _validated(E, square))
    squares = list(found.values())
    logger.debug(f"{len(squares)} singular squares in {E!r}")
    return squares


def check_epsilon_commutative(S: FiniteSemigroup, square: ESquare, E: BiorderedSet | None = None) -> bool:
    """ε(e, f)ε(f, h) = ε(e, g)ε(g, h) in G(S); corners are biorder indices of E(S)."""
    E = extract_biorder(S) if E is None else E
    e, f, g, h = (E.element(v) for v in square.corners)
    return evaluate_chain(S, (e, f, h)) == evaluate_chain(S, (e, g, h))
