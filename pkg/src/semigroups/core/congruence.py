"""
Congruences as partitions of the element indices, and the maximum
idempotent-separating congruence μ used to decide fundamentality.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .green import _class_ids
from .semigroup import FiniteSemigroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CongruenceRelation:
    """
    A partition of 0..n-1. Blocks are sorted tuples, ordered by least member.
    """
    blocks: tuple

    @classmethod
    def from_labels(cls, labels) -> "CongruenceRelation":
        groups = {}
        for x, label in enumerate(labels):
            groups.setdefault(int(label), []).append(x)
        return cls(tuple(sorted(tuple(block) for block in groups.values())))

    @property
    def size(self) -> int:
        return sum(len(block) for block in self.blocks)

    @property
    def block_of(self) -> tuple[int, ...]:
        out = [0] * self.size
        for i, block in enumerate(self.blocks):
            for x in block:
                out[x] = i
        return tuple(out)

    def related(self, a: int, b: int) -> bool:
        block_of = self.block_of
        return block_of[a] == block_of[b]

    def is_identity(self) -> bool:
        return all(len(block) == 1 for block in self.blocks)

    def is_universal(self) -> bool:
        return len(self.blocks) == 1

    def refines(self, labels) -> bool:
        """True iff every block lies inside one class of `labels`."""
        return all(len({labels[x] for x in block}) == 1 for block in self.blocks)

    def compatibility_witness(self, S: FiniteSemigroup) -> Optional[tuple[int, int, int]]:
        """
        Returns (a, b, x) with a ≡ b but xa ≢ xb or ax ≢ bx, or None if the
        partition is a congruence.
        """
        labels = np.asarray(self.block_of)
        T = S.table
        for block in self.blocks:
            a = block[0]
            for b in block[1:]:
                left = np.flatnonzero(labels[T[:, a]] != labels[T[:, b]])
                right = np.flatnonzero(labels[T[a]] != labels[T[b]])
                bad = sorted(left.tolist() + right.tolist())
                if bad:
                    return a, b, int(bad[0])
        return None

    def is_congruence(self, S: FiniteSemigroup) -> bool:
        return self.compatibility_witness(S) is None


def max_idempotent_separating_congruence(S: FiniteSemigroup) -> CongruenceRelation:
    """
    μ: the largest congruence contained in H. Starts from the H-partition and
    splits blocks whose members disagree after multiplying on either side,
    until nothing splits.
    """
    def compute():
        T = S.table
        labels = np.asarray(S.green.h_class, dtype=np.int64)
        count = len(set(labels.tolist()))
        rounds = 0
        while True:
            rounds += 1
            signature = np.hstack([labels[:, None], labels[T], labels[T.T]])
            labels = np.asarray(_class_ids(row.tobytes() for row in signature), dtype=np.int64)
            new_count = int(labels.max()) + 1
            if new_count == count:
                break
            count = new_count
        logger.debug(f"μ stabilised after {rounds} rounds with {count} blocks")
        return CongruenceRelation.from_labels(labels)
    return S._cached("mu", compute)


def is_fundamental(S: FiniteSemigroup) -> bool:
    return max_idempotent_separating_congruence(S).is_identity()


def quotient(S: FiniteSemigroup, congruence: CongruenceRelation) -> FiniteSemigroup:
    """S/ρ with classes numbered as in `congruence.blocks`."""
    witness = congruence.compatibility_witness(S)
    if witness is not None:
        raise ValueError(f"partition is not a congruence, witness {witness}")
    block_of = np.asarray(congruence.block_of)
    reps = [block[0] for block in congruence.blocks]
    table = block_of[S.table[np.ix_(reps, reps)]]
    name = f"{S.name}/ρ" if S.name else None
    return FiniteSemigroup(table, name=name, check=False)
