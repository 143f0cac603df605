"""
A bounded decision procedure for the congruence ~Γ on E-chains generated by
a cycle set Γ: c ~Γ c' when one chain is reached from the other by inserting
and deleting cycles of Γ at vertices equal to their base.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

from ..biorder import BiorderedSet
from ..config import Caps, resolve
from ..errors import DomainConditionFailed, TheoremViolation
from ..groupoid import EChain, reduce_chain
from .cycles import CycleSet

logger = logging.getLogger(__name__)

INSERT = "insert"
DELETE = "delete"


@dataclass(frozen=True)
class Step:
    """
    `op` applied at `position` with `cycle` turns the previous chain into
    `result`. A deletion is the inverse of inserting `cycle` into `result`.
    """
    op: str
    position: int
    cycle: EChain
    result: EChain

    def to_dict(self) -> dict:
        return {"op": self.op, "position": self.position, "cycle": list(self.cycle), "result": list(self.result)}


@dataclass
class Equivalent:
    path: list = field(default_factory=list)
    explored: int = 0

    def __bool__(self):
        return True

    def to_dict(self) -> dict:
        return {"verdict": "Equivalent", "explored": self.explored, "path": [s.to_dict() for s in self.path]}


@dataclass
class NotFoundWithinBudget:
    explored: int = 0

    def __bool__(self):
        return False

    def to_dict(self) -> dict:
        return {"verdict": "NotFoundWithinBudget", "explored": self.explored}


def insert_cycle(E: BiorderedSet, chain: EChain, position: int, cycle: EChain) -> EChain:
    """
    Raises:
        DomainConditionFailed: If the cycle is not based at chain[position].
    """
    if chain[position] != cycle.d:
        raise DomainConditionFailed(
            f"cycle based at {cycle.d} inserted at vertex {chain[position]}", witness=(position,) + tuple(cycle)
        )
    vertices = chain.vertices
    return reduce_chain(E, vertices[: position + 1] + cycle.vertices[1:] + vertices[position + 1 :])


def _moves(E: BiorderedSet, chain: EChain, by_base: dict, max_length: int):
    for position, v in enumerate(chain.vertices):
        for cycle in by_base.get(v, ()):
            result = insert_cycle(E, chain, position, cycle)
            if len(result) <= max_length:
                yield position, cycle, result


def chain_equiv_oracle(
    E: BiorderedSet,
    gamma: CycleSet,
    c,
    c_prime,
    budget: int | None = None,
    max_length: int | None = None,
    caps: Caps | None = None,
):
    """
    Bidirectional breadth-first search over insertions from both ends.
    Args:
        budget (int): Number of chains to visit before giving up
            (default `caps.oracle_budget`).
        max_length (int): Longest intermediate chain (default the longer
            input plus `caps.chain_length`).
    Returns:
        Equivalent with a replayable path from c to c', or NotFoundWithinBudget.
    Raises:
        DomainConditionFailed: If c and c' are not co-bounded.
    """
    caps = resolve(caps)
    budget = caps.oracle_budget if budget is None else budget
    start, goal = reduce_chain(E, tuple(c)), reduce_chain(E, tuple(c_prime))
    if start.d != goal.d or start.r != goal.r:
        raise DomainConditionFailed("chains are not co-bounded", witness=(tuple(start), tuple(goal)))
    max_length = max(len(start), len(goal)) + caps.chain_length if max_length is None else max_length
    if start == goal:
        return Equivalent([], 1)

    by_base: dict = {}
    for cycle in gamma.sorted():
        by_base.setdefault(cycle.d, []).append(cycle)

    # chain -> (previous chain, position, cycle), one map per direction
    parents = ({start: None}, {goal: None})
    frontiers = (deque([start]), deque([goal]))
    explored = 2
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, theirs = parents[side], parents[1 - side]
        for _ in range(len(frontiers[side])):
            chain = frontiers[side].popleft()
            for position, cycle, result in _moves(E, chain, by_base, max_length):
                if result in mine:
                    continue
                mine[result] = (chain, position, cycle)
                explored += 1
                if result in theirs:
                    path = _join(parents, result)
                    logger.debug(f"chains joined after {explored} visits, path of {len(path)} steps")
                    return Equivalent(path, explored)
                if explored >= budget:
                    logger.info(f"oracle gave up after {explored} chains")
                    return NotFoundWithinBudget(explored)
                frontiers[side].append(result)
    return NotFoundWithinBudget(explored)


def _join(parents, meeting: EChain) -> list[Step]:
    forward = []
    node = meeting
    while parents[0][node] is not None:
        previous, position, cycle = parents[0][node]
        forward.append(Step(INSERT, position, cycle, node))
        node = previous
    forward.reverse()
    backward = []
    node = meeting
    while parents[1][node] is not None:
        previous, position, cycle = parents[1][node]
        backward.append(Step(DELETE, position, cycle, previous))
        node = previous
    return forward + backward


def replay(E: BiorderedSet, c, path) -> EChain:
    """
    Applies a path step by step and returns the final chain.
    Raises:
        TheoremViolation: If a step does not produce its recorded result.
    """
    chain = reduce_chain(E, tuple(c))
    for k, step in enumerate(path):
        if step.op == INSERT:
            ok = insert_cycle(E, chain, step.position, step.cycle) == step.result
        else:
            ok = insert_cycle(E, step.result, step.position, step.cycle) == chain
        if not ok:
            raise TheoremViolation(f"step {k} ({step.op}) does not replay", witness=step.to_dict())
        chain = step.result
    return chain
