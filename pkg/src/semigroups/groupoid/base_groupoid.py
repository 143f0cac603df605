"""
Ordered groupoids and the exhaustive check of their axioms.
"""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional

from ..biorder.axioms import AxiomResult
from ..errors import TheoremViolation

logger = logging.getLogger(__name__)

ORDERED_GROUPOID_AXIOMS = ("order", "OG1", "OG2", "OG3", "OG3*")


@dataclass
class GroupoidReport:
    results: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> AxiomResult:
        return self.results[name]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results.values())

    def failures(self) -> list[AxiomResult]:
        return [result for result in self.results.values() if not result.passed]

    def to_dict(self) -> dict:
        return {name: result.to_dict() for name, result in self.results.items()}

    def raise_on_failure(self, what: str) -> None:
        failures = self.failures()
        if failures:
            first = failures[0]
            logger.error(f"{what}: {first.name} fails at {first.witness}: {first.detail}")
            raise TheoremViolation(f"{what}: {first.name} fails: {first.detail}", witness=first.witness)


class OrderedGroupoid(ABC):
    """
    Abstract base class for the ordered groupoids G(S) and G(E).
    Subclasses list their morphisms in `__setup__` and implement the
    groupoid structure; the axiom checks run over that list.
    Notes:
        Vertices are identified with their identity morphisms.
    """
    def __init__(self):
        self.morphisms: list = []
        self.vertices: list = []
        self.__setup__()
        self._index = {x: i for i, x in enumerate(self.morphisms)}

    @abstractmethod
    def __setup__(self):
        pass

    @abstractmethod
    def domain(self, x) -> Hashable:
        pass

    @abstractmethod
    def codomain(self, x) -> Hashable:
        pass

    @abstractmethod
    def identity(self, e):
        pass

    @abstractmethod
    def compose(self, x, y):
        """xy, defined when r(x) = d(y)."""
        pass

    @abstractmethod
    def inverse(self, x):
        pass

    @abstractmethod
    def leq(self, x, y) -> bool:
        pass

    def __len__(self):
        return len(self.morphisms)

    def __contains__(self, x):
        return x in self._index

    def index(self, x) -> int:
        return self._index[x]

    def vertex_leq(self, e, f) -> bool:
        return self.leq(self.identity(e), self.identity(f))

    def composable(self, x, y) -> bool:
        return self.codomain(x) == self.domain(y)

    def below(self, x) -> list:
        return [y for y in self.morphisms if self.leq(y, x)]

    def restriction(self, e, x):
        """e↾x: the unique y <= x with d(y) = e. Subclasses may override with a closed form."""
        found = [y for y in self.below(x) if self.domain(y) == e]
        if len(found) != 1:
            raise TheoremViolation(f"restriction of {x} to {e} is not unique", witness={"found": len(found)})
        return found[0]

    def corestriction(self, x, f):
        """x↿f: the unique y <= x with r(y) = f."""
        found = [y for y in self.below(x) if self.codomain(y) == f]
        if len(found) != 1:
            raise TheoremViolation(f"corestriction of {x} to {f} is not unique", witness={"found": len(found)})
        return found[0]

    def _order_pairs(self) -> list[tuple]:
        return [(u, x) for x in self.morphisms for u in self.morphisms if self.leq(u, x)]

    def _check_order(self, pairs):
        morphisms = self.morphisms
        for x in morphisms:
            if not self.leq(x, x):
                return (x,), "not reflexive"
        below = {}
        for u, x in pairs:
            below.setdefault(x, set()).add(u)
        for u, x in pairs:
            if u != x and u in below and x in below[u]:
                return (u, x), "not antisymmetric"
            for w in below.get(u, ()):
                if w not in below[x]:
                    return (w, u, x), "not transitive"
        return None

    def _check_og1(self, pairs):
        by_domains = {}
        for v, y in pairs:
            by_domains.setdefault((self.domain(v), self.domain(y)), []).append((v, y))
        for u, x in pairs:
            for v, y in by_domains.get((self.codomain(u), self.codomain(x)), ()):
                if not self.leq(self.compose(u, v), self.compose(x, y)):
                    return (u, x, v, y), "u <= x, v <= y but uv !<= xy"
        return None

    def _check_og2(self, pairs):
        for u, x in pairs:
            if not self.leq(self.inverse(u), self.inverse(x)):
                return (u, x), "x <= y but x⁻¹ !<= y⁻¹"
        return None

    def _check_og3(self, pairs, dual: bool):
        end = self.codomain if dual else self.domain
        below = {}
        for u, x in pairs:
            below.setdefault((x, end(u)), []).append(u)
        for x in self.morphisms:
            for e in self.vertices:
                if not self.vertex_leq(e, end(x)):
                    continue
                found = below.get((x, e), [])
                if len(found) != 1:
                    return (x, e), f"{len(found)} candidates for the {'co' if dual else ''}restriction"
                closed = self.corestriction(x, e) if dual else self.restriction(e, x)
                if closed != found[0]:
                    return (x, e), "closed form disagrees with the order"
        return None

    def check_axioms(self) -> GroupoidReport:
        """Checks (OG1)-(OG3*) and that <= is a partial order, over every morphism."""
        pairs = self._order_pairs()
        checks: dict[str, Callable[[], Optional[tuple]]] = {
            "order": lambda: self._check_order(pairs),
            "OG1": lambda: self._check_og1(pairs),
            "OG2": lambda: self._check_og2(pairs),
            "OG3": lambda: self._check_og3(pairs, dual=False),
            "OG3*": lambda: self._check_og3(pairs, dual=True),
        }
        report = GroupoidReport()
        for name, check in checks.items():
            failure = check()
            if failure is None:
                report.results[name] = AxiomResult(name, True)
            else:
                witness, detail = failure
                report.results[name] = AxiomResult(name, False, witness, detail)
        logger.info(f"ordered groupoid axioms on {len(self)} morphisms: {len(report.failures())} failure(s)")
        return report


def partition(items: Iterable, key: Callable, related: Callable) -> list[tuple[int, ...]]:
    """
    Classes of an equivalence given as a predicate, by positions in `items`,
    sorted by least member. `key` must be constant on classes.
    """
    items = list(items)
    buckets = {}
    for i, item in enumerate(items):
        buckets.setdefault(key(item), []).append(i)
    classes = []
    for members in buckets.values():
        open_classes: list[list[int]] = []
        for i in members:
            for block in open_classes:
                if related(items[block[0]], items[i]):
                    block.append(i)
                    break
            else:
                open_classes.append([i])
        classes.extend(open_classes)
    return sorted(tuple(block) for block in classes)
