"""
E-cycles and sets of E-cycles: the singular cycles Γ₀, the τ-commutative
cycles Γ_τ, user supplied sets, and the check that a set is proper.

Sets store their non-trivial cycles only; the trivial cycle [e] is a member
of every set.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

from ..biorder import BiorderedSet, require_regular_biorder
from ..biorder.axioms import AxiomResult
from ..config import Caps, resolve
from ..errors import InvalidChain
from ..fundamental import identity_iso, tau_iso
from ..groupoid import EChain, enumerate_chains, h_star, reduce_chain, singular_squares
from ..groupoid.base_groupoid import GroupoidReport

logger = logging.getLogger(__name__)

GAMMA0 = "Gamma0"
GAMMA_TAU = "GammaTau"
USER_SUPPLIED = "UserSupplied"


def as_cycle(E: BiorderedSet, vertices) -> EChain:
    """
    Reduces a vertex sequence and checks that it closes up.
    Raises:
        InvalidChain: If the reduced chain does not start and end at one vertex.
    """
    chain = reduce_chain(E, vertices)
    if chain.d != chain.r:
        raise InvalidChain(f"chain {list(chain)} is not a cycle", witness=tuple(chain))
    return chain


def tau_evaluate(E: BiorderedSet, chain: EChain):
    """τ([e_1, ..., e_n]) = τ(e_1, e_2) τ(e_2, e_3) ... τ(e_{n-1}, e_n)."""
    value = identity_iso(E, chain.d)
    for e, f in zip(chain.vertices, chain.vertices[1:]):
        value = value.then(tau_iso(E, e, f))
    return value


def is_tau_commutative(E: BiorderedSet, cycle: EChain) -> bool:
    return cycle.d == cycle.r and tau_evaluate(E, cycle) == identity_iso(E, cycle.d)


@dataclass
class CycleSet:
    """
    Attributes:
        biorder (BiorderedSet): The underlying biordered set.
        cycles (frozenset): Non-trivial member cycles.
        provenance (str): GAMMA0, GAMMA_TAU or USER_SUPPLIED.
        bound (int): Longest cycle (in vertices) the set speaks about.
        truncated (bool): Whether longer cycles were left out.
    """
    biorder: BiorderedSet = field(repr=False)
    cycles: frozenset
    provenance: str
    bound: int
    truncated: bool = False

    def __contains__(self, cycle) -> bool:
        cycle = cycle if isinstance(cycle, EChain) else EChain(tuple(cycle))
        return cycle.is_trivial() or cycle in self.cycles

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self) -> list[EChain]:
        return sorted(self.cycles, key=lambda c: (len(c), c.vertices))

    def at(self, e: int) -> list[EChain]:
        """Cycles based at e, trivial cycle excluded."""
        return [c for c in self.sorted() if c.d == e]

    def issubset(self, other: "CycleSet") -> bool:
        return all(c in other for c in self.cycles if len(c) <= other.bound)

    def without(self, cycles: Iterable) -> "CycleSet":
        drop = {c if isinstance(c, EChain) else EChain(tuple(c)) for c in cycles}
        return CycleSet(self.biorder, frozenset(self.cycles - drop), USER_SUPPLIED, self.bound, self.truncated)

    def to_dict(self) -> dict:
        return {
            "provenance": self.provenance,
            "bound": self.bound,
            "truncated": self.truncated,
            "cycles": [list(c) for c in self.sorted()],
        }


def gamma0(E: BiorderedSet, bound: int = 12) -> CycleSet:
    """The singular cycles [e, f, h, g, e] of the singular squares, and their inverses."""
    if bound < 5:
        raise ValueError(f"singular cycles have 5 vertices; bound must be >= 5, got {bound}")
    cycles = set()
    for square in singular_squares(E):
        e, f, g, h = square.corners
        cycle = as_cycle(E, (e, f, h, g, e))
        if not cycle.is_trivial():
            cycles.add(cycle)
            cycles.add(cycle.inverse())
    logger.debug(f"Γ₀ of {E!r}: {len(cycles)} cycles")
    return CycleSet(E, frozenset(cycles), GAMMA0, bound)


def gamma_tau(E: BiorderedSet, bound: int | None = None, caps: Caps | None = None) -> CycleSet:
    """
    All τ-commutative cycles with at most `bound` vertices
    (default `caps.chain_length`).
    Raises:
        NotRegularBiorder: If E fails an axiom.
        CapExceeded: If chain enumeration exceeds `caps.max_chains`.
    """
    caps = resolve(caps)
    require_regular_biorder(E)
    bound = caps.chain_length if bound is None else bound
    chains, truncated = enumerate_chains(E, max_length=bound, caps=caps)
    cycles = frozenset(c for c in chains if not c.is_trivial() and c.d == c.r and is_tau_commutative(E, c))
    logger.info(f"Γ_τ of {E!r} up to {bound} vertices: {len(cycles)} cycles")
    return CycleSet(E, cycles, GAMMA_TAU, bound, truncated)


def user_cycle_set(E: BiorderedSet, cycles: Iterable, bound: int | None = None) -> CycleSet:
    members = frozenset(c for c in (as_cycle(E, v) for v in cycles) if not c.is_trivial())
    bound = max((len(c) for c in members), default=1) if bound is None else bound
    return CycleSet(E, members, USER_SUPPLIED, bound)


def check_proper(E: BiorderedSet, gamma: CycleSet, singular: CycleSet | None = None) -> GroupoidReport:
    """
    (P1) Γ₀ ⊆ Γ ⊆ Γ_τ, (P2) closure under inversion, (P3) closure under f∗γ
    for f ∈ ω(e), within the bound of Γ.
    """
    singular = gamma0(E, max(gamma.bound, 5)) if singular is None else singular
    report = GroupoidReport()

    missing = [c for c in singular.sorted() if len(c) <= gamma.bound and c not in gamma]
    not_tau = [c for c in gamma.sorted() if not is_tau_commutative(E, c)]
    if missing:
        report.results["P1"] = AxiomResult("P1", False, tuple(missing[0]), "singular cycle missing")
    elif not_tau:
        report.results["P1"] = AxiomResult("P1", False, tuple(not_tau[0]), "cycle is not τ-commutative")
    else:
        report.results["P1"] = AxiomResult("P1", True)

    no_inverse = [c for c in gamma.sorted() if c.inverse() not in gamma]
    report.results["P2"] = AxiomResult(
        "P2", not no_inverse, tuple(no_inverse[0]) if no_inverse else None, "inverse cycle missing" if no_inverse else ""
    )

    report.results["P3"] = AxiomResult("P3", True)
    for cycle in gamma.sorted():
        for f in E.omega_ideal(cycle.d):
            image = h_star(E, f, cycle)
            if image.d != image.r or image not in gamma:
                report.results["P3"] = AxiomResult("P3", False, (f,) + tuple(cycle), "f∗γ is not in the set")
                break
        if not report.results["P3"].passed:
            break
    return report


def parse_cycles(E: BiorderedSet, text: str, bound: int | None = None) -> CycleSet:
    """One cycle per line as space-separated vertex indices; "#" starts a comment."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append([int(token) for token in line.split()])
    return user_cycle_set(E, rows, bound)


def read_cycles(E: BiorderedSet, path, bound: int | None = None) -> CycleSet:
    with open(path, "r", encoding="utf-8") as f:
        return parse_cycles(E, f.read(), bound)


def format_cycles(gamma: CycleSet) -> str:
    lines = [f"# {gamma.provenance}, bound {gamma.bound}" + (", truncated" if gamma.truncated else "")]
    lines += [" ".join(str(v) for v in c) for c in gamma.sorted()]
    return "\n".join(lines) + "\n"


def write_cycles(gamma: CycleSet, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_cycles(gamma))
