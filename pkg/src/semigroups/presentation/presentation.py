"""
Semigroup presentations of the free idempotent generated semigroups IG(E)
and RIG(E) of a biordered set, with a plain text and a GAP rendering.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ..biorder import BiorderedSet, require_regular_biorder, sandwich
from ..groupoid import EChain, reduce_chain

logger = logging.getLogger(__name__)

IG = "IG"
RIG = "RIG"


@dataclass
class Presentation:
    """
    Attributes:
        generators (tuple): Generator names; generator i is biorder element i.
        relations (list): Pairs (lhs, rhs) of words over generator indices.
        kind (str): IG or RIG.
        labels (tuple): Element labels of the biorder, for reference.
    """
    generators: tuple
    relations: list = field(default_factory=list)
    kind: str = IG
    labels: tuple = ()

    def word(self, w) -> str:
        return ".".join(self.generators[i] for i in w)

    def to_text(self) -> str:
        lines = [f"# {self.kind}, {len(self.generators)} generators, {len(self.relations)} relations"]
        if self.labels:
            lines.append("# labels: " + " ".join(f"{g}={label}" for g, label in zip(self.generators, self.labels)))
        lines.append("gen: " + " ".join(self.generators))
        lines += [f"rel: {self.word(lhs)} = {self.word(rhs)}" for lhs, rhs in self.relations]
        return "\n".join(lines) + "\n"

    def to_gap(self) -> str:
        names = ", ".join(f'"{g}"' for g in self.generators)

        def gap_word(w):
            return "*".join(f"F.{i + 1}" for i in w)

        rels = ", ".join(f"[{gap_word(lhs)}, {gap_word(rhs)}]" for lhs, rhs in self.relations)
        return f"F := FreeSemigroup({names});;\nrels := [{rels}];;\nS := F / rels;;\n"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "generators": list(self.generators),
            "relations": [[list(lhs), list(rhs)] for lhs, rhs in self.relations],
        }


def _generators(E: BiorderedSet) -> tuple:
    return tuple(f"e{i}" for i in range(E.size))


def _labels(E: BiorderedSet) -> tuple:
    return tuple(E.label(i) for i in range(E.size))


def present_IG(E: BiorderedSet) -> Presentation:
    """One relation e·f = (ef) for every basic pair (e, f), including e·e = e."""
    relations = [((int(e), int(f)), (E.product(int(e), int(f)),)) for e, f in np.argwhere(E.defined)]
    logger.debug(f"IG presentation of {E!r}: {len(relations)} relations")
    return Presentation(_generators(E), relations, IG, _labels(E))


def present_RIG(E: BiorderedSet) -> Presentation:
    """
    IG(E) plus e·f = e·h·f for every pair (e, f) and h ∈ S(e, f).
    Raises:
        NotRegularBiorder: If E is not a regular biordered set.
    """
    require_regular_biorder(E)
    presentation = present_IG(E)
    presentation.kind = RIG
    for e in range(E.size):
        for f in range(E.size):
            for h in sandwich(E, e, f):
                presentation.relations.append(((e, f), (e, h, f)))
    logger.debug(f"RIG presentation of {E!r}: {len(presentation.relations)} relations")
    return presentation


@dataclass(frozen=True)
class SandwichChainForm:
    """
    The relation e·h₀·f = e·h·f between two sandwich elements as a pair of
    co-bounded E-chains [eh₀, h₀, h₀f, hf] and [eh₀, eh, h, hf].
    """
    e: int
    f: int
    h0: int
    h: int
    left: EChain
    right: EChain


def sandwich_chain_forms(E: BiorderedSet) -> list[SandwichChainForm]:
    """
    Raises:
        NotRegularBiorder: If E is not a regular biordered set.
    """
    require_regular_biorder(E)
    forms = []
    for e in range(E.size):
        for f in range(E.size):
            members = sandwich(E, e, f)
            if len(members) < 2:
                continue
            h0 = members[0]
            eh0, h0f = E.product(e, h0), E.product(h0, f)
            for h in members[1:]:
                eh, hf = E.product(e, h), E.product(h, f)
                left = reduce_chain(E, (eh0, h0, h0f, hf))
                right = reduce_chain(E, (eh0, eh, h, hf))
                forms.append(SandwichChainForm(e, f, h0, h, left, right))
    return forms


def write_presentation(presentation: Presentation, path, gap: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(presentation.to_gap() if gap else presentation.to_text())
