"""
E-chains and the ordered groupoid G(E) of a biordered set.

A chain is a sequence of biorder indices whose consecutive members are R- or
L-related. Reduction drops repeated vertices and inessential ones (the middle
of an R,R or L,L step pair), so reduced chains alternate R and L steps.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from ..biorder import BiorderedSet
from ..config import Caps, resolve
from ..errors import DomainConditionFailed, InvalidChain
from .base_groupoid import OrderedGroupoid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EChain:
    vertices: tuple

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    @property
    def d(self) -> int:
        return self.vertices[0]

    @property
    def r(self) -> int:
        return self.vertices[-1]

    def inverse(self) -> "EChain":
        return EChain(self.vertices[::-1])

    def is_trivial(self) -> bool:
        return len(self.vertices) == 1


def step_kind(E: BiorderedSet, e: int, f: int) -> str:
    """"R" or "L" for distinct related vertices, "=" for e = f."""
    if e == f:
        return "="
    if E.R[e, f]:
        return "R"
    if E.L[e, f]:
        return "L"
    raise InvalidChain(f"{E.label(e)} and {E.label(f)} are neither R- nor L-related", witness=(e, f))


def reduce_chain(E: BiorderedSet, sequence: Sequence[int]) -> EChain:
    """
    Raises:
        InvalidChain: If the sequence is empty or two neighbours are unrelated.
    """
    if len(sequence) == 0:
        raise InvalidChain("an E-chain has at least one vertex", witness=())
    out: list[int] = []
    kinds: list[str] = []
    for v in sequence:
        v = int(v)
        if not out:
            out.append(v)
            continue
        kind = step_kind(E, out[-1], v)
        if kind == "=":
            continue
        if kinds and kinds[-1] == kind:
            # the previous vertex is inessential
            out.pop()
            kinds.pop()
            kind = step_kind(E, out[-1], v) if out[-1] != v else "="
            if kind == "=":
                continue
        out.append(v)
        kinds.append(kind)
    return EChain(tuple(out))


def concat(E: BiorderedSet, c: EChain, k: EChain) -> EChain:
    if c.r != k.d:
        raise DomainConditionFailed(f"chains not composable: r(c)={c.r}, d(c')={k.d}", witness=(c.r, k.d))
    return reduce_chain(E, c.vertices + k.vertices[1:])


def _sandwich_conjugate(E: BiorderedSet, e: int, h: int) -> int:
    """The product ehe for h ω^r e or h ω^l e, from basic products."""
    if not (E.omega_r[h, e] or E.omega_l[h, e]):
        raise DomainConditionFailed(f"{E.label(h)} is not in ω^r or ω^l of {E.label(e)}", witness=(h, e))
    return E.product(E.product(e, h), e)


def h_star(E: BiorderedSet, h: int, c: EChain) -> EChain:
    """h∗c = [h, h_1, ..., h_n] with h_i = e_i h_{i-1} e_i, for h ω^r e_1."""
    if not E.omega_r[h, c.d]:
        raise DomainConditionFailed(f"{E.label(h)} is not in ω^r({E.label(c.d)})", witness=(h, c.d))
    out = [h]
    for e in c.vertices:
        out.append(_sandwich_conjugate(E, e, out[-1]))
    return reduce_chain(E, out)


def star_k(E: BiorderedSet, c: EChain, k: int) -> EChain:
    """c∗k = [k_1, ..., k_n, k] with k_i = e_i k_{i+1} e_i, for k ω^l e_n."""
    if not E.omega_l[k, c.r]:
        raise DomainConditionFailed(f"{E.label(k)} is not in ω^l({E.label(c.r)})", witness=(k, c.r))
    out = [k]
    for e in reversed(c.vertices):
        out.append(_sandwich_conjugate(E, e, out[-1]))
    return reduce_chain(E, out[::-1])


def enumerate_chains(E: BiorderedSet, max_length: int | None = None, caps: Caps | None = None) -> tuple[list[EChain], bool]:
    """
    All reduced chains with at most `max_length` vertices (default 2·|E|).
    Returns:
        (list, bool): chains sorted by (length, vertices), and whether longer
        reduced chains exist.
    Raises:
        CapExceeded: If the count exceeds `caps.max_chains`.
    """
    caps = resolve(caps)
    max_length = 2 * E.size if max_length is None else max_length
    neighbours = {
        e: [(f, step_kind(E, e, f)) for f in range(E.size) if f != e and (E.R[e, f] or E.L[e, f])]
        for e in range(E.size)
    }
    chains = []
    truncated = False
    stack = [((e,), None) for e in range(E.size)]
    while stack:
        vertices, last = stack.pop()
        chains.append(EChain(vertices))
        caps.check("max_chains", len(chains))
        for f, kind in neighbours[vertices[-1]]:
            if kind == last:
                continue
            if len(vertices) == max_length:
                truncated = True
                break
            stack.append((vertices + (f,), kind))
    chains.sort(key=lambda c: (len(c), c.vertices))
    if truncated:
        logger.warning(f"E-chain enumeration truncated at {max_length} vertices ({len(chains)} chains kept)")
    return chains, truncated


class GroupoidGE(OrderedGroupoid):
    """
    G(E), restricted to chains of bounded length when E has cycles.
    Args:
        E (BiorderedSet): The biordered set.
        max_length (int): Longest chain kept (default 2·|E|).
    """
    def __init__(self, E: BiorderedSet, max_length: int | None = None, caps: Caps | None = None):
        self.E = E
        self.max_length = max_length
        self.caps = caps
        self.truncated = False
        super().__init__()

    def __setup__(self):
        self.morphisms, self.truncated = enumerate_chains(self.E, self.max_length, self.caps)
        self.vertices = list(range(self.E.size))

    def domain(self, x: EChain) -> int:
        return x.d

    def codomain(self, x: EChain) -> int:
        return x.r

    def identity(self, e: int) -> EChain:
        return EChain((e,))

    def compose(self, x: EChain, y: EChain) -> EChain:
        return concat(self.E, x, y)

    def inverse(self, x: EChain) -> EChain:
        return x.inverse()

    def leq(self, x: EChain, y: EChain) -> bool:
        """c' <= c iff d(c') ω d(c) and c' = d(c')∗c."""
        if not self.E.omega[x.d, y.d]:
            return False
        return h_star(self.E, x.d, y) == x

    def restriction(self, e: int, x: EChain) -> EChain:
        return h_star(self.E, e, x)

    def corestriction(self, x: EChain, f: int) -> EChain:
        return star_k(self.E, x, f)

    def is_trivial(self) -> bool:
        return all(c.is_trivial() for c in self.morphisms)


def build_GE(E: BiorderedSet, max_length: int | None = None, caps: Caps | None = None, verify: bool = True) -> GroupoidGE:
    groupoid = GroupoidGE(E, max_length=max_length, caps=caps)
    if verify:
        groupoid.check_axioms().raise_on_failure("G(E)")
    return groupoid
