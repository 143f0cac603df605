"""
Caps shared by every module.

Caps are read the same way from three places: a plain options dict (keys are
popped with defaults), environment variables prefixed `SEMIGROUPS_`, and the
`--cap-*` command line flags. Flags win over the environment, which wins over
the defaults.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, fields, replace

from .errors import CapExceeded

logger = logging.getLogger(__name__)

ENV_PREFIX = "SEMIGROUPS_"


@dataclass(frozen=True)
class Caps:
    """
    Attributes:
        max_elements (int): Largest semigroup built or read.
        cone_objects (int): Most objects a category may have for cone search.
        chain_length (int): Longest E-chain enumerated.
        oracle_budget (int): Chains the equivalence search may visit.
        corpus_max_order (int): Highest order the corpus enumerates.
        max_chains (int): Most E-chains kept by chain enumeration.
        max_omega_isos (int): Most ω-isomorphisms kept for T_E.
    """
    max_elements: int = 512
    cone_objects: int = 6
    chain_length: int = 12
    oracle_budget: int = 100_000
    corpus_max_order: int = 4
    max_chains: int = 200_000
    max_omega_isos: int = 200_000

    @classmethod
    def from_options(cls, options: dict | None = None) -> "Caps":
        """
        Builds caps from an options dict. Known keys are popped, so whatever
        is left in `options` afterwards was not a cap.
        """
        options = options if options is not None else {}
        values = {}
        for field in fields(cls):
            values[field.name] = int(options.pop(field.name, field.default))
        return cls(**values)

    @classmethod
    def from_env(cls, environ=None, base: "Caps | None" = None) -> "Caps":
        environ = os.environ if environ is None else environ
        caps = base if base is not None else cls()
        overrides = {}
        for field in fields(cls):
            key = ENV_PREFIX + field.name.upper()
            if key in environ:
                try:
                    overrides[field.name] = int(environ[key])
                except ValueError:
                    raise ValueError(f"{key} must be an integer, got {environ[key]!r}")
                logger.debug(f"cap {field.name} set to {overrides[field.name]} from {key}")
        return replace(caps, **overrides)

    def check(self, name: str, requested: int) -> None:
        limit = getattr(self, name)
        if requested > limit:
            raise CapExceeded(name, limit, requested)


DEFAULT_CAPS = Caps()


def resolve(caps: Caps | None) -> Caps:
    return caps if caps is not None else DEFAULT_CAPS
