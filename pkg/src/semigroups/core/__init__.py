from .semigroup import (
    FiniteSemigroup,
    RegularityWitness,
    build_semigroup,
    idempotents,
    inverses_of,
    is_inverse,
    is_regular,
    require_regular,
)
from .green import GreenData
from .congruence import CongruenceRelation, is_fundamental, max_idempotent_separating_congruence, quotient
from .isomorphism import are_isomorphic, is_isomorphism
from .families import FAMILIES, generate_family
from .corpus import enumerate_corpus
from .cayley import format_cayley, parse_cayley, read_cayley, write_cayley
