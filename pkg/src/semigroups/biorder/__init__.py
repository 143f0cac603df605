from .biordered_set import (
    BiorderedSet,
    Origin,
    extract_biorder,
    format_biorder,
    parse_biorder,
    read_biorder,
    write_biorder,
)
from .axioms import AXIOMS, AxiomReport, AxiomResult, require_regular_biorder, verify_axioms
from .sandwich import greatest_sandwich, sandwich, sandwich_intrinsic, sandwich_semigroup, sandwich_table
from .morphisms import are_biorder_isomorphic, is_biorder_isomorphism, iter_biorder_maps
from .order import PseudoInverseRecord, Translations, classify_pseudo_inverse, natural_partial_order, tau_translations


def restrict_biorder(E: BiorderedSet, elements):
    """The induced biorder on a product-closed subset, with new -> old indices."""
    return E.restrict(elements)
