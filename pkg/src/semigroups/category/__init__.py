from .finite_category import NC_AXIOMS, FiniteCategory, NormalFactorization, from_table, verify_NC
from .left_ideals import LEFT, RIGHT, PrincipalIdealCategory, build_LS, build_RS, left_ideal_category, normal_factorize
from .cones import (
    NAIVE,
    PRUNED,
    ConeSemigroup,
    NormalCone,
    check_principal_homomorphism,
    check_principal_kernel,
    cone_product,
    cone_semigroup,
    enumerate_cones,
    identity_cone,
    is_cone,
    principal_cone,
    principal_kernel,
    right_regular_kernel,
    star,
)
from .isomorphism import CategoryIsomorphism, Recovery, find_category_isomorphism, is_category_isomorphism, recover_category
