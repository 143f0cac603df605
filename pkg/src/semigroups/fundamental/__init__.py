from .omega import (
    OmegaIdeal,
    OmegaIso,
    compose,
    enumerate_omega_isos,
    identity_iso,
    omega_ideal,
    restrict_left,
    restrict_right,
    tau_iso,
)
from .quotient import (
    FundamentalImage,
    FundamentalQuotient,
    build_TE_mod_p,
    element_iso,
    fundamental_image,
    p_classes,
    p_related,
)
