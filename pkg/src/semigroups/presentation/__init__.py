from .cycles import (
    GAMMA0,
    GAMMA_TAU,
    USER_SUPPLIED,
    CycleSet,
    as_cycle,
    check_proper,
    format_cycles,
    gamma0,
    gamma_tau,
    is_tau_commutative,
    parse_cycles,
    read_cycles,
    tau_evaluate,
    user_cycle_set,
    write_cycles,
)
from .presentation import (
    IG,
    RIG,
    Presentation,
    SandwichChainForm,
    present_IG,
    present_RIG,
    sandwich_chain_forms,
    write_presentation,
)
from .oracle import Equivalent, NotFoundWithinBudget, Step, chain_equiv_oracle, insert_cycle, replay
