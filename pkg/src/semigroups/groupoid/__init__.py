from .base_groupoid import ORDERED_GROUPOID_AXIOMS, GroupoidReport, OrderedGroupoid, partition
from .chains import EChain, GroupoidGE, build_GE, concat, enumerate_chains, h_star, reduce_chain, star_k, step_kind
from .gs import GroupoidGS, build_GS, chain_to_semigroup, evaluate_chain, groupoid_of
from .squares import ESquare, check_epsilon_commutative, singular_squares
from .inductive import InductiveReport, Reconstruction, check_inductive_axioms, check_schein, reconstruct


def extended_restriction(S, e, x):
    """e∗x in G(S), for e ω^r d(x) or e ω^l d(x)."""
    return groupoid_of(S).extended_restriction(e, x)


def extended_corestriction(S, x, h):
    """x∗h in G(S), for h ω^r r(x) or h ω^l r(x)."""
    return groupoid_of(S).extended_corestriction(x, h)
