import pytest

from semigroups.biorder import extract_biorder
from semigroups.errors import DomainConditionFailed, InvalidChain, NotRegularBiorder, TheoremViolation
from semigroups.groupoid import EChain
from semigroups.presentation import (
    GAMMA0,
    GAMMA_TAU,
    USER_SUPPLIED,
    Equivalent,
    NotFoundWithinBudget,
    Step,
    chain_equiv_oracle,
    check_proper,
    format_cycles,
    gamma0,
    gamma_tau,
    insert_cycle,
    is_tau_commutative,
    parse_cycles,
    present_IG,
    present_RIG,
    replay,
    sandwich_chain_forms,
    user_cycle_set,
)

# rectangular band 2x2: a R b, c R d, a L c, b L d
A, B, C, D = 0, 1, 2, 3


@pytest.fixture(scope="module")
def rb_biorder(families):
    return extract_biorder(families["RB22"])


@pytest.fixture(scope="module")
def rb_gamma(rb_biorder):
    return gamma_tau(rb_biorder, bound=5)


def test_ig_of_two_chain(families):
    P = present_IG(extract_biorder(families["C2"]))
    assert P.generators == ("e0", "e1")
    assert len(P.relations) == 4
    assert ((0, 1), (0,)) in P.relations
    assert "rel: e0.e1 = e0" in P.to_text().splitlines()


def test_ig_and_rig_of_rectangular_band(rb_biorder):
    assert len(present_IG(rb_biorder).relations) == 12
    P = present_RIG(rb_biorder)
    assert P.kind == "RIG"
    assert len(P.relations) == 12 + 16


def test_rig_needs_regular_biorder(antichain):
    with pytest.raises(NotRegularBiorder):
        present_RIG(antichain)


def test_gap_rendering(families):
    text = present_IG(extract_biorder(families["C2"])).to_gap()
    assert text.startswith('F := FreeSemigroup("e0", "e1");;')
    assert "[F.1*F.1, F.1]" in text
    assert text.rstrip().endswith("S := F / rels;;")


def test_semilattice_has_no_singular_cycles(families):
    cycles = gamma0(extract_biorder(families["C3"]))
    assert len(cycles) == 0
    assert cycles.provenance == GAMMA0
    with pytest.raises(ValueError):
        gamma0(extract_biorder(families["C3"]), bound=4)


def test_singular_cycles_are_tau_commutative(families):
    E = extract_biorder(families["T3"])
    singular = gamma0(E)
    assert all(len(c) <= 5 for c in singular)
    assert all(is_tau_commutative(E, c) for c in singular)
    assert all(c.inverse() in singular for c in singular)


def test_tau_commutative_cycles_of_rectangular_band(rb_biorder, rb_gamma):
    assert rb_gamma.provenance == GAMMA_TAU
    assert len(rb_gamma) == 8
    assert all(len(rb_gamma.at(e)) == 2 for e in range(4))
    assert EChain((A, B, D, C, A)) in rb_gamma
    assert (A,) in rb_gamma


def test_tau_commutative_cycles_form_a_proper_set(rb_biorder, rb_gamma):
    report = check_proper(rb_biorder, rb_gamma)
    assert report.passed, report.to_dict()
    assert gamma0(rb_biorder).issubset(rb_gamma)


def test_dropping_a_cycle_breaks_inversion(rb_biorder, rb_gamma):
    smaller = rb_gamma.without([(A, B, D, C, A)])
    assert smaller.provenance == USER_SUPPLIED
    assert len(smaller) == 7
    report = check_proper(rb_biorder, smaller)
    assert report["P1"].passed
    assert not report["P2"].passed
    assert report["P2"].witness == (A, C, D, B, A)


def test_proper_set_of_T2(families):
    E = extract_biorder(families["T2"])
    gamma = gamma_tau(E)
    assert not gamma.truncated
    assert check_proper(E, gamma).passed


def test_user_cycles(rb_biorder):
    gamma = user_cycle_set(rb_biorder, [[A, B, D, C, A], [A]])
    assert len(gamma) == 1
    assert gamma.bound == 5
    with pytest.raises(InvalidChain):
        user_cycle_set(rb_biorder, [[A, B, D]])


def test_cycle_file_format(rb_biorder, rb_gamma):
    text = format_cycles(rb_gamma)
    assert text.splitlines()[0] == "# GammaTau, bound 5"
    again = parse_cycles(rb_biorder, text, bound=5)
    assert again.cycles == rb_gamma.cycles


def test_insert_cycle(rb_biorder):
    chain = EChain((A, B, D))
    assert insert_cycle(rb_biorder, chain, 0, EChain((A, C, D, B, A))) == EChain((A, C, D))
    with pytest.raises(DomainConditionFailed):
        insert_cycle(rb_biorder, chain, 1, EChain((A, C, D, B, A)))


def test_oracle_finds_one_step_path(rb_biorder, rb_gamma):
    verdict = chain_equiv_oracle(rb_biorder, rb_gamma, [A, B, D], [A, C, D])
    assert isinstance(verdict, Equivalent) and verdict
    assert len(verdict.path) == 1
    assert isinstance(verdict.path[0], Step)
    assert replay(rb_biorder, [A, B, D], verdict.path) == EChain((A, C, D))
    assert verdict.to_dict()["verdict"] == "Equivalent"


def test_oracle_without_cycles_gives_up(rb_biorder):
    empty = user_cycle_set(rb_biorder, [])
    verdict = chain_equiv_oracle(rb_biorder, empty, [A, B, D], [A, C, D])
    assert isinstance(verdict, NotFoundWithinBudget)
    assert not verdict
    assert verdict.explored == 2


def test_oracle_needs_co_bounded_chains(rb_biorder, rb_gamma):
    with pytest.raises(DomainConditionFailed):
        chain_equiv_oracle(rb_biorder, rb_gamma, [A, B], [A, C])
    assert chain_equiv_oracle(rb_biorder, rb_gamma, [A, B], [A, A, B]).path == []


def test_replay_rejects_tampered_path(rb_biorder, rb_gamma):
    path = chain_equiv_oracle(rb_biorder, rb_gamma, [A, B, D], [A, C, D]).path
    bad = [Step(path[0].op, path[0].position, path[0].cycle, EChain((A, B, D)))]
    with pytest.raises(TheoremViolation):
        replay(rb_biorder, [A, B, D], bad)


def test_sandwich_chain_forms_are_equivalent(families):
    E = extract_biorder(families["T2"])
    forms = sandwich_chain_forms(E)
    assert forms
    gamma = gamma_tau(E)
    for form in forms:
        assert (form.left.d, form.left.r) == (form.right.d, form.right.r)
        assert chain_equiv_oracle(E, gamma, form.left, form.right)
