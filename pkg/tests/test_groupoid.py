import random

import pytest

from semigroups.biorder import extract_biorder
from semigroups.core import generate_family
from semigroups.errors import DomainConditionFailed, InvalidChain, NotRegular
from semigroups.groupoid import (
    EChain,
    build_GE,
    build_GS,
    check_epsilon_commutative,
    check_inductive_axioms,
    check_schein,
    concat,
    enumerate_chains,
    evaluate_chain,
    extended_restriction,
    h_star,
    reconstruct,
    reduce_chain,
    singular_squares,
    star_k,
)

# rectangular band 2x2: a R b, c R d, a L c, b L d
A, B, C, D = 0, 1, 2, 3


@pytest.fixture(scope="module")
def rb_biorder(families):
    return extract_biorder(families["RB22"])


@pytest.mark.parametrize(
    "sequence, expected",
    [
        ([A], (A,)),
        ([A, A, B], (A, B)),
        ([A, B, B, D], (A, B, D)),
        ([A, B, A], (A,)),
        ([A, B, D, C], (A, B, D, C)),
        ([A, B, D, C, A], (A, B, D, C, A)),
        ([A, B, D, B, A], (A,)),
    ],
)
def test_reduce_chain(rb_biorder, sequence, expected):
    assert reduce_chain(rb_biorder, sequence).vertices == expected


def test_reduce_chain_rejects_bad_input(rb_biorder):
    with pytest.raises(InvalidChain):
        reduce_chain(rb_biorder, [])
    with pytest.raises(InvalidChain) as err:
        reduce_chain(rb_biorder, [A, D])
    assert err.value.witness == (A, D)


def test_concat(rb_biorder):
    ab, bd = EChain((A, B)), EChain((B, D))
    assert concat(rb_biorder, ab, bd) == EChain((A, B, D))
    assert concat(rb_biorder, ab, ab.inverse()) == EChain((A,))
    with pytest.raises(DomainConditionFailed):
        concat(rb_biorder, ab, ab)


def test_restriction_to_own_domain_is_identity(rb_biorder):
    for c in enumerate_chains(rb_biorder, max_length=5)[0]:
        assert h_star(rb_biorder, c.d, c) == c
        assert star_k(rb_biorder, c, c.r) == c


def test_h_star_needs_quasi_order(rb_biorder):
    with pytest.raises(DomainConditionFailed):
        h_star(rb_biorder, C, EChain((A, B)))


def test_chain_enumeration(rb_biorder, families):
    chains, truncated = enumerate_chains(rb_biorder, max_length=5)
    assert truncated
    assert all(len(c) <= 5 for c in chains)
    assert chains == sorted(chains, key=lambda c: (len(c), c.vertices))
    assert all(reduce_chain(rb_biorder, c.vertices) == c for c in chains)

    chains, truncated = enumerate_chains(extract_biorder(families["C3"]))
    assert not truncated
    assert [c.vertices for c in chains] == [(0,), (1,), (2,)]

    chains, truncated = enumerate_chains(extract_biorder(families["T2"]))
    assert not truncated
    assert len(chains) == 5


@pytest.mark.parametrize("name", ["T2", "B2", "C3", "I2"])
def test_groupoid_of_biorder_is_ordered(families, name):
    G = build_GE(extract_biorder(families[name]))
    assert not G.truncated
    assert G.check_axioms().passed


def test_semilattice_groupoid_is_trivial(families):
    assert build_GE(extract_biorder(families["C3"])).is_trivial()
    assert not build_GE(extract_biorder(families["T2"])).is_trivial()


@pytest.mark.parametrize("name", ["T2", "T3", "I2", "B2", "RB22"])
def test_groupoid_of_semigroup_is_ordered(families, name):
    G = build_GS(families[name])
    assert G.check_axioms().passed


def test_groupoid_of_inverse_semigroup_has_one_morphism_per_element(families):
    assert len(build_GS(families["B2"])) == 5
    assert len(build_GS(families["I2"])) == 7


def test_groupoid_needs_regularity():
    with pytest.raises(NotRegular):
        build_GS(generate_family("null_plus_zero", 2))


def test_evaluate_chain(families):
    S = families["RB22"]
    assert evaluate_chain(S, [A]) == (A, A)
    assert evaluate_chain(S, [A, B, D]) == (S.product(A, B, D), S.product(D, B, A))


def test_extended_restriction_outside_quasi_ideals(families):
    S = families["B2"]
    with pytest.raises(DomainConditionFailed):
        extended_restriction(S, 4, (1, 1))


def test_rectangular_band_has_no_singular_squares(rb_biorder):
    assert singular_squares(rb_biorder) == []
    assert all(square.is_degenerate() for square in singular_squares(rb_biorder, include_trivial=True))


def test_singular_squares_are_squares(families):
    S = families["T3"]
    E = extract_biorder(S)
    squares = singular_squares(E)
    assert squares
    assert all(square.is_square(E) for square in squares)
    assert all(check_epsilon_commutative(S, square, E) for square in squares)
    with_trivial = singular_squares(E, include_trivial=True)
    assert len(with_trivial) >= len(squares)


@pytest.mark.parametrize("name", ["T2", "T3", "I2", "B2", "RB22", "M2F2"])
def test_inductive_axioms(families, name):
    report = check_inductive_axioms(families[name])
    assert report.passed


def test_inductive_axioms_on_semilattice_are_partly_vacuous(families):
    report = check_inductive_axioms(families["C3"])
    assert report.passed
    assert "IG2" in report.vacuous


def test_schein(families):
    assert check_schein(families["B2"])
    assert check_schein(families["I2"])
    assert not check_schein(families["T2"])


@pytest.mark.parametrize("name", ["T2", "I2", "B2", "RB22", "C3"])
def test_reconstruction(families, name):
    S = families[name]
    result = reconstruct(S)
    assert result.semigroup.order == S.order
    assert sorted(result.phi) == list(range(S.order))


def test_reconstruction_with_random_sandwich_choice(families):
    S = families["T3"]
    assert reconstruct(S, rng=random.Random(11)).semigroup == reconstruct(S).semigroup


def test_roundtrip_on_corpus(regular_corpus3):
    for S in regular_corpus3:
        assert check_inductive_axioms(S, raise_on_failure=False).passed, S.name
        assert reconstruct(S).semigroup.order == S.order
