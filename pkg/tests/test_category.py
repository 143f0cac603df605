import itertools

import pytest

from semigroups.category import (
    NAIVE,
    PRUNED,
    NormalCone,
    build_LS,
    build_RS,
    check_principal_homomorphism,
    check_principal_kernel,
    cone_semigroup,
    enumerate_cones,
    find_category_isomorphism,
    from_table,
    identity_cone,
    is_category_isomorphism,
    is_cone,
    normal_factorize,
    principal_cone,
    recover_category,
    verify_NC,
)
from semigroups.config import Caps
from semigroups.core import are_isomorphic, generate_family
from semigroups.errors import CapExceeded, DomainConditionFailed, InvalidCategory, NotIdempotent, NotRegular


def _two_element_monoid(identity=0):
    """One object with morphisms 1 and z, where z absorbs everything."""
    return from_table(["*"], [(0, 0), (0, 0)], [[0, 1], [1, 1]], [identity], {(0, 0): identity}, labels=["1", "z"])


def test_cyclic_group_category():
    Z3 = generate_family("cyclic_group", 3)
    C = build_LS(Z3)
    assert C.n_objects == 1
    assert len(C.hom(0, 0)) == 3
    assert all(C.is_isomorphism(m) for m in C.hom(0, 0))
    cones = enumerate_cones(C)
    assert len(cones) == 3
    T = cone_semigroup(C).semigroup
    assert are_isomorphic(T, Z3) is not None


def test_two_chain_category(families):
    C = build_LS(families["C2"])
    assert C.objects == ("S0", "S1")
    assert C.subobject(0, 1) and not C.subobject(1, 0)
    assert C.is_inclusion(C.inclusion(0, 1))
    assert len(enumerate_cones(C)) == 2
    assert cone_semigroup(C).semigroup.order == 2
    recovery = recover_category(C)
    assert is_category_isomorphism(C, recovery.recovered, recovery.isomorphism)


def test_brandt_category(families):
    B2 = families["B2"]
    C = build_LS(B2)
    assert C.n_objects == 3
    assert C.representatives == (0, 1, 4)
    # e11 S e22 = {0, e12}
    assert len(C.hom(C.object_of(1), C.object_of(4))) == 2
    assert C.object_of_element(3) == C.object_of(1)
    with pytest.raises(NotIdempotent):
        C.object_of(2)
    with pytest.raises(DomainConditionFailed):
        C.morphism(1, 4, 1)


def test_right_ideal_category(families):
    T2 = families["T2"]
    R = build_RS(T2)
    assert R.side == "R"
    assert R.name == "ℝ(T2)"
    assert all(name.endswith("S") for name in R.objects)
    assert verify_NC(R).passed


def test_principal_ideal_category_needs_regularity():
    with pytest.raises(NotRegular):
        build_LS(generate_family("null_plus_zero", 2))
    with pytest.raises(ValueError):
        build_LS(generate_family("chain_semilattice", 2), side="X")


@pytest.mark.parametrize("name", ["T2", "I2", "B2", "RB22", "C3"])
def test_normal_category_axioms(families, name):
    report = verify_NC(build_LS(families[name], verify=False))
    assert report.passed, report.to_dict()


def test_scan_factorization_is_a_normal_factorization(families):
    C = build_LS(families["T2"])
    for m in range(len(C)):
        factorization = normal_factorize(C, m)
        assert C.compose(factorization.retraction, factorization.isomorphism, factorization.inclusion) == m
        assert C.is_retraction(factorization.retraction)
        assert C.is_isomorphism(factorization.isomorphism)
        assert C.is_inclusion(factorization.inclusion)


def test_absorbing_monoid_is_not_normal():
    C = _two_element_monoid()
    report = verify_NC(C)
    assert report["NC1"].passed and report["NC2"].passed
    assert not report["NC3"].passed
    assert report["NC3"].witness == (1,)


def test_category_laws_are_checked():
    with pytest.raises(InvalidCategory):
        _two_element_monoid(identity=1)


@pytest.mark.parametrize("name", ["T2", "B2", "C3", "RB22"])
def test_pruned_search_matches_naive(families, name):
    C = build_LS(families[name])
    assert enumerate_cones(C, method=PRUNED) == enumerate_cones(C, method=NAIVE)
    assert enumerate_cones(C, max_workers=3) == enumerate_cones(C)


def test_cone_search_respects_cap(families):
    C = build_LS(families["C3"])
    with pytest.raises(CapExceeded):
        enumerate_cones(C, caps=Caps(cone_objects=2))
    with pytest.raises(ValueError):
        enumerate_cones(C, method="greedy")


def test_identity_cones(families):
    C = build_LS(families["B2"])
    for c in range(C.n_objects):
        cone = identity_cone(C, c)
        assert cone is not None and cone(c) == C.identity(c)
        assert is_cone(C, cone.components, cone.vertex)


@pytest.mark.parametrize("name", ["T2", "B2", "RB22", "I2"])
def test_principal_cones(families, name):
    S = families[name]
    C = build_LS(S)
    for a in range(S.order):
        cone = principal_cone(C, a)
        assert is_cone(C, cone.components, cone.vertex)
        assert principal_cone(S, a) == cone
    check_principal_homomorphism(C)
    check_principal_kernel(C)


def test_cone_semigroup_contains_the_semigroup_image(families):
    S = families["T2"]
    C = build_LS(S)
    T = cone_semigroup(C)
    principal = {principal_cone(C, a) for a in range(S.order)}
    assert principal <= set(T.cones)


@pytest.mark.parametrize("name", ["T2", "B2"])
def test_recovery(families, name):
    C = build_LS(families[name])
    recovery = recover_category(C)
    assert recovery.recovered.n_objects == C.n_objects
    assert recovery.to_dict()["objects"] == C.n_objects


def test_isomorphism_after_renaming_objects(families):
    C = build_LS(families["B2"])
    D = C.relabel_objects([2, 0, 1])
    iso = find_category_isomorphism(C, D)
    assert iso is not None
    assert is_category_isomorphism(C, D, iso)
    assert find_category_isomorphism(C, build_LS(families["C3"])) is None


def test_corpus_categories(regular_corpus3):
    for S in regular_corpus3:
        C = build_LS(S)
        check_principal_homomorphism(C)
        check_principal_kernel(C)
        assert cone_semigroup(C).semigroup.order >= 1


@pytest.mark.parametrize("name", ["B2", "T2", "C3"])
def test_cones_do_not_depend_on_object_order(families, name):
    C = build_LS(families[name])
    expected = enumerate_cones(C)
    for perm in itertools.permutations(range(C.n_objects)):
        D = C.relabel_objects(perm)
        inverse = {p: k for k, p in enumerate(perm)}
        back = [
            NormalCone(inverse[cone.vertex], tuple(cone.components[perm[a]] for a in range(C.n_objects)))
            for cone in enumerate_cones(D)
        ]
        assert sorted(back, key=lambda cone: (cone.vertex, cone.components)) == expected, perm
