import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semigroups.biorder import (
    AXIOMS,
    are_biorder_isomorphic,
    classify_pseudo_inverse,
    extract_biorder,
    format_biorder,
    greatest_sandwich,
    is_biorder_isomorphism,
    natural_partial_order,
    parse_biorder,
    require_regular_biorder,
    sandwich,
    sandwich_intrinsic,
    sandwich_semigroup,
    tau_translations,
    verify_axioms,
)
from semigroups.biorder.biordered_set import BiorderedSet
from semigroups.core import generate_family
from semigroups.errors import DomainConditionFailed, InvalidBiorder, NotIdempotent, NotRegular, NotRegularBiorder


def test_extraction_sizes(families):
    assert len(extract_biorder(families["T2"])) == 3
    assert len(extract_biorder(families["T3"])) == 10
    assert len(extract_biorder(families["M2F2"])) == 8
    E = extract_biorder(families["B2"])
    assert [E.label(e) for e in range(len(E))] == ["0", "e11", "e22"]
    assert E.origin.elements == (0, 1, 4)


def test_undefined_product_is_not_zero(families):
    E = extract_biorder(families["RB22"])
    for e in range(len(E)):
        for f in range(len(E)):
            assert E.is_defined(e, f) == bool(E.basic_domain()[e, f])
    undefined = [(e, f) for e in range(len(E)) for f in range(len(E)) if not E.is_defined(e, f)]
    assert undefined
    with pytest.raises(DomainConditionFailed):
        E.product(*undefined[0])


def test_semilattice_flags(families):
    assert extract_biorder(families["C3"]).is_semilattice()
    assert extract_biorder(families["B2"]).is_semilattice()
    assert not extract_biorder(families["RB22"]).is_semilattice()


@pytest.mark.parametrize("name", ["T2", "T3", "I2", "B2", "RB22", "C3", "M2F2"])
def test_axioms_on_regular_families(families, name):
    report = verify_axioms(extract_biorder(families[name]))
    assert report.biordered and report.regular
    assert list(report.to_dict()) == list(AXIOMS)


def test_axioms_on_corpus(corpus3):
    for S in corpus3:
        report = verify_axioms(extract_biorder(S))
        assert report.biordered, (S.name, report.to_dict())


def test_antichain_fails_regularity(antichain):
    E = antichain
    report = verify_axioms(E)
    assert report.biordered
    assert not report["R"].passed
    assert report["R"].witness == (0, 1)
    with pytest.raises(NotRegularBiorder) as err:
        require_regular_biorder(E)
    assert err.value.witness == (0, 1)


def test_invalid_relations():
    not_reflexive = np.array([[1, 0], [0, 0]], dtype=bool)
    eye = np.eye(2, dtype=bool)
    with pytest.raises(InvalidBiorder):
        BiorderedSet(not_reflexive, eye, np.zeros((2, 2)), eye)
    not_transitive = np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]], dtype=bool)
    with pytest.raises(InvalidBiorder) as err:
        BiorderedSet(not_transitive, np.eye(3, dtype=bool), np.zeros((3, 3)), np.eye(3, dtype=bool))
    assert err.value.witness == (0, 1, 2)


def test_brandt_sandwich(families):
    B2 = families["B2"]
    assert sandwich_semigroup(B2, 1, 4) == [0]
    E = extract_biorder(B2)
    assert sandwich(E, 1, 2) == (0,)
    with pytest.raises(NotIdempotent):
        sandwich_semigroup(B2, 2, 1)


def test_sandwich_sets_agree_on_regular_corpus(regular_corpus3):
    for S in regular_corpus3:
        E = extract_biorder(S)
        for e in range(len(E)):
            for f in range(len(E)):
                inside = sandwich_semigroup(S, E.element(e), E.element(f))
                intrinsic = [E.element(h) for h in sandwich_intrinsic(E, e, f)]
                assert inside == intrinsic, (S.name, e, f)


def test_sandwich_sets_are_non_empty_on_T3(families):
    T3 = families["T3"]
    E = extract_biorder(T3)
    for e in range(len(E)):
        for f in range(len(E)):
            assert sandwich_intrinsic(E, e, f)


def test_bos_format(families):
    E = extract_biorder(families["RB22"])
    text = format_biorder(E)
    F = parse_biorder(text)
    assert np.array_equal(F.omega_r, E.omega_r)
    assert np.array_equal(F.omega_l, E.omega_l)
    assert np.array_equal(F.defined, E.defined)
    assert np.array_equal(F.products, E.products)
    assert F.labels == tuple(E.label(e) for e in range(len(E)))


def test_bos_format_errors():
    with pytest.raises(ValueError):
        parse_biorder("")
    with pytest.raises(ValueError):
        parse_biorder("1\n1\n")
    with pytest.raises(ValueError):
        parse_biorder("1\n2\n1\n0\n")


def test_restrict_to_omega_ideal(families):
    E = extract_biorder(families["B2"])
    sub, members = E.restrict(E.omega_ideal(1))
    assert members == [0, 1]
    assert len(sub) == 2
    assert sub.origin.elements == (0, 1)


def test_tau_translations(families):
    E = extract_biorder(families["C3"])
    top = len(E) - 1
    tau = tau_translations(E, top)
    assert set(tau.right) == set(range(len(E)))
    assert all(tau.right[f] == f for f in tau.right)


@settings(max_examples=20, deadline=None)
@given(st.permutations(list(range(6))))
def test_biorder_isomorphism_follows_relabeling(perm):
    S = generate_family("rectangular_band", 2, 3)
    E = extract_biorder(S)
    F = extract_biorder(S.relabel(perm))
    phi = are_biorder_isomorphic(E, F)
    assert phi is not None
    assert is_biorder_isomorphism(E, F, phi)


def test_rectangular_bands_of_transposed_shape_differ():
    E = extract_biorder(generate_family("rectangular_band", 2, 3))
    F = extract_biorder(generate_family("rectangular_band", 3, 2))
    assert are_biorder_isomorphic(E, F) is None


def test_natural_partial_order(families):
    B2 = families["B2"]
    leq = natural_partial_order(B2)
    assert leq[0].all()
    assert leq[1, 1] and not leq[1, 4]
    with pytest.raises(NotRegular):
        natural_partial_order(generate_family("null_plus_zero", 2))


@pytest.mark.parametrize("name, expected", [("B2", True), ("RB22", True), ("I2", True), ("C3", True), ("T2", False)])
def test_pseudo_inverse_classification(families, name, expected):
    record = classify_pseudo_inverse(families[name])
    assert record.all_equal()
    assert record.pseudo_inverse is expected
    assert set(record.conditions.values()) == {expected}


def test_pseudo_inverse_conditions_agree_on_corpus(regular_corpus3):
    for S in regular_corpus3:
        assert classify_pseudo_inverse(S).all_equal(), S.name


@pytest.mark.slow
def test_pseudo_inverse_conditions_agree_on_order_four(regular_corpus4):
    for S in regular_corpus4:
        assert classify_pseudo_inverse(S).all_equal(), S.name


def test_sandwich_without_greatest_element():
    # two incomparable idempotents above two incomparable ones: M(e, f) has no greatest element
    e, f, a, b = 0, 1, 2, 3
    below = [(a, e), (a, f), (b, e), (b, f)]
    order = np.eye(4, dtype=bool)
    products = np.zeros((4, 4), dtype=np.int64)
    defined = np.eye(4, dtype=bool)
    for x in range(4):
        products[x, x] = x
    for x, y in below:
        order[x, y] = True
        defined[x, y] = defined[y, x] = True
        products[x, y] = products[y, x] = x
    E = BiorderedSet(order, order, products, defined)
    assert sandwich_intrinsic(E, e, f) == [a, b]
    assert sandwich(E, e, f) == (a, b)
    assert greatest_sandwich(E, e, f) == ()
    assert greatest_sandwich(E, e, e) == (e,)
    assert not verify_axioms(E).regular
