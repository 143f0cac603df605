import random

import pytest

from semigroups.biorder import are_biorder_isomorphic, extract_biorder
from semigroups.core import (
    are_isomorphic,
    generate_family,
    is_fundamental,
    is_regular,
    max_idempotent_separating_congruence,
    quotient,
)
from semigroups.config import Caps
from semigroups.errors import CapExceeded, DomainConditionFailed, NotChainRelated, NotRegular
from semigroups.fundamental import (
    build_TE_mod_p,
    enumerate_omega_isos,
    fundamental_image,
    identity_iso,
    p_related,
    restrict_left,
    tau_iso,
)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_chain_has_only_identities(k):
    E = extract_biorder(generate_family("chain_semilattice", k))
    isos = enumerate_omega_isos(E)
    assert len(isos) == k
    assert all(alpha.is_identity() for alpha in isos)
    assert build_TE_mod_p(E).semigroup.order == k


@pytest.mark.parametrize("name, n_isos, n_classes", [("RB22", 16, 4), ("B2", 5, 5), ("T2", 6, 4)])
def test_omega_isomorphism_counts(families, name, n_isos, n_classes):
    E = extract_biorder(families[name])
    assert len(enumerate_omega_isos(E)) == n_isos
    assert build_TE_mod_p(E).semigroup.order == n_classes


def test_parallel_enumeration_matches_serial(families):
    E = extract_biorder(families["T3"])
    assert enumerate_omega_isos(E, max_workers=4) == enumerate_omega_isos(E)


def test_fundamental_semigroup_of_brandt_biorder(families):
    E = extract_biorder(families["B2"])
    T = build_TE_mod_p(E).semigroup
    assert are_isomorphic(T, families["B2"]) is not None


FUNDAMENTAL_FAMILIES = [
    ("chain_semilattice", 2),
    ("chain_semilattice", 4),
    ("rectangular_band", 2, 3),
    ("rectangular_band", 3, 3),
    ("brandt", 2),
    ("full_transformation", 2),
]


@pytest.mark.parametrize("family", FUNDAMENTAL_FAMILIES, ids=lambda family: "-".join(map(str, family)))
def test_fundamental_semigroup_of_family_biorders(family):
    E = extract_biorder(generate_family(*family))
    T = build_TE_mod_p(E).semigroup
    assert is_regular(T)
    assert is_fundamental(T)
    assert are_biorder_isomorphic(extract_biorder(T), E) is not None


@pytest.mark.parametrize("seed", [3, 17, 2024])
@pytest.mark.parametrize("family", FUNDAMENTAL_FAMILIES, ids=lambda family: "-".join(map(str, family)))
def test_random_sandwich_choice_gives_same_table(family, seed):
    E = extract_biorder(generate_family(*family))
    fixed = build_TE_mod_p(E)
    sampled = build_TE_mod_p(E, rng=random.Random(seed))
    assert fixed.semigroup == sampled.semigroup


def test_idempotent_classes_are_distinct(families):
    E = extract_biorder(families["RB22"])
    Q = build_TE_mod_p(E)
    assert len(set(Q.idempotent_classes)) == len(E)
    assert sorted(Q.idempotent_classes) == sorted(Q.semigroup.idempotents)


def test_tau_and_composition(families):
    E = extract_biorder(families["RB22"])
    R_pairs = [(e, f) for e in range(len(E)) for f in range(len(E)) if e != f and E.R[e, f]]
    e, f = R_pairs[0]
    there = tau_iso(E, e, f)
    assert there.then(tau_iso(E, f, e)) == identity_iso(E, e)
    assert there.inverse() == tau_iso(E, f, e)
    assert p_related(E, there, there)
    with pytest.raises(DomainConditionFailed):
        there.then(there)


def test_tau_needs_related_apexes(families):
    E = extract_biorder(families["B2"])
    with pytest.raises(NotChainRelated) as err:
        tau_iso(E, 1, 2)
    assert err.value.witness == (1, 2)


def test_restriction_outside_quasi_ideals(families):
    E = extract_biorder(families["C3"])
    with pytest.raises(DomainConditionFailed):
        restrict_left(E, 2, identity_iso(E, 0))
    assert restrict_left(E, 0, identity_iso(E, 2)) == identity_iso(E, 0)


def test_fundamental_image_of_brandt_group(families):
    S = generate_family("brandt_group", 2, 2)
    image = fundamental_image(S)
    assert S.order == 9
    assert not image.injective
    assert are_isomorphic(image.image, families["B2"]) is not None


@pytest.mark.parametrize("name", ["B2", "RB22", "T2", "I2"])
def test_fundamental_families_embed(families, name):
    image = fundamental_image(families[name])
    assert image.injective
    assert image.image.order == families[name].order


def test_group_collapses():
    image = fundamental_image(generate_family("cyclic_group", 3))
    assert not image.injective
    assert image.image.order == 1


def test_image_requires_regularity():
    with pytest.raises(NotRegular):
        fundamental_image(generate_family("null_plus_zero", 3))


def test_image_is_quotient_by_mu(regular_corpus3):
    for S in regular_corpus3:
        image = fundamental_image(S)
        assert image.injective == is_fundamental(S)
        collapsed = quotient(S, max_idempotent_separating_congruence(S))
        assert are_isomorphic(collapsed, image.image) is not None, S.name


def test_omega_isomorphism_cap(families):
    E = extract_biorder(families["RB22"])
    with pytest.raises(CapExceeded) as err:
        enumerate_omega_isos(E, caps=Caps(max_omega_isos=15))
    assert err.value.witness == {"cap": "max_omega_isos", "limit": 15, "requested": 16}
    assert len(enumerate_omega_isos(E, caps=Caps(max_omega_isos=16, max_chains=1))) == 16
