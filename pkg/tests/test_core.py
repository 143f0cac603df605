import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semigroups.config import Caps
from semigroups.core import (
    FiniteSemigroup,
    are_isomorphic,
    build_semigroup,
    enumerate_corpus,
    generate_family,
    inverses_of,
    is_fundamental,
    is_inverse,
    is_isomorphism,
    is_regular,
    max_idempotent_separating_congruence,
    parse_cayley,
    quotient,
)
from semigroups.core.cayley import format_cayley
from semigroups.core.corpus import associative_tables
from semigroups.errors import CapExceeded, CayleyFormatError, IndexOutOfRange, NonAssociative


def _brute_force_witness(table):
    n = len(table)
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            return a, b, c
    return None


def test_non_associative_table_is_rejected_with_witness():
    table = [[1, 0], [0, 0]]
    with pytest.raises(NonAssociative) as err:
        FiniteSemigroup(table)
    a, b, c = err.value.witness
    assert table[table[a][b]][c] != table[a][table[b][c]]


def test_out_of_range_entry():
    with pytest.raises(IndexOutOfRange):
        FiniteSemigroup([[0, 2], [0, 0]])


def test_non_square_table():
    with pytest.raises(TypeError):
        FiniteSemigroup([[0, 0]])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=2), min_size=9, max_size=9))
def test_associativity_gate_matches_brute_force(entries):
    table = [entries[0:3], entries[3:6], entries[6:9]]
    expected = _brute_force_witness(table)
    if expected is None:
        assert FiniteSemigroup(table).order == 3
    else:
        with pytest.raises(NonAssociative):
            FiniteSemigroup(table)


@pytest.mark.parametrize(
    "kind, params, order, n_idempotents",
    [
        ("full_transformation", (2,), 4, 3),
        ("full_transformation", (3,), 27, 10),
        ("symmetric_inverse", (2,), 7, 4),
        ("brandt", (2,), 5, 3),
        ("brandt_group", (2, 2), 9, 3),
        ("rectangular_band", (2, 3), 6, 6),
        ("chain_semilattice", (3,), 3, 3),
        ("matrix_monoid", (2, 2), 16, 8),
        ("cyclic_group", (3,), 3, 1),
        ("monogenic", (2, 2), 3, 1),
    ],
)
def test_family_sizes(kind, params, order, n_idempotents):
    S = generate_family(kind, *params)
    assert S.order == order
    assert len(S.idempotents) == n_idempotents


def test_family_gates():
    with pytest.raises(ValueError):
        generate_family("free_band", 2)
    with pytest.raises(ValueError):
        generate_family("brandt")
    with pytest.raises(CapExceeded) as err:
        generate_family("full_transformation", 4, caps=Caps(max_elements=100))
    assert err.value.witness == {"cap": "max_elements", "limit": 100, "requested": 256}


def test_build_semigroup_respects_caps():
    with pytest.raises(CapExceeded):
        build_semigroup(np.zeros((3, 3), dtype=int), caps=Caps(max_elements=2))


def test_regularity(families):
    for name in ("T2", "T3", "I2", "B2", "RB22", "C3", "M2F2"):
        assert is_regular(families[name]), name
    null = generate_family("null_plus_zero", 2)
    witness = is_regular(null)
    assert not witness
    assert witness.counterexample is not None


def test_inverses(families):
    B2 = families["B2"]
    for x in range(B2.order):
        for y in inverses_of(B2, x):
            assert B2.product(x, y, x) == x and B2.product(y, x, y) == y
    assert is_inverse(B2)
    assert is_inverse(families["I2"])
    assert not is_inverse(families["T2"])
    assert not is_inverse(families["RB22"])


def test_green_classes_of_rectangular_band(families):
    green = families["RB22"].green
    assert len(set(green.r_class)) == 2
    assert len(set(green.l_class)) == 2
    assert len(set(green.h_class)) == 4
    assert len(set(green.d_class)) == 1


def test_opposite_swaps_green_relations(families):
    T2 = families["T2"]
    op = T2.opposite()
    assert op.green.r_class == T2.green.l_class
    assert op.green.l_class == T2.green.r_class


def test_fundamental(families):
    assert is_fundamental(families["B2"])
    assert is_fundamental(families["T2"])
    assert is_fundamental(families["RB22"])
    Z3 = generate_family("cyclic_group", 3)
    assert not is_fundamental(Z3)
    assert max_idempotent_separating_congruence(Z3).is_universal()


def test_quotient_by_mu_of_brandt_group(families):
    S = generate_family("brandt_group", 2, 2)
    mu = max_idempotent_separating_congruence(S)
    Q = quotient(S, mu)
    assert Q.order == 5
    assert are_isomorphic(Q, families["B2"]) is not None


@settings(max_examples=25, deadline=None)
@given(st.permutations(list(range(5))))
def test_relabeling_keeps_structure(perm):
    B2 = generate_family("brandt", 2)
    R = B2.relabel(perm)
    assert len(R.idempotents) == len(B2.idempotents)
    assert bool(is_regular(R))
    phi = are_isomorphic(B2, R)
    assert phi is not None and is_isomorphism(B2, R, phi)


def test_non_isomorphic(families):
    assert are_isomorphic(families["T2"], generate_family("left_zero", 4)) is None


def test_subsemigroup(families):
    B2 = families["B2"]
    sub, members = B2.subsemigroup([0, 1, 2, 4])
    assert sub.order == 4 and members == [0, 1, 2, 4]
    with pytest.raises(ValueError):
        B2.subsemigroup([1, 2])


def test_cayley_text_format(families):
    B2 = families["B2"]
    text = format_cayley(B2, comments=["brandt 2"])
    assert text.splitlines()[0] == "5"
    again = parse_cayley(text)
    assert again == B2
    assert again.labels == B2.labels


def test_cayley_format_errors():
    with pytest.raises(CayleyFormatError):
        parse_cayley("")
    with pytest.raises(CayleyFormatError):
        parse_cayley("2\n0 0\n")
    with pytest.raises(CayleyFormatError):
        parse_cayley("1\nx\n")
    with pytest.raises(CapExceeded):
        parse_cayley("3\n0 0 0\n0 0 0\n0 0 0\n", caps=Caps(max_elements=2))


def test_corpus_counts(corpus3):
    counts = [sum(1 for S in corpus3 if S.order == n) for n in (1, 2, 3)]
    assert counts == [1, 5, 24]


def test_labeled_table_counts():
    assert [sum(1 for _ in associative_tables(n)) for n in (1, 2, 3)] == [1, 8, 113]


@pytest.mark.slow
def test_corpus_order_four(corpus4):
    assert sum(1 for S in corpus4 if S.order == 4) == 188


def test_corpus_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_corpus(5))


def test_corpus_is_deterministic_across_workers():
    serial = [S.table.tolist() for S in enumerate_corpus(3)]
    threaded = [S.table.tolist() for S in enumerate_corpus(3, max_workers=3)]
    assert serial == threaded
