import numpy as np
import pytest

from semigroups.biorder.biordered_set import BiorderedSet
from semigroups.core import enumerate_corpus, generate_family, is_regular


@pytest.fixture(scope="session")
def families():
    return {
        "T2": generate_family("full_transformation", 2),
        "T3": generate_family("full_transformation", 3),
        "I2": generate_family("symmetric_inverse", 2),
        "B2": generate_family("brandt", 2),
        "RB22": generate_family("rectangular_band", 2, 2),
        "C2": generate_family("chain_semilattice", 2),
        "C3": generate_family("chain_semilattice", 3),
        "M2F2": generate_family("matrix_monoid", 2, 2),
    }


@pytest.fixture(scope="session")
def corpus3():
    return list(enumerate_corpus(3))


@pytest.fixture(scope="session")
def regular_corpus3(corpus3):
    return [S for S in corpus3 if is_regular(S)]


@pytest.fixture(scope="session")
def corpus4():
    return list(enumerate_corpus(4))


@pytest.fixture(scope="session")
def regular_corpus4(corpus4):
    return [S for S in corpus4 if is_regular(S)]


@pytest.fixture
def antichain():
    """Two incomparable idempotents with no basic product between them."""
    eye = np.eye(2, dtype=bool)
    return BiorderedSet(eye, eye, [[0, 0], [0, 1]], eye)
