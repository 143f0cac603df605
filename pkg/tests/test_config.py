import pytest

from semigroups.config import DEFAULT_CAPS, Caps, resolve
from semigroups.errors import CapExceeded, NonAssociative


def test_defaults():
    assert DEFAULT_CAPS.max_elements == 512
    assert DEFAULT_CAPS.cone_objects == 6
    assert DEFAULT_CAPS.chain_length == 12
    assert DEFAULT_CAPS.corpus_max_order == 4
    assert resolve(None) is DEFAULT_CAPS


def test_options_are_popped():
    options = {"max_elements": "30", "seed": 7}
    caps = Caps.from_options(options)
    assert caps.max_elements == 30
    assert caps.cone_objects == 6
    assert options == {"seed": 7}


def test_environment_overrides_base():
    base = Caps(chain_length=5)
    caps = Caps.from_env({"SEMIGROUPS_MAX_ELEMENTS": "64", "OTHER": "1"}, base=base)
    assert caps.max_elements == 64
    assert caps.chain_length == 5


def test_environment_rejects_garbage():
    with pytest.raises(ValueError):
        Caps.from_env({"SEMIGROUPS_CONE_OBJECTS": "many"})


def test_check_raises_with_witness():
    caps = Caps(cone_objects=2)
    caps.check("cone_objects", 2)
    with pytest.raises(CapExceeded) as err:
        caps.check("cone_objects", 3)
    assert err.value.to_dict() == {
        "error": "CapExceeded",
        "message": "cap 'cone_objects' exceeded: requested 3, limit 2",
        "witness": {"cap": "cone_objects", "limit": 2, "requested": 3},
    }


def test_tuple_witness_is_listed():
    assert NonAssociative("bad", witness=(0, 1, 2)).to_dict()["witness"] == [0, 1, 2]
