import itertools

import pytest

from conifold.io import configuration_from_json, configuration_to_json, dumps, loads
from conifold.presets import (
    P1_X_P2,
    PresetDescriptor,
    describe,
    p1_times_surface,
    preset_hard_lefschetz,
    preset_product,
)
from conifold.relations import good_relation, is_good_subset
from conifold.surgery import conifold_transition, obstruction_flags


def test_single_sphere():
    c = preset_product(1)
    assert good_relation(c, [0]).coefficients == (1,)


def test_every_subset_good():
    c = preset_product(5)
    assert c.pairwise_disjoint(range(5))
    for k in range(1, 6):
        for S in itertools.combinations(range(5), k):
            assert is_good_subset(c, S)
            assert good_relation(c, S).coefficients == (1,) * k


def test_surgery_on_product():
    X = P1_X_P2
    assert (X.b2, X.b3, X.b4, X.euler) == (2, 0, 2, 6)
    Y = conifold_transition(X, 5, 0, null_homologous=True)
    assert Y.b2 == X.b2 + 5 and Y.b3 == X.b3
    assert obstruction_flags(Y, spheres=5).hard_lefschetz_violated


def test_other_surfaces():
    X = p1_times_surface(10)
    c = preset_product(3, X)
    assert c.classes.shape == (3, 0)
    assert X.euler == 2 * 12
    with pytest.raises(ValueError):
        preset_product(0)


def test_hard_lefschetz_scenario():
    r = preset_hard_lefschetz()
    assert r["hard_lefschetz_violated"]
    before, after = r["before"], r["after"]
    assert after["b2"] == before["b2"] + 1 and after["b3"] == before["b3"]
    assert after["euler"] == before["euler"] + 2
    assert after["c1_zero"] == before["c1_zero"]
    assert r["citations"]


def test_round_trip_bit_exact():
    for m in (1, 4):
        doc = configuration_to_json(preset_product(m))
        text = dumps(doc)
        back = configuration_from_json(loads(text))
        assert back == preset_product(m)
        assert dumps(configuration_to_json(back)) == text


def test_registry():
    assert describe("product").citation
    with pytest.raises(ValueError):
        describe("nope")
    with pytest.raises(ValueError):
        PresetDescriptor("nope")
