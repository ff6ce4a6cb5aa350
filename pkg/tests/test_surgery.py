import pytest

from conifold.surgery import (
    QUINTIC,
    NoGoodRelationError,
    SixManifoldTopology,
    conifold_transition,
    obstruction_flags,
    reverse_transition,
)


def test_quintic_lower_end():
    Y = conifold_transition(QUINTIC, 102, 101)
    assert (Y.b2, Y.b3, Y.b4, Y.euler) == (2, 2, 2, 4)
    assert Y.c1_zero


def test_quintic_upper_end():
    Y = conifold_transition(QUINTIC, 125, 101)
    assert (Y.b2, Y.b3, Y.euler) == (25, 2, 50)


def test_identity_surgery():
    X = SixManifoldTopology.simply_connected_from(3, 10)
    assert conifold_transition(X, 0, 0) == X
    assert reverse_transition(X, 0, 0) == X


def test_reverse_example():
    Y = SixManifoldTopology.simply_connected_from(2, 2, c1_zero=True)
    X = reverse_transition(Y, 102, 101)
    assert (X.b2, X.b3, X.euler) == (1, 204, -200)
    assert X == QUINTIC


def test_no_good_relation_is_an_error():
    with pytest.raises(NoGoodRelationError, match="no good relation"):
        conifold_transition(QUINTIC, 3, 1, good=False)


def test_invalid_spans():
    with pytest.raises(ValueError):
        conifold_transition(QUINTIC, 2, 3)
    with pytest.raises(ValueError):
        conifold_transition(QUINTIC, 200, 103)


def test_topology_invariants():
    with pytest.raises(ValueError):
        SixManifoldTopology(1, 3, 1, -1)
    with pytest.raises(ValueError):
        SixManifoldTopology(1, 2, 2, 2)
    with pytest.raises(ValueError):
        SixManifoldTopology(1, 2, 1, 5)
    SixManifoldTopology(1, 2, 3, 7, simply_connected=False)


def test_flags():
    Y = SixManifoldTopology.simply_connected_from(5, 0, c1_zero=True)
    assert obstruction_flags(Y).non_kahler_by_b3
    Z = conifold_transition(QUINTIC, 110, 101)
    assert not obstruction_flags(Z, spheres=110).non_kahler_by_b3
    assert obstruction_flags(Z, spheres=110).c2_omega_increases
    assert not obstruction_flags(QUINTIC).c2_omega_increases


def test_null_homologous_flag():
    X = SixManifoldTopology.simply_connected_from(2, 0)
    Y = conifold_transition(X, 1, 0, null_homologous=True)
    assert obstruction_flags(Y, spheres=1).hard_lefschetz_violated
    assert not obstruction_flags(conifold_transition(X, 1, 0), spheres=1).hard_lefschetz_violated


def test_dict_round_trip():
    assert SixManifoldTopology.from_dict(QUINTIC.to_dict()) == QUINTIC
