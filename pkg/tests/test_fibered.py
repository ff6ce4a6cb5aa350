import numpy as np
import pytest

from conifold.fibered import (
    BaseArc,
    CriticalValue,
    EllipticFibration,
    FiberedSphere,
    NotASphereError,
    PathStep,
    build_sphere,
    compose_with_automorphism,
    det_pairing,
    is_null_homologous,
    link_arcs,
    picard_lefschetz_matrix,
    picard_lefschetz_transport,
    sphere_pairing,
    total_monodromy,
    validate_fibre_product,
)


def fib(name, *cvs):
    return EllipticFibration(name, tuple(CriticalValue(*cv) for cv in cvs))


F1 = fib("F1", ("a", 0j, (1, 0)), ("a2", 1 + 0j, (0, 1)), ("t", 2j, (0, 0), True))
F2 = fib("F2", ("b", 5 + 0j, (0, 1)), ("b2", 6 + 0j, (1, 0)), ("u", 7j, (0, 0), True))


def test_smooth_fibre_product():
    chk = validate_fibre_product(F1, F2)
    assert chk.smooth and chk.nodes == ()


def test_shared_value_is_a_node():
    G = fib("G", ("c", 0j, (1, 1)))
    chk = validate_fibre_product(F1, G)
    assert not chk.smooth
    assert [(a, b) for a, b, _ in chk.nodes] == [("a", "c")]


def test_automorphism_moves_critical_values():
    # z -> z + 10 fixes no critical value of F1
    G = compose_with_automorphism(F1, (1, 10, 0, 1))
    assert validate_fibre_product(F1, G).smooth
    with pytest.raises(ValueError):
        compose_with_automorphism(F1, (1, 0, 1, 0))


def test_transport_examples():
    assert picard_lefschetz_transport((1, 0), (0, 1)) == (1, 1)
    assert picard_lefschetz_transport((3, -2), (0, 0)) == (3, -2)
    assert picard_lefschetz_transport((2, 3), (2, 3)) == (2, 3)


def test_transport_inverse():
    for c in [(1, 0), (2, -1), (0, 5)]:
        for v in [(1, 1), (0, 1), (2, 3)]:
            there = picard_lefschetz_transport(c, v)
            assert picard_lefschetz_transport(there, v, -1) == c


def test_transport_matrix_agrees():
    v = (2, -1)
    T = picard_lefschetz_matrix(v)
    for c in [(1, 0), (0, 1), (3, 4)]:
        assert tuple(int(x) for x in np.dot(T, c)) == picard_lefschetz_transport(c, v)
    assert int(round(np.linalg.det(T.astype(float)))) == 1


def test_build_sphere():
    s = build_sphere(F1, F2, BaseArc("A", "a", "b"))
    assert s.class_at_reference == ((1, 0), (0, 1))
    G = fib("G", ("c", 9 + 0j, (1, 0)))
    H = fib("H", ("d", 3 + 0j, (1, 0)))
    with pytest.raises(NotASphereError, match="not a sphere"):
        build_sphere(H, G, BaseArc("X", "d", "c"))
    # (2, 0) is refused earlier: vanishing cycles are primitive
    with pytest.raises(ValueError):
        fib("G", ("c", 9 + 0j, (2, 0)))


def test_trivial_class_builds():
    s = build_sphere(F1, F2, BaseArc("N", "t", "b"))
    assert s.trivial == (True, False)


def test_critical_value_validation():
    with pytest.raises(ValueError):
        CriticalValue("x", 0j, (2, 4))
    with pytest.raises(ValueError):
        CriticalValue("x", 0j, (1, 0), True)
    with pytest.raises(ValueError):
        EllipticFibration("F", (CriticalValue("x", 0j, (1, 0)), CriticalValue("y", 0j, (0, 1))))


def test_pairing_examples():
    s1 = FiberedSphere(BaseArc("A", "a", "b"), ((1, 0), (1, 0)))
    s2 = FiberedSphere(BaseArc("B", "a2", "b2"), ((0, 1), (0, 1)))
    assert sphere_pairing(s1, s2) == 0
    A, B = link_arcs(s1.arc, s2.arc, "x", 1)
    s1 = FiberedSphere(A, s1.class_at_reference)
    s2 = FiberedSphere(B, s2.class_at_reference)
    assert sphere_pairing(s1, s2) == 1
    assert sphere_pairing(s2, s1) == -1


def test_pushed_off_copy_pairs_to_zero():
    s = build_sphere(F1, F2, BaseArc("A", "a", "b"))
    t = build_sphere(F1, F2, BaseArc("A'", "a", "b"))
    assert sphere_pairing(s, t) == 0


def test_shared_endpoint_is_not_transverse():
    s = FiberedSphere(BaseArc("A", "a", "b"), ((1, 0), (0, 1)))
    t = FiberedSphere(BaseArc("C", "a", "b2"), ((1, 0), (0, 1)))
    with pytest.raises(ValueError, match="non-transverse"):
        sphere_pairing(s, t)


def test_pairing_uses_transported_classes():
    A, B = link_arcs(BaseArc("A", "a", "b"), BaseArc("B", "a2", "b2"), "x", 1,
                     path2=[PathStep(1, "a")])
    s = build_sphere(F1, F2, A)
    t = build_sphere(F1, F2, B)
    # B's F1 class (0,1) becomes (-1,1) after passing a
    assert sphere_pairing(s, t) == det_pairing((1, 0), (-1, 1)) * det_pairing((0, 1), (1, 0))


def test_null_homology_lemma():
    s = build_sphere(F1, F2, BaseArc("N", "t", "u"))
    assert is_null_homologous(s, F1, F2)
    s = build_sphere(F1, F2, BaseArc("A", "a", "b"))
    assert not is_null_homologous(s, F1, F2)
    s = build_sphere(F1, F2, BaseArc("M", "t", "b"))
    assert not is_null_homologous(s, F1, F2)


def test_total_monodromy():
    G = fib("G", ("p", 0j, (1, 0)), ("q", 1 + 0j, (0, 1)))
    M = total_monodromy(G)
    expected = picard_lefschetz_matrix((0, 1)).dot(picard_lefschetz_matrix((1, 0)))
    assert (M == expected).all()
    with pytest.raises(ValueError):
        total_monodromy(G, ["p"])


def test_monodromy_conjugation_invariant():
    # cyclic reordering of the loop changes the product only by conjugation
    G = fib("G", ("p", 0j, (1, 0)), ("q", 1 + 0j, (0, 1)), ("r", 2 + 0j, (1, 1)))
    M1 = total_monodromy(G, ["p", "q", "r"]).astype(float)
    M2 = total_monodromy(G, ["q", "r", "p"]).astype(float)
    assert np.isclose(np.trace(M1), np.trace(M2))
    assert np.isclose(np.linalg.det(M1), 1.0)
