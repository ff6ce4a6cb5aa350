import itertools

import numpy as np
import pytest

from conifold.localmodel import (
    MONODROMY_PI3,
    CotangentPoint,
    QuadricPoint,
    grassmannian_maps,
    local_model_dim2,
    moment_checks,
    phi,
    phi_inverse,
    project_to_quadric,
    quaternion_maps,
    random_quadric_points,
    verify_collar,
    verify_symplectomorphism,
)
from conifold.quaternion import ONE, I, J, K, Quaternion, qmul


def test_phi_examples():
    p = phi(QuadricPoint([1, 1j, 0, 0]))
    assert np.allclose(p.u, [1, 0, 0, 0]) and np.allclose(p.v, [0, -1, 0, 0])
    p = phi(QuadricPoint([0, 0, 1, 1j]))
    assert np.allclose(p.u, [0, 0, 1, 0]) and np.allclose(p.v, [0, 0, 0, -1])


def test_phi_inverse_round_trip():
    Z = random_quadric_points(1000, np.random.default_rng(1))
    err = max(np.max(np.abs(phi_inverse(phi(z)).z - z)) for z in Z)
    assert err < 1e-9


def test_inverse_by_solving_norms():
    # |x| = |y| on W, and |v| = |x||y|, so |x| = sqrt|v| independently
    Z = random_quadric_points(200, np.random.default_rng(2))
    for z in Z:
        p = phi(z)
        r = np.sqrt(np.linalg.norm(p.v))
        assert np.isclose(r, np.linalg.norm(z.real)) and np.isclose(r, np.linalg.norm(z.imag))
        assert np.allclose(z.real, r * p.u) and np.allclose(z.imag, -p.v / r)


def test_errors():
    with pytest.raises(ValueError):
        QuadricPoint([0, 0, 0, 0])
    with pytest.raises(ValueError):
        QuadricPoint([1, 0, 0, 0])
    with pytest.raises(ValueError, match="zero section"):
        phi_inverse(CotangentPoint([1, 0, 0, 0], [0, 0, 0, 0]))
    with pytest.raises(ValueError):
        CotangentPoint([2, 0, 0, 0], [0, 1, 0, 0])


def test_projection():
    q = project_to_quadric([1, 0.9j, 0.1, 0.05j])
    assert q.residual <= 1e-12


def test_symplectomorphism():
    rec = verify_symplectomorphism(300, seed=4)
    assert rec.passed
    assert rec.check("pullback of sum dv^du").residual < 1e-9
    assert rec.check("real slice: sum dv^du vanishes").residual < 1e-12


def test_collar():
    rec = verify_collar(1.0)
    assert rec.passed
    assert np.allclose(rec.data["S"]["u"], [0, 1, 0, 0])
    assert np.allclose(rec.data["S"]["v"], [-1, 0, 0, 0])
    assert rec.data["S"]["lam"] == pytest.approx(1.0)
    assert verify_collar(-1.0).data["S"]["lam"] == pytest.approx(1.0)
    assert verify_collar(2.0).data["S-"]["lam"] == pytest.approx(-4.0)
    with pytest.raises(ValueError):
        verify_collar(0)


def test_moment_maps():
    rec = moment_checks(300, seed=5)
    assert rec.passed


def test_quaternion_table():
    basis = {"1": ONE, "i": I, "j": J, "k": K}
    assert (I * I).close(-ONE) and (J * J).close(-ONE) and (K * K).close(-ONE)
    assert (I * J * K).close(-ONE)
    assert (I * J).close(K) and (J * I).close(-K)
    for a, b, c in itertools.product(basis.values(), repeat=3):
        assert ((a * b) * c).close(a * (b * c))


def test_quaternion_maps_examples():
    rec = quaternion_maps(ONE, J)
    assert np.allclose(rec.data["J_prime"], J.array())
    rec = quaternion_maps(I, J)
    assert np.allclose(rec.data["J_prime"], (-J).array())
    assert (J * I).close(-K) and (I * -J).close(-K)
    assert rec.passed


def test_quaternion_maps_rejects_bad_input():
    with pytest.raises(ValueError):
        quaternion_maps(Quaternion(2.0), J)
    with pytest.raises(ValueError):
        quaternion_maps(ONE, Quaternion(0.6, 0.8))


def test_grassmannian_example():
    rec = grassmannian_maps(ONE, I)
    assert rec.passed
    assert np.allclose(rec.data["J"], I.array()) and np.allclose(rec.data["J_prime"], I.array())
    with pytest.raises(ValueError):
        grassmannian_maps(ONE, ONE)


def test_grassmannian_random_pairs():
    rng = np.random.default_rng(8)
    for _ in range(200):
        a = rng.standard_normal(4)
        a /= np.linalg.norm(a)
        b = rng.standard_normal(4)
        b -= (b @ a) * a
        b /= np.linalg.norm(b)
        assert grassmannian_maps(a, b).passed
        assert abs(np.sum((a + 1j * b) ** 2)) < 1e-12


def test_dim2():
    rec = local_model_dim2(np.array([1, 1j, 0]), samples=200)
    assert rec.passed
    assert np.allclose(rec.data["u"], [1, 0, 0]) and np.allclose(rec.data["v"], [0, -1, 0])


def test_monodromy_matrix():
    M = MONODROMY_PI3
    assert (M @ M == np.eye(2)).all()
    assert round(np.linalg.det(M)) == -1


def test_qmul_broadcasts():
    rng = np.random.default_rng(0)
    p, q = rng.standard_normal((2, 10, 4))
    out = qmul(p, q)
    for i in range(10):
        assert np.allclose(out[i], (Quaternion.from_array(p[i]) * Quaternion.from_array(q[i])).array())
