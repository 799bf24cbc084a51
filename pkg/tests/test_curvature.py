import numpy as np
import pytest

from geoverify.chart import FrameVector, Point
from geoverify.curvature import (
    christoffel_at,
    coercivity_check,
    frame_connection,
    metric_compatibility_defect,
    ricci_frame,
    riemann_frame,
    riemann_frame_table,
    scalar_curvature,
)
from geoverify.jets import DomainError
from geoverify.tables import CONNECTION_TABLE, CURVATURE_TABLE, RICCI_FRAME, full_curvature_tensor

from oracles import fd_christoffel, rand_point


def test_christoffel_is_symmetric():
    rng = np.random.default_rng(11)
    for _ in range(100):
        G = christoffel_at(rand_point(rng))
        assert np.max(np.abs(G - G.transpose(0, 2, 1))) < 1e-12


def test_christoffel_matches_finite_differences():
    rng = np.random.default_rng(12)
    for _ in range(20):
        p = rand_point(rng)
        got = christoffel_at(p)
        ref = fd_christoffel(p.astuple())
        assert np.max(np.abs(got - ref)) < 1e-6


def test_metric_compatibility():
    rng = np.random.default_rng(13)
    for _ in range(50):
        assert metric_compatibility_defect(rand_point(rng)) < 1e-9


def test_connection_table_examples():
    p = Point(0.4, -0.8, 1.3, 0.9)
    fc = frame_connection(p)
    np.testing.assert_allclose(fc[0, 0], [0.0, 0.0, 0.0, 1.0], atol=1e-12)  # nabla_e1 e1 = e4
    np.testing.assert_allclose(fc[2, 3], [0.0, 0.0, -2.0, 0.0], atol=1e-12)  # nabla_e3 e4 = -2 e3
    np.testing.assert_allclose(fc[3], np.zeros((4, 4)), atol=1e-12)  # nabla_e4 . = 0


def test_connection_table_full():
    rng = np.random.default_rng(14)
    for _ in range(50):
        fc = frame_connection(rand_point(rng))
        assert np.max(np.abs(fc - CONNECTION_TABLE)) < 1e-9


def test_connection_is_point_independent():
    rng = np.random.default_rng(15)
    ref = frame_connection(rand_point(rng))
    for _ in range(100):
        assert np.max(np.abs(frame_connection(rand_point(rng)) - ref)) < 1e-9


def test_connection_metric_antisymmetry():
    rng = np.random.default_rng(16)
    for _ in range(50):
        fc = frame_connection(rand_point(rng))
        assert np.max(np.abs(fc + fc.transpose(0, 2, 1))) < 1e-9


def test_riemann_reference_entries():
    p = Point(-0.6, 0.2, 0.8, 1.7)
    assert riemann_frame(p, 1, 2, 1, 2) == pytest.approx(-2.0, abs=1e-9)
    assert riemann_frame(p, 3, 4, 3, 4) == pytest.approx(4.0, abs=1e-9)
    for k in range(1, 5):
        for l in range(1, 5):
            assert riemann_frame(p, 1, 1, k, l) == pytest.approx(0.0, abs=1e-9)


def test_riemann_index_validation():
    p = Point(0.0, 0.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        riemann_frame(p, 0, 1, 1, 2)
    with pytest.raises(ValueError):
        riemann_frame(p, 1, 2, 3, 5)


def test_riemann_full_table():
    expected = full_curvature_tensor()
    rng = np.random.default_rng(17)
    for _ in range(50):
        R = riemann_frame_table(rand_point(rng))
        assert np.max(np.abs(R - expected)) < 1e-9


def test_riemann_symmetries_and_bianchi():
    rng = np.random.default_rng(18)
    for _ in range(100):
        R = riemann_frame_table(rand_point(rng))
        assert np.max(np.abs(R + R.transpose(1, 0, 2, 3))) < 1e-9
        assert np.max(np.abs(R + R.transpose(0, 1, 3, 2))) < 1e-9
        assert np.max(np.abs(R - R.transpose(2, 3, 0, 1))) < 1e-9
        bianchi = R + R.transpose(1, 2, 0, 3) + R.transpose(2, 0, 1, 3)
        assert np.max(np.abs(bianchi)) < 1e-9


def test_listed_curvature_values():
    p = Point(0.9, 1.1, -0.3, 1.2)
    for (i, j, k, l), value in CURVATURE_TABLE.items():
        assert riemann_frame(p, i, j, k, l) == pytest.approx(value, abs=1e-9)


def test_ricci_is_constant_diagonal():
    rng = np.random.default_rng(19)
    for _ in range(100):
        p = rand_point(rng)
        ric = ricci_frame(p)
        assert np.max(np.abs(ric - RICCI_FRAME)) < 1e-9
        assert np.max(np.abs(ric - ric.T)) < 1e-9
        assert scalar_curvature(p) == pytest.approx(-12.0, abs=1e-9)


def test_domain_error_propagates():
    with pytest.raises(DomainError):
        frame_connection((0.0, 0.0, 0.0, -1.0))


def test_coercivity_reference_values():
    p = Point(0.1, 0.2, 0.3, 1.4)
    assert coercivity_check(p, FrameVector([1, 0, 0, 0]), -6.0) == pytest.approx(6.0, abs=1e-9)
    assert coercivity_check(p, FrameVector([0, 0, 1, 0]), -6.0) == pytest.approx(0.0, abs=1e-9)
    assert coercivity_check(p, FrameVector([1, 1, 1, 1]), -6.0) == pytest.approx(12.0, abs=1e-9)


def test_coercivity_nonnegative_at_soliton_constant():
    rng = np.random.default_rng(20)
    for _ in range(200):
        p = rand_point(rng)
        v = FrameVector(rng.uniform(-3, 3, 4))
        val = coercivity_check(p, v, -6.0)
        assert val >= -1e-9
        assert val == pytest.approx(6.0 * (v.comp[0] ** 2 + v.comp[1] ** 2), abs=1e-9)
