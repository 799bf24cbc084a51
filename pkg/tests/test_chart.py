import numpy as np
import pytest

from geoverify.chart import (
    AnalyticVectorField,
    CoordVector,
    FrameVector,
    Point,
    as_point,
    constant_coordinate_field,
    coframe_matrix,
    coordinate_field,
    frame_at,
    frame_matrix,
    inverse_metric_at,
    metric_at,
    to_coord,
    to_frame,
)
from geoverify.jets import DomainError

from oracles import rand_point


def test_metric_reference_values():
    g = metric_at(Point(0.0, 0.0, 0.0, 1.0))
    np.testing.assert_allclose(g, np.diag([1.0, 1.0, 0.25, 0.25]), atol=0)

    g = metric_at(Point(0.0, 0.0, 1.0, 1.0))
    assert g[0, 1] == -1.0
    assert g[1, 1] == 2.0


def test_metric_inverse_identity():
    rng = np.random.default_rng(3)
    for _ in range(100):
        p = rand_point(rng)
        err = np.max(np.abs(metric_at(p) @ inverse_metric_at(p) - np.eye(4)))
        assert err < 1e-12


def test_metric_block_structure():
    rng = np.random.default_rng(4)
    for _ in range(100):
        g = metric_at(rand_point(rng))
        for i, j in ((0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
            assert g[i, j] == 0.0
            assert g[j, i] == 0.0


def test_frame_reference_values():
    e = frame_at(Point(0.0, 0.0, 0.0, 1.0))
    np.testing.assert_allclose(e[2].comp, [0.0, 0.0, 2.0, 0.0], atol=0)
    np.testing.assert_allclose(e[3].comp, [0.0, 0.0, 0.0, 2.0], atol=0)

    e = frame_at(Point(0.0, 0.0, 2.0, 4.0))
    np.testing.assert_allclose(e[1].comp, [1.0, 0.5, 0.0, 0.0], atol=1e-15)


def test_frame_is_orthonormal():
    rng = np.random.default_rng(5)
    for _ in range(100):
        p = rand_point(rng)
        E = frame_matrix(p)
        gram = E @ metric_at(p) @ E.T
        assert np.max(np.abs(gram - np.eye(4))) < 1e-12


def test_coframe_duality():
    rng = np.random.default_rng(6)
    for _ in range(50):
        p = rand_point(rng)
        assert np.max(np.abs(coframe_matrix(p) @ frame_matrix(p).T - np.eye(4))) < 1e-12


def test_basis_conversion_examples():
    v = to_frame(CoordVector([1.0, 0.0, 0.0, 0.0]), Point(0.0, 0.0, 0.0, 1.0))
    np.testing.assert_allclose(v.comp, [1.0, 0.0, 0.0, 0.0], atol=1e-15)

    rng = np.random.default_rng(7)
    for _ in range(20):
        p = rand_point(rng)
        e4 = to_coord(FrameVector([0.0, 0.0, 0.0, 1.0]), p)
        np.testing.assert_allclose(e4.comp, [0.0, 0.0, 0.0, 2.0 * p.t], atol=1e-13)


def test_basis_round_trip_preserves_norm():
    rng = np.random.default_rng(8)
    for _ in range(50):
        p = rand_point(rng)
        v = FrameVector(rng.uniform(-3, 3, 4))
        w = to_frame(to_coord(v, p), p)
        assert np.max(np.abs(w.comp - v.comp)) < 1e-12
        u = to_coord(v, p)
        g = metric_at(p)
        assert float(u.comp @ g @ u.comp) == pytest.approx(v.norm_squared(), rel=1e-12)


def test_domain_validation():
    with pytest.raises(DomainError):
        Point(0.0, 0.0, 0.0, 0.0)
    with pytest.raises(DomainError):
        Point(0.0, 0.0, 0.0, -1.0)
    with pytest.raises(DomainError):
        as_point((0.0, 0.0, 0.0, -2.0))
    with pytest.raises(DomainError):
        metric_at((1.0, 1.0, 1.0, 0.0))


def test_field_basis_tag_is_validated():
    zero = lambda x, y, s, t: 0.0
    with pytest.raises(ValueError):
        AnalyticVectorField((zero, zero, zero, zero), "mixed")


def test_coordinate_field_frame_conversion():
    # d/dy = sqrt(t) e2 - s t^(-1/2) e1
    dy = constant_coordinate_field([0.0, 1.0, 0.0, 0.0])
    rng = np.random.default_rng(9)
    for _ in range(20):
        p = rand_point(rng)
        vals = dy.frame_values(p)
        expected = [-p.s / np.sqrt(p.t), np.sqrt(p.t), 0.0, 0.0]
        np.testing.assert_allclose(vals, expected, atol=1e-13)


def test_frame_component_jets_carry_derivatives():
    # coordinate field t^2 d/ds has frame component 3: none, component 2: t^2/(2t) = t/2
    f = coordinate_field(
        lambda x, y, s, t: 0.0,
        lambda x, y, s, t: 0.0,
        lambda x, y, s, t: t * t,
        lambda x, y, s, t: 0.0,
    )
    p = Point(0.3, -0.7, 1.1, 1.6)
    jets = f.frame_component_jets(p)
    assert jets[2].value == pytest.approx(p.t / 2.0, rel=1e-14)
    assert jets[2].grad[3] == pytest.approx(0.5, abs=1e-14)
    assert jets[2].hess[3, 3] == pytest.approx(0.0, abs=1e-14)
