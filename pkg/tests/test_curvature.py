"""Tests for the sectional curvature evaluator."""
import numpy as np
import pytest

from homcurv import bracket, catalog_build
from homcurv.curvature import Curvature, b_plus, sectional_curvature
from homcurv.metrics import normal_metric, sample_metric


def test_round_sphere_is_half():
    space = catalog_build("sphere-so", n=4)
    cv = Curvature(space, normal_metric(space))
    rng = np.random.default_rng(101)
    for _ in range(200):
        x, y = rng.standard_normal((2, 4))
        assert abs(cv.sectional(x, y) - 0.5) < 1e-8


def test_identity_metric_reduction():
    # numerator at G = Id equals |c_h|^2 + |c_p|^2 / 4
    rng = np.random.default_rng(55)
    for label, kw in [("berger7", {}), ("wallach6", {}),
                      ("sp2circle", {"p": 3, "q": 1})]:
        space = catalog_build(label, **kw)
        cv = Curvature(space, normal_metric(space))
        for _ in range(30):
            x, y = rng.standard_normal((2, space.dim_p))
            c = bracket(space.ambient, space.p_embed(x), space.p_embed(y))
            cp = space.project_p(c)
            ch = c - cp
            ref = ch @ ch + 0.25 * cp @ cp
            assert abs(cv.numerator(x, y) - ref) < 1e-10


def test_b_plus_lies_in_p_and_is_symmetric():
    rng = np.random.default_rng(23)
    for label, kw in [("stiefel", {}), ("wallach6", {}),
                      ("s3s3circle", {"p": 2, "q": 1})]:
        space = catalog_build(label, **kw)
        g = sample_metric(space, seed=2)
        for _ in range(20):
            x, y = rng.standard_normal((2, space.dim_p))
            v = b_plus(space, g, x, y)
            assert np.linalg.norm(v - space.project_p(v)) < 1e-9
            assert np.allclose(v, b_plus(space, g, y, x), atol=1e-10)


def test_b_plus_vanishes_for_normal_metric():
    space = catalog_build("wallach6")
    rng = np.random.default_rng(5)
    x, y = rng.standard_normal((2, 6))
    assert np.max(np.abs(b_plus(space, normal_metric(space), x, y))) < 1e-12


def test_numerator_symmetry_and_scaling():
    space = catalog_build("sp2circle", p=3, q=1)
    cv = Curvature(space, sample_metric(space, seed=9))
    rng = np.random.default_rng(71)
    x, y = rng.standard_normal((2, 9))
    f = cv.numerator(x, y)
    assert abs(cv.numerator(y, x) - f) < 1e-10
    assert abs(cv.numerator(2 * x, 3 * y) - 36 * f) < 1e-8


def test_sectional_depends_only_on_plane():
    space = catalog_build("sp2circle", p=3, q=1)
    cv = Curvature(space, sample_metric(space, seed=9))
    rng = np.random.default_rng(72)
    x, y = rng.standard_normal((2, 9))
    s = cv.sectional(x, y)
    assert abs(cv.sectional(x, y + 0.3 * x) - s) < 1e-9
    assert abs(cv.sectional(-2.0 * x, y - x) - s) < 1e-9
    assert abs(cv.sectional(y, x) - s) < 1e-9


def test_flat_plane_in_flag_normal_metric():
    # circulant rotation and its symmetric partner commute and avoid h
    space = catalog_build("wallach6")
    perm = np.zeros((3, 3), dtype=complex)
    perm[1, 0] = perm[2, 1] = perm[0, 2] = 1
    x_amb = perm - perm.T
    w_amb = 1j * (perm + perm.T)
    from homcurv import coords_of
    x = space.p_coords(coords_of(space.ambient, x_amb))
    w = space.p_coords(coords_of(space.ambient, w_amb))
    assert np.linalg.norm(space.project_h(coords_of(space.ambient, x_amb))) < 1e-12
    cv = Curvature(space, normal_metric(space))
    assert abs(cv.sectional(x, w)) < 1e-12


def test_gradients_match_finite_differences():
    rng = np.random.default_rng(2024)
    h = 1e-6
    for label, kw in [("wallach6", {}), ("sp2circle", {"p": 3, "q": 1})]:
        space = catalog_build(label, **kw)
        n = space.dim_p
        cv = Curvature(space, sample_metric(space, seed=4))
        for _ in range(3):
            x, y = rng.standard_normal((2, n))
            fx, fy = cv.numerator_gradient(x, y)
            sec, sx, sy = cv.sectional_gradient(x, y)
            for k in range(n):
                e = np.zeros(n)
                e[k] = h
                ref = (cv.numerator(x + e, y) - cv.numerator(x - e, y)) / (2 * h)
                assert abs(fx[k] - ref) <= 1e-5 * max(1.0, abs(ref))
                ref = (cv.numerator(x, y + e) - cv.numerator(x, y - e)) / (2 * h)
                assert abs(fy[k] - ref) <= 1e-5 * max(1.0, abs(ref))
                ref = (cv.sectional(x + e, y) - cv.sectional(x - e, y)) / (2 * h)
                assert abs(sx[k] - ref) <= 1e-5 * max(1.0, abs(ref))
                ref = (cv.sectional(x, y + e) - cv.sectional(x, y - e)) / (2 * h)
                assert abs(sy[k] - ref) <= 1e-5 * max(1.0, abs(ref))


def test_rejects_degenerate_plane():
    space = catalog_build("wallach6")
    cv = Curvature(space, normal_metric(space))
    x = np.ones(6)
    with pytest.raises(ValueError):
        cv.sectional(x, 2 * x)


def test_rejects_wrong_metric_shape():
    space = catalog_build("wallach6")
    with pytest.raises(ValueError):
        Curvature(space, np.eye(5))


def test_sectional_curvature_convenience():
    space = catalog_build("berger7")
    rng = np.random.default_rng(1)
    x, y = rng.standard_normal((2, 7))
    g = normal_metric(space)
    assert sectional_curvature(space, g, x, y) == Curvature(space, g).sectional(x, y)
