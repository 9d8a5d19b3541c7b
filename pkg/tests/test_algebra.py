"""Tests for the compact matrix algebra constructions."""
import numpy as np
import pytest

from homcurv import (
    bracket,
    ad_operator,
    build_algebra,
    centralizer_subalgebra,
    coords_of,
    direct_sum,
    group_element,
    matrix_of,
    q_inner,
    rank,
    validate_algebra,
)

SQ2 = np.sqrt(2.0)


def test_family_dimensions():
    assert build_algebra("so", 3).dim == 3
    assert build_algebra("so", 5).dim == 10
    assert build_algebra("so", 7).dim == 21
    assert build_algebra("su", 2).dim == 3
    assert build_algebra("su", 3).dim == 8
    assert build_algebra("su", 5).dim == 24
    assert build_algebra("u", 1).dim == 1
    assert build_algebra("u", 3).dim == 9
    assert build_algebra("sp", 1).dim == 3
    assert build_algebra("sp", 2).dim == 10
    assert build_algebra("sp", 3).dim == 21


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        build_algebra("gl", 3)
    with pytest.raises(ValueError):
        build_algebra("so", 0)


def test_basis_is_orthonormal():
    for fam, n in [("so", 5), ("su", 3), ("u", 3), ("sp", 2)]:
        alg = build_algebra(fam, n)
        mats = alg.realization.basis_matrices
        gram = np.real(-np.einsum("iab,jba->ij", mats, mats))
        assert np.max(np.abs(gram - np.eye(alg.dim))) < 1e-12


def test_so3_structure_constants():
    # frozen: with the ordered seed basis of so(3), C[0,1,2] = -1/sqrt(2)
    c = build_algebra("so", 3).structure_constants
    assert abs(c[0, 1, 2] + 1 / SQ2) < 1e-14
    assert abs(c[1, 2, 0] + 1 / SQ2) < 1e-14
    assert abs(c[0, 2, 1] - 1 / SQ2) < 1e-14


def test_su2_matches_sp1():
    # both are the quaternion algebra: C[0,1,2] = +sqrt(2) in each
    c_su = build_algebra("su", 2).structure_constants
    c_sp = build_algebra("sp", 1).structure_constants
    assert abs(c_su[0, 1, 2] - SQ2) < 1e-14
    assert np.max(np.abs(c_su - c_sp)) < 1e-14


def test_structure_constants_totally_antisymmetric():
    for fam, n in [("so", 5), ("su", 4), ("sp", 2)]:
        c = build_algebra(fam, n).structure_constants
        assert np.max(np.abs(c + np.swapaxes(c, 0, 1))) < 1e-13
        assert np.max(np.abs(c + np.swapaxes(c, 1, 2))) < 1e-13


def test_validate_residuals():
    for fam, n in [("so", 7), ("su", 5), ("sp", 3), ("u", 3)]:
        report = validate_algebra(build_algebra(fam, n))
        assert report["jacobi"] < 1e-12
        assert report["orthonormality"] < 1e-10
        assert report["closure"] < 1e-10


def test_bracket_matches_matrix_commutator():
    rng = np.random.default_rng(20240901)
    for fam, n in [("so", 4), ("su", 3), ("sp", 2), ("u", 2)]:
        alg = build_algebra(fam, n)
        for _ in range(5):
            x = rng.standard_normal(alg.dim)
            y = rng.standard_normal(alg.dim)
            lhs = matrix_of(alg, bracket(alg, x, y))
            mx, my = matrix_of(alg, x), matrix_of(alg, y)
            assert np.max(np.abs(lhs - (mx @ my - my @ mx))) < 1e-10


def test_ad_operator_consistent_with_bracket():
    rng = np.random.default_rng(7)
    alg = build_algebra("su", 3)
    x = rng.standard_normal(alg.dim)
    y = rng.standard_normal(alg.dim)
    assert np.allclose(ad_operator(alg, x) @ y, bracket(alg, x, y), atol=1e-12)
    # ad_x is skew for the invariant inner product
    ad = ad_operator(alg, x)
    assert np.max(np.abs(ad + ad.T)) < 1e-12


def test_coords_roundtrip():
    rng = np.random.default_rng(11)
    for fam, n in [("so", 5), ("sp", 2), ("u", 3)]:
        alg = build_algebra(fam, n)
        v = rng.standard_normal(alg.dim)
        assert np.allclose(coords_of(alg, matrix_of(alg, v)), v, atol=1e-12)


def test_q_invariance_random_triples():
    rng = np.random.default_rng(99)
    alg = build_algebra("sp", 2)
    for _ in range(20):
        x, y, z = rng.standard_normal((3, alg.dim))
        lhs = q_inner(alg, bracket(alg, x, y), z)
        rhs = -q_inner(alg, y, bracket(alg, x, z))
        assert abs(lhs - rhs) < 1e-10


def test_rank_values():
    assert rank(build_algebra("su", 3)) == 2
    assert rank(build_algebra("so", 7)) == 3
    assert rank(build_algebra("sp", 3)) == 3
    assert rank(build_algebra("u", 2)) == 2


def test_direct_sum():
    alg = direct_sum(build_algebra("su", 3), build_algebra("so", 3))
    assert alg.dim == 11
    assert alg.factor_slices == ((0, 8), (8, 11))
    assert rank(alg) == 3
    validate_algebra(alg)
    # cross-factor brackets vanish
    rng = np.random.default_rng(3)
    x = np.concatenate([rng.standard_normal(8), np.zeros(3)])
    y = np.concatenate([np.zeros(8), rng.standard_normal(3)])
    assert np.max(np.abs(bracket(alg, x, y))) < 1e-13


def test_build_is_deterministic():
    a = build_algebra("sp", 3)
    b = build_algebra("sp", 3)
    assert np.array_equal(a.structure_constants, b.structure_constants)
    assert np.array_equal(a.realization.basis_matrices, b.realization.basis_matrices)


def test_group_element_and_centralizer_su5():
    alg = build_algebra("su", 5)
    g = group_element(alg, np.diag([-1, -1, -1, -1, 1]).astype(complex))
    # Ad is orthogonal
    assert np.max(np.abs(g.ad.T @ g.ad - np.eye(alg.dim))) < 1e-10
    fixed = centralizer_subalgebra(alg, g)
    assert fixed.shape[0] == 16


def test_group_element_and_centralizer_sp2():
    alg = build_algebra("sp", 2)
    g = group_element(alg, np.diag([-1, 1, -1, 1]).astype(complex))
    fixed = centralizer_subalgebra(alg, g)
    assert fixed.shape[0] == 6


def test_group_element_rejects_bad_matrix():
    alg = build_algebra("su", 3)
    with pytest.raises(ValueError):
        group_element(alg, np.diag([2.0, 1.0, 1.0]).astype(complex))
