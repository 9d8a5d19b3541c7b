"""Invariant metrics on the complement p.

A metric is a symmetric positive definite matrix on p-coordinates commuting
with every isotropy action.  Constructors cover the normal metric, diagonal
rescalings of isotypic components, seeded random draws from the interior of
the cone, and pullback along a normalizing group element.
"""
from __future__ import annotations

import numpy as np

from .algebra import GroupElement
from .isotypic import IsotypicDecomposition, symmetric_commutant_basis
from .numerics import rng_from
from .spaces import HomogeneousSpace, isotropy_actions


def normal_metric(space: HomogeneousSpace) -> np.ndarray:
    """The bi-invariant-induced metric: identity in p-coordinates."""
    return np.eye(space.dim_p)


def diagonal_metric(decomposition: IsotypicDecomposition,
                    scales) -> np.ndarray:
    """Metric scaling the i-th isotypic component by scales[i]."""
    scales = np.asarray(scales, dtype=float)
    if scales.shape != (len(decomposition.components),):
        raise ValueError(
            f"need one scale per component "
            f"({len(decomposition.components)}), got {scales.shape}")
    if np.any(scales <= 0):
        raise ValueError("metric scales must be positive")
    g = np.zeros((decomposition.dim_p, decomposition.dim_p))
    for t, comp in zip(scales, decomposition.components):
        g += t * comp.basis.T @ comp.basis
    return g


def sample_metric(space: HomogeneousSpace, seed: int = 0) -> np.ndarray:
    """Seeded random metric from the interior of the invariant cone.

    A standard normal combination of the symmetric commutant basis, shifted
    so the smallest eigenvalue is at least 0.1.
    """
    comm = symmetric_commutant_basis(space)
    rng = rng_from(seed)
    g = np.einsum("c,cij->ij", rng.standard_normal(len(comm)), comm)
    lam = np.linalg.eigvalsh(g)[0]
    return g + (abs(lam) + 0.1) * np.eye(space.dim_p)


def conjugate_metric(space: HomogeneousSpace, metric: np.ndarray,
                     g: GroupElement) -> np.ndarray:
    """Pullback of the metric along the adjoint action of a normalizing element."""
    img = g.ad @ space.p_basis.T
    a = space.p_basis @ img
    leak = np.linalg.norm(img - space.p_basis.T @ a)
    if leak > 1e-9:
        raise ValueError(
            f"group element does not preserve p (leak {leak:.3e}); "
            "it must normalize the isotropy subgroup")
    return a @ metric @ a.T


def equivariance_residual(space: HomogeneousSpace, metric: np.ndarray) -> float:
    """Largest commutator norm of the metric with an isotropy action."""
    acts = isotropy_actions(space)
    if not acts:
        return 0.0
    return max(float(np.max(np.abs(metric @ a - a @ metric))) for a in acts)


def validate_metric(space: HomogeneousSpace, metric: np.ndarray) -> dict:
    """Residual report; raises ValueError if the matrix is not an invariant metric."""
    metric = np.asarray(metric, dtype=float)
    if metric.shape != (space.dim_p, space.dim_p):
        raise ValueError(f"metric shape {metric.shape} does not match "
                         f"dim p = {space.dim_p}")
    sym = float(np.max(np.abs(metric - metric.T)))
    eigs = np.linalg.eigvalsh((metric + metric.T) / 2)
    equiv = equivariance_residual(space, metric)
    report = {"symmetry": sym, "equivariance": equiv,
              "min_eigenvalue": float(eigs[0]), "max_eigenvalue": float(eigs[-1])}
    if sym > 1e-9:
        raise ValueError(f"metric is not symmetric (residual {sym:.3e})")
    if eigs[0] <= 0:
        raise ValueError(f"metric is not positive definite "
                         f"(smallest eigenvalue {eigs[0]:.3e})")
    if equiv > 1e-9:
        raise ValueError(f"metric does not commute with the isotropy action "
                         f"(residual {equiv:.3e})")
    return report


def metric_inner(metric: np.ndarray, x: np.ndarray, y: np.ndarray) -> float:
    return float(x @ metric @ y)
