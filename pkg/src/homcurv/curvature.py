"""Sectional curvature of invariant metrics.

For tangent vectors x, y in p and an invariant metric G the unnormalized
curvature of the plane they span is assembled from four bracket terms; the
normal metric G = Id collapses it to the familiar quarter/full split between
the p- and h-parts of [x, y].  The plane's sectional curvature divides by the
metric Gram determinant.  Analytic gradients with respect to both plane
vectors support the descent searches in the witness and certifier modules.
"""
from __future__ import annotations

import numpy as np

from .spaces import HomogeneousSpace


class Curvature:
    """Curvature evaluator for one space and one invariant metric.

    Plane vectors are given in p-coordinates.
    """

    def __init__(self, space: HomogeneousSpace, metric: np.ndarray):
        metric = np.asarray(metric, dtype=float)
        if metric.shape != (space.dim_p, space.dim_p):
            raise ValueError(f"metric shape {metric.shape} does not match "
                             f"dim p = {space.dim_p}")
        self.space = space
        self.gm = metric
        self.gm_inv = np.linalg.inv(metric)
        self._p = space.p_basis
        self._c = space.ambient.structure_constants

    # ambient-coordinate helpers -------------------------------------------

    def _br(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", a, b, self._c)

    def _g(self, a: np.ndarray) -> np.ndarray:
        # metric as an ambient operator supported on p
        return self._p.T @ (self.gm @ (self._p @ a))

    def _ginv(self, a: np.ndarray) -> np.ndarray:
        return self._p.T @ (self.gm_inv @ (self._p @ a))

    # public evaluations ----------------------------------------------------

    def b_plus(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Symmetric bracket-metric term, unprojected ambient coordinates."""
        xa, ya = self._p.T @ x, self._p.T @ y
        return 0.5 * (self._br(xa, self._g(ya)) - self._br(self._g(xa), ya))

    def numerator(self, x: np.ndarray, y: np.ndarray) -> float:
        xa, ya = self._p.T @ x, self._p.T @ y
        gx, gy = self._g(xa), self._g(ya)
        c = self._br(xa, ya)
        bminus = 0.5 * (self._br(xa, gy) + self._br(gx, ya))
        bplus = 0.5 * (self._br(xa, gy) - self._br(gx, ya))
        bxx = self._br(xa, gx)
        byy = self._br(ya, gy)
        return float(bminus @ c
                     - 0.75 * c @ self._g(c)
                     + bplus @ self._ginv(bplus)
                     - bxx @ self._ginv(byy))

    def gram(self, x: np.ndarray, y: np.ndarray) -> float:
        xx = x @ self.gm @ x
        yy = y @ self.gm @ y
        xy = x @ self.gm @ y
        return float(xx * yy - xy * xy)

    def sectional(self, x: np.ndarray, y: np.ndarray) -> float:
        d = self.gram(x, y)
        if d < 1e-14:
            raise ValueError("plane vectors are numerically dependent")
        return self.numerator(x, y) / d

    def numerator_gradient(self, x: np.ndarray,
                           y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Gradients of the unnormalized curvature in both plane vectors."""
        xa, ya = self._p.T @ x, self._p.T @ y
        gx, gy = self._g(xa), self._g(ya)
        c = self._br(xa, ya)
        gc = self._g(c)
        bminus = 0.5 * (self._br(xa, gy) + self._br(gx, ya))
        bplus = 0.5 * (self._br(xa, gy) - self._br(gx, ya))
        u = self._ginv(bplus)
        wx = self._ginv(self._br(xa, gx))   # inverse metric applied to B+(x, x)
        wy = self._ginv(self._br(ya, gy))

        grad_x = (0.5 * self._br(gy, c) + 0.5 * self._g(self._br(ya, c))
                  + self._br(ya, bminus - 1.5 * gc)
                  + self._br(gy, u) - self._g(self._br(ya, u))
                  - self._br(gx, wy) + self._g(self._br(xa, wy)))
        grad_y = (0.5 * self._br(gx, -c) + 0.5 * self._g(self._br(xa, -c))
                  + self._br(xa, -bminus + 1.5 * gc)
                  + self._br(gx, u) - self._g(self._br(xa, u))
                  - self._br(gy, wx) + self._g(self._br(ya, wx)))
        return self._p @ grad_x, self._p @ grad_y

    def sectional_gradient(self, x: np.ndarray, y: np.ndarray):
        """Sectional value plus its gradients in both plane vectors."""
        d = self.gram(x, y)
        if d < 1e-14:
            raise ValueError("plane vectors are numerically dependent")
        f = self.numerator(x, y)
        sec = f / d
        fx, fy = self.numerator_gradient(x, y)
        gx_m, gy_m = self.gm @ x, self.gm @ y
        xx, yy, xy = x @ gx_m, y @ gy_m, x @ gy_m
        dx = 2 * yy * gx_m - 2 * xy * gy_m
        dy = 2 * xx * gy_m - 2 * xy * gx_m
        return sec, (fx - sec * dx) / d, (fy - sec * dy) / d


def curvature_numerator(space: HomogeneousSpace, metric: np.ndarray,
                        x: np.ndarray, y: np.ndarray) -> float:
    return Curvature(space, metric).numerator(x, y)


def sectional_curvature(space: HomogeneousSpace, metric: np.ndarray,
                        x: np.ndarray, y: np.ndarray) -> float:
    return Curvature(space, metric).sectional(x, y)


def b_plus(space: HomogeneousSpace, metric: np.ndarray,
           x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return Curvature(space, metric).b_plus(x, y)
