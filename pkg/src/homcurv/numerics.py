"""Small linear-algebra helpers shared across the package.

Vectors are 1-D float64 arrays; stacks of vectors are 2-D arrays with one
vector per row.  All routines are deterministic.
"""
from __future__ import annotations

import numpy as np


def rng_from(*parts: int) -> np.random.Generator:
    """Deterministic generator keyed by a tuple of non-negative integers."""
    for p in parts:
        if p < 0:
            raise ValueError(f"seed parts must be non-negative, got {parts}")
    return np.random.default_rng(np.random.SeedSequence(list(parts)))


def orthonormalize_rows(rows: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Gram-Schmidt on the rows, in order, dropping dependent rows.

    Row order is preserved so that constructions relying on a documented
    basis order stay reproducible.
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    out: list[np.ndarray] = []
    for v in rows:
        w = v.copy()
        for u in out:
            w -= (w @ u) * u
        # second pass guards against loss of orthogonality for near-dependent input
        for u in out:
            w -= (w @ u) * u
        n = np.linalg.norm(w)
        if n > tol * max(1.0, np.linalg.norm(v)):
            out.append(w / n)
    if not out:
        return np.zeros((0, rows.shape[1]))
    return np.array(out)


def nullspace(mat: np.ndarray, rtol: float = 1e-10) -> np.ndarray:
    """Orthonormal basis of the kernel, one vector per row."""
    mat = np.atleast_2d(mat)
    if mat.size == 0:
        return np.eye(mat.shape[1])
    u, s, vt = np.linalg.svd(mat, full_matrices=True)
    smax = s[0] if len(s) else 0.0
    cut = rtol * max(smax, 1.0)
    rank = int(np.sum(s > cut))
    return vt[rank:]


def kernel_dimension(mat: np.ndarray, rtol: float = 1e-8) -> int:
    s = np.linalg.svd(np.atleast_2d(mat), compute_uv=False)
    if len(s) == 0:
        return mat.shape[1]
    cut = rtol * max(s[0], 1.0)
    return int(mat.shape[1] - np.sum(s > cut))


def symmetric_basis(n: int) -> np.ndarray:
    """Frobenius-orthonormal basis of symmetric n x n matrices, shape (m, n, n)."""
    mats = []
    for i in range(n):
        m = np.zeros((n, n))
        m[i, i] = 1.0
        mats.append(m)
    r = 1.0 / np.sqrt(2.0)
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n))
            m[i, j] = r
            m[j, i] = r
            mats.append(m)
    return np.array(mats)


class ClusterError(RuntimeError):
    """Raised when a value list cannot be clustered unambiguously."""


def cluster_values(values: np.ndarray, rel_tol: float = 1e-8,
                   guard: float = 100.0) -> list[np.ndarray]:
    """Group sorted scalar values into clusters separated by clear gaps.

    Returns index arrays into `values`, cluster by cluster in ascending order.
    A gap between `rel_tol*scale` and `guard*rel_tol*scale` is ambiguous at the
    stated tolerance and raises ClusterError instead of silently deciding.
    """
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        return []
    order = np.argsort(values)
    sv = values[order]
    scale = max(1.0, float(np.max(np.abs(sv))))
    lo = rel_tol * scale
    hi = guard * lo
    clusters: list[list[int]] = [[int(order[0])]]
    for prev, idx in zip(sv[:-1], order[1:]):
        cur = values[idx]
        gap = cur - prev
        if lo <= gap < hi:
            raise ClusterError(
                f"ambiguous cluster boundary: gap {gap:.3e} lies in the guard band "
                f"[{lo:.3e}, {hi:.3e}); re-run with a different seed")
        if gap < lo:
            clusters[-1].append(int(idx))
        else:
            clusters.append([int(idx)])
    return [np.array(c) for c in clusters]


def principal_angle_gap(a: np.ndarray, b: np.ndarray) -> float:
    """Largest principal angle (radians) between the row spans of a and b."""
    qa = orthonormalize_rows(a)
    qb = orthonormalize_rows(b)
    if qa.shape[0] != qb.shape[0]:
        return np.pi / 2
    s = np.linalg.svd(qa @ qb.T, compute_uv=False)
    s = np.clip(s, -1.0, 1.0)
    return float(np.arccos(np.min(s))) if len(s) else 0.0
