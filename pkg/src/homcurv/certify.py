"""Multistart descent search for nonpositively curved planes.

Each start draws a random 2-frame, orthonormalizes it for the metric, and
runs gradient descent on the sectional curvature of the spanned plane with a
Barzilai-Borwein trial step and Armijo backtracking.  Finding a plane at or
below the zero tolerance is conclusive; exhausting every start above it only
reports that the search found nothing, which is evidence, not proof, of
positive curvature.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .curvature import Curvature
from .numerics import rng_from
from .spaces import HomogeneousSpace

DISCLAIMER = ("a positive verdict means no nonpositively curved plane was "
              "found by a finite random search; it is not a certificate of "
              "positive curvature")


@dataclass(frozen=True)
class CertifyReport:
    label: str
    verdict: str                     # "positive" | "nonpositive-witness" | "inconclusive"
    min_sectional: float
    plane_x: tuple[float, ...]       # p-coordinates of the minimizing frame
    plane_y: tuple[float, ...]
    start_minima: tuple              # per-start final value, None on failure
    converged_starts: int
    starts: int
    max_iters: int
    grad_tol: float
    zero_tol: float
    seed: int
    disclaimer: str
    wall_time: float = field(compare=False, default=0.0)


def _g_orthonormalize(gm: np.ndarray, x: np.ndarray, y: np.ndarray):
    x = x / np.sqrt(x @ gm @ x)
    y = y - (y @ gm @ x) * x
    ny = np.sqrt(y @ gm @ y)
    if ny < 1e-12:
        raise ValueError("degenerate frame")
    return x, y / ny


def _descend(cv: Curvature, x: np.ndarray, y: np.ndarray,
             max_iters: int, grad_tol: float):
    """Minimize the plane's sectional value; returns (value, x, y, converged)."""
    gm = cv.gm
    n = x.shape[0]
    v = np.concatenate([x, y])
    sec, gx, gy = cv.sectional_gradient(v[:n], v[n:])
    grad = np.concatenate([gx, gy])
    prev_v = prev_grad = None
    converged = False
    for _ in range(max_iters):
        gn = np.linalg.norm(grad)
        if gn <= grad_tol:
            converged = True
            break
        if prev_v is None:
            step = 1.0 / max(1.0, gn)
        else:
            dv = v - prev_v
            dg = grad - prev_grad
            denom = dg @ dg
            step = abs(dv @ dg) / denom if denom > 1e-300 else 1.0
            step = min(max(step, 1e-12), 1e6)
        accepted = False
        for _bt in range(40):
            trial = v - step * grad
            try:
                trial_sec = cv.sectional(trial[:n], trial[n:])
            except ValueError:
                step *= 0.5
                continue
            if np.isfinite(trial_sec) and trial_sec <= sec - 1e-4 * step * gn * gn:
                accepted = True
                break
            step *= 0.5
        if not accepted:
            break
        prev_v, prev_grad = v, grad
        tx, ty = _g_orthonormalize(gm, trial[:n], trial[n:])
        v = np.concatenate([tx, ty])
        sec, gx, gy = cv.sectional_gradient(v[:n], v[n:])
        grad = np.concatenate([gx, gy])
    return sec, v[:n], v[n:], converged


def certify(space: HomogeneousSpace, metric: np.ndarray, seed: int = 0,
            starts: int = 64, max_iters: int = 500, grad_tol: float = 1e-10,
            zero_tol: float = 1e-9) -> CertifyReport:
    """Search the plane Grassmannian for nonpositive sectional curvature."""
    t0 = time.perf_counter()
    cv = Curvature(space, metric)
    n = space.dim_p
    finals = []
    converged_count = 0
    best = np.inf
    best_x = best_y = np.zeros(n)
    for s in range(starts):
        rng = rng_from(seed, s)
        try:
            x, y = _g_orthonormalize(cv.gm, rng.standard_normal(n),
                                     rng.standard_normal(n))
            sec, x, y, conv = _descend(cv, x, y, max_iters, grad_tol)
        except (ValueError, FloatingPointError):
            finals.append(None)
            continue
        if not np.isfinite(sec):
            finals.append(None)
            continue
        finals.append(float(sec))
        converged_count += conv
        if sec < best:
            best, best_x, best_y = sec, x, y
    succeeded = [f for f in finals if f is not None]
    if not succeeded:
        verdict = "inconclusive"
        best = np.nan
    elif best <= zero_tol:
        verdict = "nonpositive-witness"
    else:
        verdict = "positive"
    return CertifyReport(
        label=space.label,
        verdict=verdict,
        min_sectional=float(best),
        plane_x=tuple(float(c) for c in best_x),
        plane_y=tuple(float(c) for c in best_y),
        start_minima=tuple(finals),
        converged_starts=converged_count,
        starts=starts,
        max_iters=max_iters,
        grad_tol=grad_tol,
        zero_tol=zero_tol,
        seed=seed,
        disclaimer=DISCLAIMER,
        wall_time=time.perf_counter() - t0,
    )
