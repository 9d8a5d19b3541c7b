"""Obstruction witnesses against positively curved invariant metrics.

Three mechanisms are implemented.  A pair of commuting metric eigenvectors
spans a plane whose curvature numerator vanishes identically.  An eigenvector
for the smallest metric eigenvalue together with any commuting partner z in p
yields the plane (x, G^-1 z) with nonpositive numerator.  Finally the parity
check compares the ambient and isotropy ranks: a difference outside {0, 1}
rules out positive curvature regardless of the metric.

The quotient of the rank-two symplectic group by its (3, 1) circle carries an
extra involution-type normalizer element; `symmetrize_sp2_31` conjugates any
invariant metric into the form fixed by it, which is where the witness planes
of that space become visible.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .algebra import ad_operator, group_element, quaternion_to_complex, rank
from .curvature import Curvature
from .metrics import conjugate_metric
from .numerics import cluster_values, rng_from
from .spaces import HomogeneousSpace

ACCEPT = 1e-9       # objective below this certifies a commuting pair
REJECT = 1e-6       # objective above this means no pair at these starts
NONPOS_TOL = 1e-10  # numerator bound for the min-eigenvalue plane


@dataclass(frozen=True)
class PlaneWitness:
    kind: str                    # "commuting" | "min-eigenvalue"
    found: bool
    objective: float             # best squared-bracket plane objective reached
    numerator: float | None      # curvature numerator on the witness plane
    x: np.ndarray | None         # p-coordinates, unit length
    y: np.ndarray | None
    message: str


@dataclass(frozen=True)
class RankParity:
    rank_ambient: int
    rank_isotropy: int
    dim_p: int
    difference: int
    parity_consistent: bool


@dataclass(frozen=True)
class Sp2Symmetrization:
    psi: float                   # rotation angle of the conjugating element
    metric: np.ndarray           # conjugated metric, fixed by the involution
    residual: float              # commutator norm with the involution action
    det_involution: float        # determinant of the involution action on p


def _plane_objective(space: HomogeneousSpace, basis_x: np.ndarray,
                     basis_y: np.ndarray):
    """Squared bracket norm over the Gram determinant, on (coeff_x, coeff_y).

    The value depends only on the plane spanned by the two vectors, so the
    parameterization has flat directions but no spurious minima.
    """
    c3 = space.ambient.structure_constants
    pt = space.p_basis.T
    pb = space.p_basis
    nx = basis_x.shape[0]

    def fun(v):
        x = basis_x.T @ v[:nx]
        y = basis_y.T @ v[nx:]
        xa, ya = pt @ x, pt @ y
        c = np.einsum("i,j,ijk->k", xa, ya, c3)
        num = c @ c
        xx, yy, xy = x @ x, y @ y, x @ y
        den = xx * yy - xy * xy
        if den < 1e-14:
            return num / 1e-14, np.zeros_like(v)
        f = num / den
        gx = 2 * (pb @ np.einsum("i,j,ijk->k", ya, c, c3))
        gy = 2 * (pb @ np.einsum("i,j,ijk->k", c, xa, c3))
        dx = 2 * yy * x - 2 * xy * y
        dy = 2 * xx * y - 2 * xy * x
        return f, np.concatenate([basis_x @ (gx - f * dx),
                                  basis_y @ (gy - f * dy)]) / den

    return fun


def _minimize_pair(space, basis_x, basis_y, v0):
    fun = _plane_objective(space, basis_x, basis_y)
    f0, _ = fun(v0)
    if f0 < ACCEPT:
        return f0, v0
    res = minimize(fun, v0, jac=True, method="BFGS",
                   options={"gtol": 1e-14, "maxiter": 300})
    return float(res.fun), res.x


def _metric_eigenspaces(metric: np.ndarray):
    vals, vecs = np.linalg.eigh(metric)
    spaces = []
    for idx in cluster_values(vals):
        spaces.append((float(np.mean(vals[idx])), vecs[:, idx].T.copy()))
    return spaces


def commuting_witness(space: HomogeneousSpace, metric: np.ndarray,
                      seed: int = 0, starts: int = 32) -> PlaneWitness:
    """Search for two commuting eigenvectors of the metric.

    Examines every pair of metric eigenspaces with a multistart quasi-Newton
    descent of the plane objective.  An objective below 1e-9 is accepted, one
    above 1e-6 rejected; results in between trigger a warning.
    """
    eig = _metric_eigenspaces(metric)
    cv = Curvature(space, metric)
    pairs = []
    for i in range(len(eig)):
        for j in range(i, len(eig)):
            if i == j and eig[i][1].shape[0] < 2:
                continue
            pairs.append((i, j))
    best = np.inf
    for pidx, (i, j) in enumerate(pairs):
        bx, by = eig[i][1], eig[j][1]
        n_starts = 1 if (bx.shape[0] == 1 and by.shape[0] == 1) else starts
        for s in range(n_starts):
            rng = rng_from(seed, pidx, s)
            v0 = rng.standard_normal(bx.shape[0] + by.shape[0])
            f, v = _minimize_pair(space, bx, by, v0)
            best = min(best, f)
            if f < ACCEPT:
                x = bx.T @ v[:bx.shape[0]]
                y = by.T @ v[bx.shape[0]:]
                y = y - (x @ y) / (x @ x) * x
                x /= np.linalg.norm(x)
                y /= np.linalg.norm(y)
                return PlaneWitness(
                    kind="commuting", found=True, objective=f,
                    numerator=cv.numerator(x, y), x=x, y=y,
                    message=f"commuting eigenvector pair in eigenspaces "
                            f"({i}, {j})")
    if best < REJECT:
        warnings.warn(f"commuting search is ambiguous (best objective "
                      f"{best:.3e}); treating as not found", stacklevel=2)
        msg = f"ambiguous: best objective {best:.3e} at {starts} starts"
    else:
        msg = f"no commuting pair found at {starts} starts per eigenspace pair"
    return PlaneWitness(kind="commuting", found=False, objective=float(best),
                        numerator=None, x=None, y=None, message=msg)


def min_eigenvalue_witness(space: HomogeneousSpace, metric: np.ndarray,
                           seed: int = 0, draws: int = 64) -> PlaneWitness:
    """Witness plane built from the smallest metric eigenvalue.

    Finds x in the bottom eigenspace and z in p with [x, z] = 0, then checks
    that the plane (x, G^-1 z) has numerator at most 1e-10.
    """
    eig = _metric_eigenspaces(metric)
    lam, bottom = eig[0]
    cv = Curvature(space, metric)
    pt = space.p_basis.T
    c3 = space.ambient.structure_constants

    x = z = None
    objective = np.inf
    if bottom.shape[0] == 1:
        x = bottom[0] / np.linalg.norm(bottom[0])
        ad = np.einsum("i,ijk->jk", pt @ x, c3).T   # columns [x, e_k] ambient
        mat = ad @ pt
        u, s, vt = np.linalg.svd(mat)
        sigma2 = s[-2] if len(s) >= 2 else np.inf
        objective = float(sigma2 ** 2)
        if sigma2 < 1e-8:
            z = vt[-2]
        elif sigma2 < REJECT:
            warnings.warn(f"min-eigenvalue kernel is ambiguous (second "
                          f"singular value {sigma2:.3e})", stacklevel=2)
    else:
        full = np.eye(space.dim_p)
        for s_idx in range(draws):
            rng = rng_from(seed, s_idx)
            v0 = np.concatenate([rng.standard_normal(bottom.shape[0]),
                                 rng.standard_normal(space.dim_p)])
            f, v = _minimize_pair(space, bottom, full, v0)
            objective = min(objective, f)
            if f < ACCEPT:
                x = bottom.T @ v[:bottom.shape[0]]
                x /= np.linalg.norm(x)
                z = v[bottom.shape[0]:]
                break
        else:
            if objective < REJECT:
                warnings.warn(f"min-eigenvalue search is ambiguous (best "
                              f"objective {objective:.3e})", stacklevel=2)

    if z is None:
        return PlaneWitness(
            kind="min-eigenvalue", found=False, objective=float(objective),
            numerator=None, x=None, y=None,
            message=f"no commuting partner for the bottom eigenspace "
                    f"(eigenvalue {lam:.6g})")

    z = z - (x @ z) * x
    y = cv.gm_inv @ z
    y /= np.linalg.norm(y)
    num = cv.numerator(x, y)
    if num > NONPOS_TOL:
        return PlaneWitness(
            kind="min-eigenvalue", found=False, objective=float(objective),
            numerator=num, x=x, y=y,
            message=f"commuting partner found but numerator {num:.3e} "
                    f"exceeds {NONPOS_TOL}")
    return PlaneWitness(
        kind="min-eigenvalue", found=True, objective=float(objective),
        numerator=num, x=x, y=y,
        message=f"nonpositive plane at the bottom eigenvalue {lam:.6g}")


def _subalgebra_rank(space: HomogeneousSpace, seed: int = 0,
                     draws: int = 8) -> int:
    hb = space.h_basis
    if hb.shape[0] == 0:
        return 0
    sub = np.einsum("ai,bj,ck,ijk->abc", hb, hb, hb,
                    space.ambient.structure_constants)
    rng = rng_from(seed)
    best = hb.shape[0]
    for _ in range(draws):
        v = rng.standard_normal(hb.shape[0])
        ad = np.tensordot(v, sub, axes=(0, 0)).T
        s = np.linalg.svd(ad, compute_uv=False)
        best = min(best, int(np.sum(s < 1e-8 * max(1.0, s[0]))))
    return best


def rank_parity_check(space: HomogeneousSpace) -> RankParity:
    """Rank difference test: positive curvature needs difference 0 or 1."""
    rk = rank(space.ambient)
    rh = _subalgebra_rank(space)
    diff = rk - rh
    consistent = diff in (0, 1) and (space.dim_p - diff) % 2 == 0
    return RankParity(rank_ambient=rk, rank_isotropy=rh, dim_p=space.dim_p,
                      difference=diff, parity_consistent=consistent)


def symmetrize_sp2_31(space: HomogeneousSpace,
                      metric: np.ndarray) -> Sp2Symmetrization:
    """Conjugate a metric on the (3, 1) circle quotient into symmetric form.

    The normalizer element a = diag(j, j) flips the circle and acts on p with
    determinant -1.  Conjugating by a diagonal phase element b makes the
    metric's off-diagonal phase on the 4-dimensional weight-2 component real,
    after which the metric commutes with the action of a.
    """
    if space.label != "sp2circle" or space.params_dict != {"p": 3, "q": 1}:
        raise ValueError("symmetrization applies to the (3, 1) circle "
                         "quotient of the rank-two symplectic group only")
    from .isotypic import decompose
    from .algebra import coords_of

    alg = space.ambient
    a_mat = quaternion_to_complex(np.zeros((2, 2)), np.eye(2))
    ga = group_element(alg, a_mat)
    img = ga.ad @ space.p_basis.T
    aa = space.p_basis @ img
    if np.linalg.norm(img - space.p_basis.T @ aa) > 1e-9:
        raise RuntimeError("involution does not preserve p")
    det_a = float(np.linalg.det(aa))

    dec = decompose(space)
    comp2 = next(c for c in dec.components if c.weight == 2)

    f1 = space.p_coords(coords_of(alg, quaternion_to_complex(
        np.zeros((2, 2)), np.diag([0.0, 1.0]))))
    f2 = space.p_coords(coords_of(alg, quaternion_to_complex(
        np.array([[0.0, -1.0], [1.0, 0.0]]), np.zeros((2, 2)))))
    f1 /= np.linalg.norm(f1)
    f2 /= np.linalg.norm(f2)
    proj = comp2.basis.T @ comp2.basis
    if (np.linalg.norm(proj @ f1 - f1) > 1e-9
            or np.linalg.norm(proj @ f2 - f2) > 1e-9):
        raise RuntimeError("reference vectors left the weight-2 component")

    t_act = space.p_basis @ ad_operator(alg, space.torus_generator) @ space.p_basis.T
    jmat = t_act / 2.0
    h12 = complex(f1 @ metric @ f2, f1 @ metric @ (jmat @ f2))
    phi = float(np.angle(h12)) if abs(h12) > 1e-14 else 0.0

    best = None
    for psi in (phi / 2, -phi / 2, phi / 2 + np.pi / 2, -phi / 2 + np.pi / 2):
        phase = np.exp(1j * psi)
        b_mat = np.diag([phase, phase, phase.conjugate(), phase.conjugate()])
        gb = group_element(alg, b_mat)
        conj = conjugate_metric(space, metric, gb)
        r = float(np.max(np.abs(conj @ aa - aa @ conj)))
        if best is None or r < best[1]:
            best = (psi, r, conj)
    psi, residual, conj = best
    if residual > 1e-8:
        raise RuntimeError(f"symmetrization failed (residual {residual:.3e})")
    return Sp2Symmetrization(psi=psi, metric=conj, residual=residual,
                             det_involution=det_a)
