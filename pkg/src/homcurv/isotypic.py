"""Isotypic decomposition of the isotropy action on the complement p.

The decomposition is computed numerically: a random symmetric element of the
commutant of the isotropy action is diagonalized, its eigenspaces give the
irreducible summands, and summands carrying equivalent representations are
merged into isotypic components.  A consistency check against the commutant
dimension guards the whole pipeline against accidental eigenvalue collisions.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import ad_operator
from .numerics import ClusterError, cluster_values, nullspace, rng_from, symmetric_basis
from .spaces import HomogeneousSpace, isotropy_actions

_END_DIM_TO_TYPE = {1: "real", 2: "complex", 4: "quaternionic"}


@dataclass(frozen=True)
class IsotypicComponent:
    basis: np.ndarray                 # (dim, dim_p) orthonormal rows in p-coordinates
    summands: tuple[np.ndarray, ...]  # one orthonormal row block per irreducible copy
    multiplicity: int
    division_type: str                # "real" | "complex" | "quaternionic"
    weight: int | None                # nonnegative integer when a torus generator exists

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def summand_dim(self) -> int:
        return self.summands[0].shape[0]

    def commutant_contribution(self) -> int:
        m = self.multiplicity
        return {"real": m * (m + 1) // 2,
                "complex": m * m,
                "quaternionic": m * (2 * m - 1)}[self.division_type]


@dataclass(frozen=True)
class IsotypicDecomposition:
    label: str
    dim_p: int
    components: tuple[IsotypicComponent, ...]
    commutant_dim: int

    def dims(self) -> tuple[int, ...]:
        return tuple(c.dim for c in self.components)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(c.multiplicity for c in self.components)

    def weights(self) -> tuple[int | None, ...]:
        return tuple(c.weight for c in self.components)

    def division_types(self) -> tuple[str, ...]:
        return tuple(c.division_type for c in self.components)


def symmetric_commutant_basis(space: HomogeneousSpace) -> np.ndarray:
    """Frobenius-orthonormal basis (stack of matrices) of the symmetric
    matrices on p commuting with every isotropy action."""
    n = space.dim_p
    sym = symmetric_basis(n)
    acts = isotropy_actions(space)
    if not acts:
        return sym
    rows = []
    for a in acts:
        # commutator of a with each symmetric basis element, flattened
        rows.append((np.einsum("ij,kjl->kil", a, sym)
                     - np.einsum("kij,jl->kil", sym, a)).reshape(len(sym), -1))
    mat = np.hstack(rows)                    # (n_sym, n*n*n_acts)
    coeffs = nullspace(mat.T)                # rows: coefficient vectors
    return np.einsum("ck,kij->cij", coeffs, sym)


def _hom_dimension(di: int, dj: int,
                   acts_i: list[np.ndarray], acts_j: list[np.ndarray]) -> int:
    """Dimension of the space of intertwiners T with A_j T = T A_i for all v."""
    blocks = []
    for ai, aj in zip(acts_i, acts_j):
        blocks.append(np.kron(aj, np.eye(di)) - np.kron(np.eye(dj), ai.T))
    if not blocks:
        return di * dj
    return nullspace(np.vstack(blocks)).shape[0]


def _h_is_abelian(space: HomogeneousSpace) -> bool:
    hb = space.h_basis
    if hb.shape[0] < 2:
        return True
    br = np.einsum("ai,bj,ijk->abk", hb, hb, space.ambient.structure_constants)
    return float(np.max(np.abs(br))) < 1e-10


def _component_weight(space: HomogeneousSpace, basis_p: np.ndarray) -> int:
    ad = ad_operator(space.ambient, space.torus_generator)
    act = space.p_basis @ ad @ space.p_basis.T
    restr = basis_p @ act @ basis_p.T
    imag = np.abs(np.linalg.eigvals(restr).imag)
    wi = int(round(np.max(imag)))
    if abs(np.max(imag) - wi) > 1e-6:
        raise RuntimeError(f"non-integer torus weight {np.max(imag)!r} on a component")
    if np.any(np.abs(imag - wi) > 1e-6):
        raise RuntimeError("mixed torus weights inside one component")
    return wi


def decompose(space: HomogeneousSpace, seed: int = 0) -> IsotypicDecomposition:
    """Split p into isotypic components of the isotropy action.

    Raises ClusterError when the random separating element has ambiguous
    eigenvalue gaps or fails the commutant-dimension cross-check; a different
    seed resolves such draws.
    """
    n = space.dim_p
    acts = isotropy_actions(space)
    comm = symmetric_commutant_basis(space)
    rng = rng_from(seed)
    draw = np.einsum("c,cij->ij", rng.standard_normal(len(comm)), comm)
    vals, vecs = np.linalg.eigh(draw)
    clusters = cluster_values(vals)

    summands = []
    for idx in clusters:
        summands.append(vecs[:, idx].T.copy())
    # invariance of each eigenspace under every isotropy action
    for u in summands:
        for a in acts:
            img = a @ u.T
            leak = np.linalg.norm(img - u.T @ (u @ img))
            if leak > 1e-8:
                raise ClusterError(
                    "separating element eigenspace is not invariant; "
                    "re-run with a different seed")

    restricted = [[u @ a @ u.T for a in acts] for u in summands]
    dims = [u.shape[0] for u in summands]
    m = len(summands)
    classes: list[list[int]] = []
    for i in range(m):
        placed = False
        for cls in classes:
            j = cls[0]
            if dims[i] != dims[j]:
                continue
            if _hom_dimension(dims[i], dims[j], restricted[i], restricted[j]) > 0:
                cls.append(i)
                placed = True
                break
        if not placed:
            classes.append([i])

    use_weights = space.torus_generator is not None and _h_is_abelian(space)
    components = []
    for cls in classes:
        j = cls[0]
        end_dim = _hom_dimension(dims[j], dims[j], restricted[j], restricted[j])
        if end_dim not in _END_DIM_TO_TYPE:
            raise ClusterError(
                f"summand endomorphism dimension {end_dim} is not 1, 2 or 4; "
                "re-run with a different seed")
        basis = np.vstack([summands[i] for i in cls])
        weight = _component_weight(space, basis) if use_weights else None
        components.append(IsotypicComponent(
            basis=basis,
            summands=tuple(summands[i] for i in cls),
            multiplicity=len(cls),
            division_type=_END_DIM_TO_TYPE[end_dim],
            weight=weight,
        ))

    total = sum(c.commutant_contribution() for c in components)
    if total != len(comm):
        raise ClusterError(
            f"commutant dimension check failed ({total} != {len(comm)}); "
            "re-run with a different seed")

    def sort_key(c: IsotypicComponent):
        diag = tuple(np.round(np.einsum("ki,ki->i", c.basis, c.basis), 6))
        return (c.weight if c.weight is not None else -1, c.dim, diag)

    components.sort(key=sort_key)
    return IsotypicDecomposition(
        label=space.label,
        dim_p=n,
        components=tuple(components),
        commutant_dim=len(comm),
    )
