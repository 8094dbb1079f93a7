"""Deciding equivalence of extensions by the matrix criterion.

Two extension data sets with the same (p, lam, mu) are equivalent exactly
when there are automorphism matrices F (for lam) and G (for mu) with

    F @ A1^T  ==  A2^T @ G^                (entrywise mod p**min(lam_i, mu_j))

where G^ is G conjugated by the diagonal p-power matrix of mu. The search
space is finite, so the criterion is decided by exhaustive enumeration of
(F, G) pairs; orbits of the induced action classify all extensions for a
parameter set.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .abelian import PGroupType
from .autgroup import (
    DEFAULT_MAX_CANDIDATES,
    AutMatrix,
    aut_matrices,
    aut_search_space,
    conjugate_by_p_powers,
)
from .errors import BoundExceededError, ValidationError
from .exactmat import IntMatrix
from .extension import (
    ExtensionData,
    iter_normalized_extensions,
    middle_type,
    modulus_matrix,
    normalize,
)

__all__ = [
    "DEFAULT_MAX_TOTAL",
    "DEFAULT_MAX_WITNESSES",
    "Witness",
    "OrbitClassification",
    "are_equivalent",
    "check_witness",
    "apply_witness",
    "canonical_form",
    "classify_all",
]

DEFAULT_MAX_TOTAL = 10**5
DEFAULT_MAX_WITNESSES = DEFAULT_MAX_CANDIDATES


@dataclass(frozen=True)
class Witness:
    """A certifying pair of automorphism matrices for an equivalence."""

    F: AutMatrix
    G: AutMatrix

    def to_json_dict(self) -> dict:
        return {"F": self.F.matrix.to_lists(), "G": self.G.matrix.to_lists()}


@dataclass(frozen=True)
class OrbitClassification:
    """All equivalence classes for one (p, lam, mu): lexicographically least
    representatives, their orbit sizes, and the total count of normalized
    coefficient matrices."""

    representatives: tuple[ExtensionData, ...]
    orbit_sizes: tuple[int, ...]
    total: int

    def to_json_dict(self) -> dict:
        return {
            "total": self.total,
            "classes": [
                {
                    "A": rep.A.to_lists(),
                    "orbit_size": size,
                    "middle_type": list(middle_type(rep).parts),
                }
                for rep, size in zip(self.representatives, self.orbit_sizes)
            ],
        }


def _require_same_context(e1: ExtensionData, e2: ExtensionData) -> None:
    if (e1.p, e1.lam, e1.mu) != (e2.p, e2.lam, e2.mu):
        raise ValidationError(
            "mismatched_context",
            "both extensions must share the same (p, lambda, mu)",
        )


def _transposed_moduli(p: int, lam: PGroupType, mu: PGroupType) -> IntMatrix:
    # l x m pattern: entry (i, j) = p**min(lam_i, mu_j)
    return modulus_matrix(p, lam, mu).transpose()


def _reduce(matrix: IntMatrix, mods: IntMatrix) -> IntMatrix:
    return IntMatrix(
        [[a % m for a, m in zip(ra, rm)] for ra, rm in zip(matrix.data, mods.data)],
        cols=matrix.cols,
    )


def check_witness(e1: ExtensionData, e2: ExtensionData, witness: Witness) -> bool:
    """Verify the criterion equation for a concrete (F, G) pair."""
    _require_same_context(e1, e2)
    mods = _transposed_moduli(e1.p, e1.lam, e1.mu)
    lhs = witness.F.matrix @ e1.A.transpose()
    rhs = e2.A.transpose() @ conjugate_by_p_powers(witness.G)
    return _reduce(lhs, mods) == _reduce(rhs, mods)


def _check_witness_space(e: ExtensionData, max_witnesses: int) -> None:
    space = aut_search_space(e.p, e.lam) * aut_search_space(e.p, e.mu)
    if space > max_witnesses:
        raise BoundExceededError(f"witness space {space} exceeds bound {max_witnesses}")


def are_equivalent(
    ext1: ExtensionData,
    ext2: ExtensionData,
    *,
    use_type_filter: bool = True,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
) -> Witness | None:
    """Search for a witness pair; returns one iff the extensions are
    equivalent, else None.

    ``use_type_filter`` short-circuits the negative case when the middle
    groups are already non-isomorphic (a necessary condition); disable it to
    force the full witness search.
    """
    _require_same_context(ext1, ext2)
    e1 = normalize(ext1)
    e2 = normalize(ext2)
    if e1.A == e2.A:
        return Witness(AutMatrix.identity(e1.p, e1.lam), AutMatrix.identity(e1.p, e1.mu))
    if use_type_filter and middle_type(e1) != middle_type(e2):
        return None
    _check_witness_space(e1, max_witnesses)
    fs = aut_matrices(e1.p, e1.lam, max_witnesses)
    gs = aut_matrices(e1.p, e1.mu, max_witnesses)
    mods = _transposed_moduli(e1.p, e1.lam, e1.mu)
    a1t = e1.A.transpose()
    a2t = e2.A.transpose()
    # index the right-hand sides; first G wins, so the result matches the
    # first hit of the nested (F outer, G inner) scan
    rhs_first: dict[IntMatrix, AutMatrix] = {}
    for g in gs:
        key = _reduce(a2t @ conjugate_by_p_powers(g), mods)
        rhs_first.setdefault(key, g)
    for f in fs:
        key = _reduce(f.matrix @ a1t, mods)
        g = rhs_first.get(key)
        if g is not None:
            return Witness(f, g)
    return None


def apply_witness(ext: ExtensionData, f: AutMatrix, g: AutMatrix) -> ExtensionData:
    """Transport ext along the pair (F, G): the result is an equivalent,
    normalized extension datum."""
    if (f.p, f.tau) != (ext.p, ext.lam) or (g.p, g.tau) != (ext.p, ext.mu):
        raise ValidationError("mismatched_context", "witness contexts do not match the extension")
    e = normalize(ext)
    mods = _transposed_moduli(e.p, e.lam, e.mu)
    moved = _reduce(f.matrix @ e.A.transpose() @ conjugate_by_p_powers(g), mods)
    return replace(e, A=moved.transpose(), normalized=True)


def canonical_form(
    ext: ExtensionData, *, max_witnesses: int = DEFAULT_MAX_WITNESSES
) -> ExtensionData:
    """The lexicographically least normalized coefficient matrix in the
    orbit of ext; equal canonical forms mean equivalent extensions."""
    e = normalize(ext)
    _check_witness_space(e, max_witnesses)
    fs = aut_matrices(e.p, e.lam, max_witnesses)
    gs = aut_matrices(e.p, e.mu, max_witnesses)
    best = e
    best_key = e.A.flatten()
    for f in fs:
        for g in gs:
            moved = apply_witness(e, f, g)
            key = moved.A.flatten()
            if key < best_key:
                best, best_key = moved, key
    return best


def classify_all(
    p: int,
    lam: PGroupType,
    mu: PGroupType,
    *,
    max_total: int = DEFAULT_MAX_TOTAL,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
) -> OrbitClassification:
    """Partition all normalized coefficient matrices for (p, lam, mu) into
    equivalence orbits.

    Sweeps the matrices in lexicographic order and closes each unvisited one
    under the full set of witness transformations, so every class is
    discovered at its lexicographically least member.
    """
    mods = modulus_matrix(p, lam, mu)
    total = 1
    for m in mods.flatten():
        total *= m
    if total > max_total:
        raise BoundExceededError(f"{total} coefficient matrices exceed bound {max_total}")
    space = aut_search_space(p, lam) * aut_search_space(p, mu)
    if space > max_witnesses:
        raise BoundExceededError(f"witness space {space} exceeds bound {max_witnesses}")
    fs = aut_matrices(p, lam, max_witnesses)
    gs = aut_matrices(p, mu, max_witnesses)
    transforms = [(f, g) for f in fs for g in gs]

    visited: set[tuple[int, ...]] = set()
    reps: list[ExtensionData] = []
    sizes: list[int] = []
    for ext in iter_normalized_extensions(p, lam, mu):
        start = ext.A.flatten()
        if start in visited:
            continue
        orbit = {start}
        frontier = [ext]
        while frontier:
            nxt = []
            for cur in frontier:
                for f, g in transforms:
                    moved = apply_witness(cur, f, g)
                    key = moved.A.flatten()
                    if key not in orbit:
                        orbit.add(key)
                        nxt.append(moved)
            frontier = nxt
        visited |= orbit
        reps.append(ext)
        sizes.append(len(orbit))
    return OrbitClassification(
        representatives=tuple(reps), orbit_sizes=tuple(sizes), total=total
    )
